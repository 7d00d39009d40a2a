#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diagramkit/rational.hpp"

namespace diagramkit {

// {c - a/k : k >= k_min} intersected with [0, 1]; increasing in k with
// supremum c (never a member itself).
struct CoefficientFamily {
  Rational c;
  Rational a;
  long k_min = 1;

  Rational member(long k) const { return c - a / k; }
};

/// A set of rationals in [0,1] that satisfies the descending chain
/// condition by construction: a finite part plus finitely many increasing
/// families.
class CoefficientSet {
 public:
  CoefficientSet() = default;
  CoefficientSet(std::vector<Rational> finite, std::vector<CoefficientFamily> families);

  // {1/12, ..., 11/12} together with {1 - 1/k : k >= 2}.
  static CoefficientSet standard();

  // Comma separated items: "p/q" elements, "fam(c,a,kmin)" families, or
  // the single word "standard". Throws std::invalid_argument.
  static CoefficientSet parse(const std::string& text);

  const std::vector<Rational>& finite_part() const { return finite_; }
  const std::vector<CoefficientFamily>& families() const { return families_; }

  std::string describe() const;

 private:
  std::vector<Rational> finite_;
  std::vector<CoefficientFamily> families_;
};

bool contains(const CoefficientSet& s, const Rational& x);

// Least element of s in (0, 1].
std::optional<Rational> min_positive(const CoefficientSet& s);

// Sorted s intersected with [0, t]. Throws InfiniteTail when t >= c for some
// family.
std::vector<Rational> below_threshold(const CoefficientSet& s, const Rational& t);

struct QuotientImage {
  std::vector<Rational> values;  // sorted, distinct
  bool complete = false;         // false when some family had to be cut off
};

/// Values 1 - (1 - sum n_j b_j)/m in [0,1] with m <= max_m, at most
/// max_terms summands (zero allowed), 1 <= n_j <= max_n and b_j in s.
/// Families are cut off at k < k_min + max(max_m, max_n).
QuotientImage hurwitz_quotient_transform(const CoefficientSet& s, int max_m, int max_terms, int max_n);

struct ChainReport {
  std::size_t longest_decreasing = 0;    // longest strictly decreasing subsequence
  std::vector<Rational> decreasing_chain;
  std::size_t longest_nondecreasing = 0;  // the subsequence every DCC sample keeps
  bool within_bound = true;               // longest_decreasing <= chain_len
};

ChainReport is_dcc_witnessed(const std::vector<Rational>& values, std::size_t chain_len);

}  // namespace diagramkit
