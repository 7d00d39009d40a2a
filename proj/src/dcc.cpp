#include "diagramkit/dcc.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "diagramkit/errors.hpp"

namespace diagramkit {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

// Smallest integer k >= k_min with c - a/k >= lower (strict when `strict`).
long first_index_at_least(const CoefficientFamily& f, const Rational& lower, bool strict) {
  // c - a/k >= lower  <=>  k >= a/(c - lower), since c > lower here.
  const Rational bound = f.a / (f.c - lower);
  mpz_class k;
  mpz_cdiv_q(k.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
  long idx = std::max(f.k_min, k.get_si());
  if (strict && f.member(idx) == lower) ++idx;
  return idx;
}

}  // namespace

CoefficientSet::CoefficientSet(std::vector<Rational> finite, std::vector<CoefficientFamily> families)
    : finite_(std::move(finite)), families_(std::move(families)) {
  for (const auto& x : finite_) {
    if (x < 0 || x > 1) throw std::invalid_argument("finite element " + to_string(x) + " outside [0,1]");
  }
  std::sort(finite_.begin(), finite_.end());
  finite_.erase(std::unique(finite_.begin(), finite_.end()), finite_.end());
  for (const auto& f : families_) {
    if (f.c <= 0 || f.c > 1) throw std::invalid_argument("family supremum must lie in (0,1]");
    if (f.a <= 0) throw std::invalid_argument("family step a must be positive");
    if (f.k_min < 1) throw std::invalid_argument("family k_min must be >= 1");
  }
}

CoefficientSet CoefficientSet::standard() {
  std::vector<Rational> finite;
  for (int i = 1; i <= 11; ++i) {
    Rational q(i, 12);
    q.canonicalize();
    finite.push_back(q);
  }
  return CoefficientSet(std::move(finite), {{Rational(1), Rational(1), 2}});
}

static std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> items;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth < 0) throw std::invalid_argument("unbalanced ')' in set description");
    if (ch == ',' && depth == 0) {
      items.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced '(' in set description");
  items.push_back(trim(cur));
  return items;
}

CoefficientSet CoefficientSet::parse(const std::string& text) {
  if (trim(text) == "standard") return standard();
  std::vector<Rational> finite;
  std::vector<CoefficientFamily> families;
  for (const auto& item : split_top_level(text)) {
    if (item.empty()) throw std::invalid_argument("empty item in set description");
    if (item.rfind("fam(", 0) == 0 && item.back() == ')') {
      const auto parts = split_top_level(item.substr(4, item.size() - 5));
      if (parts.size() != 3) throw std::invalid_argument("fam(c,a,kmin) needs three arguments");
      const Rational kmin = parse_rational(parts[2]);
      if (!is_integer(kmin)) throw std::invalid_argument("fam k_min must be an integer");
      families.push_back({parse_rational(parts[0]), parse_rational(parts[1]), kmin.get_num().get_si()});
    } else {
      finite.push_back(parse_rational(item));
    }
  }
  return CoefficientSet(std::move(finite), std::move(families));
}

std::string CoefficientSet::describe() const {
  std::string out;
  for (const auto& x : finite_) {
    if (!out.empty()) out += ',';
    out += to_string(x);
  }
  for (const auto& f : families_) {
    if (!out.empty()) out += ',';
    out += "fam(" + to_string(f.c) + "," + to_string(f.a) + "," + std::to_string(f.k_min) + ")";
  }
  return out;
}

bool contains(const CoefficientSet& s, const Rational& x) {
  if (x < 0 || x > 1) return false;
  if (std::binary_search(s.finite_part().begin(), s.finite_part().end(), x)) return true;
  for (const auto& f : s.families()) {
    if (x >= f.c) continue;
    const Rational k = f.a / (f.c - x);
    if (is_integer(k) && k >= f.k_min) return true;
  }
  return false;
}

std::optional<Rational> min_positive(const CoefficientSet& s) {
  std::optional<Rational> best;
  auto offer = [&best](const Rational& x) {
    if (x > 0 && x <= 1 && (!best || x < *best)) best = x;
  };
  for (const auto& x : s.finite_part()) offer(x);
  for (const auto& f : s.families()) offer(f.member(first_index_at_least(f, 0, true)));
  return best;
}

std::vector<Rational> below_threshold(const CoefficientSet& s, const Rational& t) {
  for (const auto& f : s.families()) {
    if (t >= f.c) {
      throw InfiniteTail("threshold " + to_string(t) + " is not below the family supremum " + to_string(f.c) +
                         "; infinitely many elements lie below it");
    }
  }
  std::set<Rational> out;
  for (const auto& x : s.finite_part()) {
    if (x <= t) out.insert(x);
  }
  for (const auto& f : s.families()) {
    for (long k = first_index_at_least(f, 0, false); f.member(k) <= t; ++k) out.insert(f.member(k));
  }
  return {out.begin(), out.end()};
}

QuotientImage hurwitz_quotient_transform(const CoefficientSet& s, int max_m, int max_terms, int max_n) {
  if (max_m < 1 || max_terms < 1 || max_n < 1) throw std::invalid_argument("quotient bounds must be >= 1");
  QuotientImage image;
  image.complete = s.families().empty();

  // Only b <= 1 can appear: the sum must stay <= 1 for the value to be >= 0.
  std::set<Rational> pool_set;
  for (const auto& x : s.finite_part()) pool_set.insert(x);
  const long reach = std::max(max_m, max_n);
  for (const auto& f : s.families()) {
    const long start = first_index_at_least(f, 0, false);
    for (long k = start; k < f.k_min + reach; ++k) pool_set.insert(f.member(k));
  }
  const std::vector<Rational> pool(pool_set.begin(), pool_set.end());

  std::set<Rational> sums;  // all sum n_j b_j <= 1 with <= max_terms terms
  std::function<void(std::size_t, int, const Rational&)> extend = [&](std::size_t from, int terms,
                                                                      const Rational& sum) {
    sums.insert(sum);
    if (terms == max_terms) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      for (int n = 1; n <= max_n; ++n) {
        const Rational next = sum + n * pool[i];
        if (next > 1) break;
        extend(i, terms + 1, next);
      }
    }
  };
  extend(0, 0, Rational(0));

  std::set<Rational> values;
  for (const auto& sum : sums) {
    for (int m = 1; m <= max_m; ++m) {
      const Rational v = 1 - (1 - sum) / m;
      if (v >= 0 && v <= 1) values.insert(v);
    }
  }
  image.values.assign(values.begin(), values.end());
  return image;
}

ChainReport is_dcc_witnessed(const std::vector<Rational>& values, std::size_t chain_len) {
  ChainReport r;
  const std::size_t n = values.size();
  // O(n^2) longest subsequences; samples are desk scale.
  std::vector<std::size_t> dec(n, 1), prev(n, n), nondec(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (values[j] > values[i] && dec[j] + 1 > dec[i]) {
        dec[i] = dec[j] + 1;
        prev[i] = j;
      }
      if (values[j] <= values[i]) nondec[i] = std::max(nondec[i], nondec[j] + 1);
    }
  }
  std::size_t end = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (end == n || dec[i] > dec[end]) end = i;
    r.longest_nondecreasing = std::max(r.longest_nondecreasing, nondec[i]);
  }
  if (end != n) {
    r.longest_decreasing = dec[end];
    for (std::size_t i = end; i != n; i = prev[i]) r.decreasing_chain.push_back(values[i]);
    std::reverse(r.decreasing_chain.begin(), r.decreasing_chain.end());
  }
  r.within_bound = r.longest_decreasing <= chain_len;
  return r;
}

}  // namespace diagramkit
