#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "diagramkit/rational.hpp"

namespace diagramkit {

// Dense symmetric matrix over the rationals. Symmetry is checked once, at
// construction; there are no mutators.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t dim);  // zero matrix
  explicit SymMatrix(const std::vector<std::vector<Rational>>& rows);
  static SymMatrix from_integers(const std::vector<std::vector<long>>& rows);

  std::size_t dim() const { return dim_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  // Principal submatrix on the given (distinct) indices, in that order.
  SymMatrix principal(std::span<const std::size_t> indices) const;

  std::vector<Rational> multiply(std::span<const Rational> x) const;

  bool operator==(const SymMatrix&) const = default;

 private:
  friend class SymMatrixBuilder;
  std::size_t dim_ = 0;
  std::vector<Rational> data_;
};

// Mutable staging area that enforces symmetry by writing both halves.
class SymMatrixBuilder {
 public:
  explicit SymMatrixBuilder(std::size_t dim);
  void set(std::size_t i, std::size_t j, const Rational& value);
  SymMatrix build() &&;

 private:
  SymMatrix m_;
};

struct Signature {
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;

  std::size_t dim() const { return positive + zero + negative; }
  auto operator<=>(const Signature&) const = default;
};

std::string to_string(const Signature& s);

// Exact inertia by symmetric (congruence) elimination.
Signature signature(const SymMatrix& m);

// Leading-pivot test; stops at the first pivot that is not negative.
bool is_negative_definite(const SymMatrix& m);

struct SingularReport {
  std::size_t rank = 0;
  bool consistent = false;
  // Nonzero vector with m * kernel = 0.
  std::vector<Rational> kernel;
};

using LinearSolution = std::variant<std::vector<Rational>, SingularReport>;

LinearSolution solve_linear(const SymMatrix& m, std::span<const Rational> rhs);

}  // namespace diagramkit
