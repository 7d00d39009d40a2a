#pragma once

#include <vector>

#include "diagramkit/rational.hpp"

namespace diagramkit {

// coeffs . x <= bound
struct LinearConstraint {
  std::vector<Rational> coeffs;
  Rational bound;
};

struct Interval {
  Rational lo;
  Rational hi;
};

enum class FeasibilityStatus {
  feasible,
  infeasible,
  // No variables, yet some constraint reads 0 <= bound with bound < 0.
  degenerate,
};

struct FeasibilityResult {
  FeasibilityStatus status = FeasibilityStatus::infeasible;
  std::vector<Rational> witness;  // set iff feasible

  bool feasible() const { return status == FeasibilityStatus::feasible; }
};

/// Decides whether some x with box[i].lo <= x_i <= box[i].hi satisfies every
/// constraint, by exact Fourier-Motzkin elimination.
///
/// Variables are eliminated greedily (fewest generated rows first); after
/// each step identical directions keep only the tightest bound, and rows
/// whose origin set is larger than (eliminated + 1) are dropped (Imbert's
/// redundancy criterion). The witness is built by back-substitution taking
/// the smallest admissible value of each variable, so it is deterministic.
FeasibilityResult feasible_box_lp(const std::vector<LinearConstraint>& constraints,
                                  const std::vector<Interval>& box);

bool satisfies(const std::vector<LinearConstraint>& constraints, const std::vector<Interval>& box,
               const std::vector<Rational>& x);

}  // namespace diagramkit
