#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "diagramkit/errors.hpp"
#include "diagramkit/graph.hpp"
#include "diagramkit/linalg.hpp"

namespace diagramkit {

struct DiscrepancyVector {
  std::vector<Rational> log_discrepancy;  // f_i
  std::vector<Rational> codiscrepancy;    // b_i = 1 - f_i
};

using DiscrepancyResult = std::variant<DiscrepancyVector, SingularReport>;

// Solves (K + sum (1 - f_i) F_i).F_j = 0 for all j.
DiscrepancyResult log_discrepancies(const WeightedGraph& g);

// True iff (K + sum b_i F_i).F_j == 0 for every j.
bool resubstitutes(const WeightedGraph& g, const std::vector<Rational>& codiscrepancy);

class SingularSystem : public Error {
 public:
  explicit SingularSystem(SingularReport report)
      : Error("intersection matrix is singular (rank " + std::to_string(report.rank) + ")"),
        report_(std::move(report)) {}
  const SingularReport& report() const { return report_; }

 private:
  SingularReport report_;
};

enum class SingularityClass {
  terminal,
  canonical,
  eps_log_terminal,
  eps_log_canonical,
  kawamata_log_terminal,
  log_canonical,
  none_of_these,
};

std::string to_string(SingularityClass c);

// How to read "canonical" and "terminal". The default compares the
// discrepancy a = f - 1 with 0 (f >= 1, f > 1); the literal reading reuses
// the log canonical / log terminal inequalities (f >= 0, f > 0).
enum class CanonicalReading { discrepancy, literal };

struct SingularityReport {
  Rational min_log_discrepancy;
  bool terminal = false;
  bool canonical = false;
  bool kawamata_log_terminal = false;
  bool log_canonical = false;
  bool eps_log_terminal = false;
  bool eps_log_canonical = false;
  // First satisfied class in the order of SingularityClass.
  SingularityClass strongest = SingularityClass::none_of_these;
};

// Throws SingularSystem when the intersection matrix is not invertible. An
// empty graph has no exceptional curves and is reported with min f = 1.
SingularityReport classify_singularity(const WeightedGraph& g, const Rational& eps,
                                       CanonicalReading reading = CanonicalReading::discrepancy);

inline constexpr std::size_t kDefaultSubgraphBudget = std::size_t{1} << 20;

struct LogTerminalResult {
  bool log_terminal = true;
  // Smallest violating connected elliptic subgraph (positions in g, sorted);
  // ordered by size, then lexicographically.
  std::vector<std::size_t> witness;
  std::vector<Rational> witness_log_discrepancy;
  std::size_t evaluated = 0;
};

/// Checks that every elliptic subgraph has only positive log discrepancies.
///
/// The discrepancy system of a disconnected subgraph is block diagonal, so
/// only connected vertex subsets are visited. Throws BudgetExceeded when more
/// than `budget` subsets would have to be evaluated.
LogTerminalResult is_log_terminal_graph(const WeightedGraph& g, std::size_t budget = kDefaultSubgraphBudget);

// Calls visit(subset) for every nonempty connected vertex subset exactly
// once; subsets are sorted position lists. Stops early when visit returns
// false.
template <class Visit>
void for_each_connected_subset(const WeightedGraph& g, Visit&& visit);

}  // namespace diagramkit

#include "diagramkit/detail/connected_subsets.hpp"
