#pragma once

// Discrete Morse matchings on the Hasse diagram: the greedy pivot schedule,
// acyclicity with cycle witnesses, and the critical-cell census.

#include <unicx/bigint.hpp>
#include <unicx/scomplex.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace unicx {

enum class MatchingFlavor {
  vector_flavor,  ///< pivot may be added when pivot ∉ σ
  line_flavor,    ///< pivot may be added when pivot ⊄ span(σ)
};

struct MatchedPair {
  Simplex lower;
  Simplex upper;  ///< lower ∪ {pivot}
  VertexId pivot;
  std::size_t step;  ///< 0-based position of the pivot in the schedule
};

struct Matching {
  std::vector<VertexId> pivot_schedule;
  std::vector<MatchedPair> pairs;
};

/// Step k pairs every unmatched σ with σ ∪ {pivots[k]} when that is a simplex,
/// is itself unmatched, and the flavor condition holds.  The empty simplex is
/// never matched.  line_flavor needs coordinate labels.
Matching greedy_matching(const SimplicialComplex& k, std::span<const VertexId> pivots, MatchingFlavor flavor);

/// Throws InputError unless every pair is a codimension-one face pair of K
/// differing by its pivot and no simplex is used twice.
void validate_matching(const SimplicialComplex& k, const Matching& m);

struct AcyclicityResult {
  bool acyclic = true;
  /// Closed walk σ_0 → σ_1 → … → σ_0 (first node not repeated) in the
  /// modified Hasse diagram when a cycle exists.
  std::vector<Simplex> cycle;
};

/// Cycle search on the Hasse diagram with matched edges reversed.
AcyclicityResult check_acyclic(const SimplicialComplex& k, const Matching& m);

struct CriticalCensus {
  std::map<int, std::size_t> counts;  ///< dimension → number of critical cells
  std::vector<Simplex> cells;         ///< sorted by dimension, then lexicographically
};

CriticalCensus critical_cells(const SimplicialComplex& k, const Matching& m);

struct MorseSummary {
  std::size_t pair_count = 0;
  CriticalCensus census;
  bool acyclic = true;
  /// χ(K) equals the alternating count of critical cells.
  bool euler_consistent = true;
  /// Critical cells are one vertex plus top-dimensional cells only.
  bool vertex_plus_top = true;
  /// Top cells containing no pivot.  Reported next to the census, not asserted.
  BigInt pivot_avoiding_top = 0;
};

/// Runs matching, acyclicity and census.  Throws VerificationError carrying
/// the cycle when the matching is not acyclic.
MorseSummary morse_summary(const SimplicialComplex& k, std::span<const VertexId> pivots, MatchingFlavor flavor);

std::string describe_cycle(const SimplicialComplex& k, const std::vector<Simplex>& cycle);

/// w(σ) = sum over vertices of (1 + position of the vertex in `order`).
BigInt matching_weight(const Simplex& sigma, std::span<const VertexId> order);

}  // namespace unicx
