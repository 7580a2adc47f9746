#pragma once

// Buchstaber invariants: chromatic numbers, the closed formula for graphs,
// nondegenerate maps into K(F_p^r) by search, and the ζ/θ bounds.

#include <unicx/bigint.hpp>
#include <unicx/scomplex.hpp>

#include <optional>
#include <string>
#include <vector>

namespace unicx {

struct Coloring {
  std::size_t gamma = 0;
  std::vector<std::size_t> colour;  ///< colour[v] in 0..gamma-1
};

/// Exact γ(K) by backtracking colouring of the 1-skeleton.  Throws
/// ResourceError above `max_vertices`.
Coloring chromatic_number(const SimplicialComplex& k, std::size_t max_vertices = 24);

/// m - ⌈log_p((p-1)γ + 1)⌉ for a complex of dimension at most one.
BigInt s_fp_graph(const SimplicialComplex& graph, std::int64_t p);

struct NondegenerateMap {
  int rank = 0;                  ///< r: the target is K(F_p^r)
  std::vector<FpLine> image;     ///< image[v] for every vertex v
};

struct SearchLimits {
  std::size_t max_vertices = 12;
  int max_rank = 4;
};

/// Least r <= r_max admitting a nondegenerate map K → K(F_p^r), with the
/// first such map in search order, or nullopt.  For complexes of dimension
/// at most one, throws VerificationError if the outcome for some r disagrees
/// with γ <= (p^r - 1)/(p - 1).
std::optional<NondegenerateMap> min_rank_search(const SimplicialComplex& k, std::int64_t p, int r_max,
                                                const SearchLimits& limits = {});

/// True iff every simplex maps to pairwise distinct, linearly independent lines.
bool is_nondegenerate(const SimplicialComplex& k, const NondegenerateMap& map);

struct BuchstaberReport {
  std::size_t m = 0;
  std::size_t gamma = 0;
  BigInt lower = 0;         ///< m - γ
  BigInt upper = 0;         ///< m - dim K - 1
  BigInt coloring_upper = 0;  ///< m - ⌈log_p((p-1)γ + 1)⌉
  std::optional<BigInt> s_fp;
  std::string method;       ///< "formula", "search" or "bounds-only"
};

/// Throws VerificationError if a computed s_fp leaves [lower, upper].
BuchstaberReport buchstaber_bounds(const SimplicialComplex& k, std::int64_t p, const SearchLimits& limits = {});

struct ZetaThetaBounds {
  BigInt zeta_lower, zeta_upper;
  BigInt theta_lower, theta_upper;
  /// Bounds at n do not exceed the bounds at n + 1.
  bool monotone = true;
};

ZetaThetaBounds zeta_theta_bounds(std::int64_t p, std::int64_t q, int n);

}  // namespace unicx
