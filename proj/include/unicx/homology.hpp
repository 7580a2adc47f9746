#pragma once

// Reduced integral simplicial homology by Smith normal form, and Reisner's
// Cohen–Macaulay criterion.

#include <unicx/bigint.hpp>
#include <unicx/linalg.hpp>
#include <unicx/scomplex.hpp>

#include <optional>
#include <string>
#include <vector>

namespace unicx {

/// Columns indexed by d-simplices, rows by (d-1)-simplices, both in sorted
/// order; for d = 0 a single augmentation row of ones.
IntMatrix boundary_matrix(const SimplicialComplex& k, int d);

struct HomologyProfile {
  /// betti[d + 1] and torsion[d + 1] describe H̃_d for d = -1 .. dim K.
  std::vector<BigInt> betti;
  std::vector<std::vector<BigInt>> torsion;
  /// False when some boundary matrix was too wide for the exact SNF; torsion
  /// is then only checked by comparing ranks over Q and F_2, F_3, F_5.
  bool torsion_exact = true;

  BigInt betti_at(int d) const;
  const std::vector<BigInt>& torsion_at(int d) const;
  bool torsion_free() const;
  int max_dim() const { return static_cast<int>(betti.size()) - 2; }
};

struct HomologyOptions {
  std::size_t dense_column_limit = 2000;
  std::size_t simplex_budget = 10'000'000;
};

HomologyProfile reduced_homology(const SimplicialComplex& k, const HomologyOptions& options = {});

struct ReisnerResult {
  bool cohen_macaulay = true;
  /// First failing link: the simplex and the homology degree.
  std::optional<Simplex> witness_simplex;
  std::optional<int> witness_degree;
  std::size_t links_checked = 0;
};

/// Checks H̃_i(link σ) = 0 and torsion-free for 0 <= i < dim link σ, for σ = ∅
/// and every simplex.  With `vertex_transitive` set, one simplex per dimension
/// stands for its orbit.
ReisnerResult reisner_check(const SimplicialComplex& k, bool vertex_transitive = false,
                            const HomologyOptions& options = {});

}  // namespace unicx
