#pragma once

// Integer side: unimodularity over Z, the line well-order, truncated universal
// complexes over Z, the critical family σ_k, and quasitoric pairs.

#include <unicx/bigint.hpp>
#include <unicx/scomplex.hpp>
#include <unicx/universal_fp.hpp>
#include <unicx/zvector.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace unicx {

/// True iff the vectors span a direct summand of rank equal to their count:
/// the Smith form of the matrix with the vectors as rows is all ones.
bool is_unimodular_z(std::span<const ZVector> vectors);

/// Every line whose primitive generator has 1-norm at most max_norm, in the
/// line order.
std::vector<ZLine> enumerate_z_lines(int n, int max_norm);

/// Full subcomplex of X(Z^n) or K(Z^n) on the vertices of 1-norm at most
/// max_norm.  K vertices follow the line order; X vertices follow it too, the
/// canonical generator before its negative.
SimplicialComplex build_truncated_universal_z(Variant variant, int n, int max_norm,
                                              std::size_t budget = kDefaultSimplexBudget);

/// σ_k = {L(e_1 + k e_2), L(2e_1 + (2k-1)e_2), L(e_1 + e_3), …, L(e_1 + e_n)}.
std::vector<ZLine> critical_family_sigma(int n, int k);

struct QuasitoricPair {
  SimplicialComplex dual_complex;
  std::vector<Simplex> facets;  ///< facet order used when reporting a witness
  IntMatrix lambda;             ///< n × m, column i belongs to vertex i
};

/// Facet-list block, a line reading `lambda`, then n rows of m integers.
QuasitoricPair read_quasitoric_pair(std::istream& in);
QuasitoricPair parse_quasitoric_pair(const std::string& text);

struct QuasitoricCheck {
  bool valid = true;
  std::optional<Simplex> failing_facet;
  BigInt failing_determinant = 0;
};

/// Every facet minor must have determinant ±1.  Throws InputError on shape
/// mismatch or an impure dual complex.
QuasitoricCheck validate_quasitoric_pair(const QuasitoricPair& pair);

/// Vertex i ↦ column i of Λ.  Throws InputError on an invalid pair.
std::vector<ZVector> pair_to_simplicial_map(const QuasitoricPair& pair);

}  // namespace unicx
