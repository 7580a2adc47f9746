#pragma once

// Shelling orders: verification, the inductive construction for the universal
// complexes over F_p, and the shiftedness test.

#include <unicx/scomplex.hpp>
#include <unicx/universal_fp.hpp>

#include <optional>
#include <vector>

namespace unicx {

struct ShellingCheck {
  bool valid = true;
  /// 1-based position of the first facet whose intersection with the earlier
  /// facets is not pure of codimension one.
  std::optional<std::size_t> failing_index;
};

/// Throws InputError if K is not pure or `order` is not a permutation of the
/// facets of K.
ShellingCheck verify_shelling(const SimplicialComplex& k, std::span<const Simplex> order);

/// Facet order of X(F_p^n) or K(F_p^n) built by induction on n.  `k` must be
/// the output of build_universal(kind).  Throws VerificationError with the
/// failing index if the order does not verify.
std::vector<Simplex> construct_shelling_fp(const UniversalKind& kind, const SimplicialComplex& k);

struct ShiftedResult {
  bool shifted = false;
  /// When shifted: label[v] in 1..m, closed under replacing a vertex of a
  /// simplex by one with a smaller label.
  std::vector<std::size_t> labelling;
};

/// Throws ResourceError when K has more than `max_vertices` vertices.
ShiftedResult is_shifted(const SimplicialComplex& k, std::size_t max_vertices = 10);

/// Facets sorted lexicographically by their label sequences under `labelling`.
std::vector<Simplex> labelled_lex_order(const SimplicialComplex& k, const std::vector<std::size_t>& labelling);

}  // namespace unicx
