#pragma once

// The universal complexes X(F_p^n) (unimodular vector sets) and K(F_p^n)
// (unimodular line sets), their closed-form f-vectors and sphere counts, and
// the projection φ: X → K with its sections ψ.

#include <unicx/bigint.hpp>
#include <unicx/fplin.hpp>
#include <unicx/scomplex.hpp>

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace unicx {

enum class Variant { X, K };

std::string to_string(Variant v);
/// Accepts "X" or "K" (case-insensitive); throws InputError otherwise.
Variant parse_variant(const std::string& s);

struct UniversalKind {
  Variant variant;
  std::int64_t p;
  int n;
};

struct SphereCount {
  int dimension;  ///< sphere dimension; -1 stands for the empty complex S^{-1}
  BigInt count;
};

inline constexpr std::size_t kDefaultSimplexBudget = 10'000'000;

/// Closed-form f-vector of the complex, or of the link of any i-simplex.
/// Throws InputError for bad parameters and VerificationError if a division
/// in the formula is not exact.
FVector formula_f_vector(const UniversalKind& kind, std::optional<int> link_dim = std::nullopt);

/// Number of top-dimensional spheres in the wedge, from the alternating sum
/// of the formula f-vector.
SphereCount sphere_count(const UniversalKind& kind, std::optional<int> link_dim = std::nullopt);

/// Enumerates every simplex by incremental extension.  Vertex labels are
/// FpVector (X) or FpLine (K) in lexicographic order.  Throws ResourceError
/// naming (p,n) when the simplex count exceeds `budget`.
SimplicialComplex build_universal(const UniversalKind& kind, std::size_t budget = kDefaultSimplexBudget);

/// Coordinates of an F_p or Z label as integers, with the modulus (0 for Z).
struct LabelCoordinates {
  std::vector<BigInt> coords;
  std::int64_t modulus;
};
/// Throws InputError for symbolic labels.
LabelCoordinates label_coordinates(const Label& label);

/// Rank of the span of the labels of `vertices` (over F_p or Q).
std::size_t label_rank(const SimplicialComplex& k, std::span<const VertexId> vertices);

/// Pivot schedule for the matchings U and V: the vertices labelled by the
/// standard basis (lines L(e_i) or vectors e_i), in order.
std::vector<VertexId> standard_pivots(const SimplicialComplex& k);

/// Pivot schedule for U' and V' on lnk = link_K(σ): the standard basis
/// vectors that greedily extend the labels of σ to a basis, in order, as
/// vertices of lnk.
std::vector<VertexId> link_pivots(const SimplicialComplex& k, const Simplex& sigma, const SimplicialComplex& lnk);

/// φ on vertices: X vertex id → K vertex id.
std::vector<VertexId> phi_vertex_map(const SimplicialComplex& x, const SimplicialComplex& k);
Simplex project_phi(const SimplicialComplex& x, const SimplicialComplex& k, const Simplex& sigma);

/// ψ on vertices: K vertex id → X vertex id, using `choice` where given and
/// the canonical generator elsewhere.  Throws InputError when a chosen
/// generator is not on its line.
std::vector<VertexId> section_psi(const SimplicialComplex& k, const SimplicialComplex& x,
                                  const std::unordered_map<FpLine, FpVector>& choice = {});

/// Image of a simplex under a vertex map.
Simplex apply_vertex_map(std::span<const VertexId> map, const Simplex& sigma);

}  // namespace unicx
