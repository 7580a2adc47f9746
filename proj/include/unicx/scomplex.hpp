#pragma once

// Finite abstract simplicial complexes with every simplex stored explicitly.

#include <unicx/bigint.hpp>
#include <unicx/fplin.hpp>
#include <unicx/zvector.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace unicx {

using VertexId = std::uint32_t;

/// A set of vertices, kept sorted and duplicate free.  The default value is
/// the empty simplex.
class Simplex {
 public:
  Simplex() = default;
  /// Throws InputError unless `vertices` is strictly increasing.
  explicit Simplex(std::vector<VertexId> vertices);
  Simplex(std::initializer_list<VertexId> vertices) : Simplex(std::vector<VertexId>(vertices)) {}
  /// Sorts; throws InputError on repeated vertices.
  static Simplex from_unsorted(std::vector<VertexId> vertices);

  int dimension() const noexcept { return static_cast<int>(v_.size()) - 1; }
  std::size_t size() const noexcept { return v_.size(); }
  bool empty() const noexcept { return v_.empty(); }
  const std::vector<VertexId>& vertices() const noexcept { return v_; }
  VertexId operator[](std::size_t i) const { return v_[i]; }
  auto begin() const noexcept { return v_.begin(); }
  auto end() const noexcept { return v_.end(); }

  bool contains(VertexId v) const noexcept;
  bool is_face_of(const Simplex& other) const noexcept;
  Simplex without(VertexId v) const;
  Simplex with(VertexId v) const;
  Simplex intersection(const Simplex& other) const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex&, const Simplex&) = default;

 private:
  std::vector<VertexId> v_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto v : s) h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

/// Vertex semantics.  Plain symbols come from facet-list files.
using Label = std::variant<std::string, FpVector, FpLine, ZVector, ZLine>;

std::string label_to_string(const Label& label);

/// f-vector (f_{-1}, f_0, ..., f_dim) with f_{-1} = 1.
class FVector {
 public:
  FVector() : entries_{BigInt(1)} {}
  /// entries[0] is f_{-1}; throws InputError unless it equals 1.
  explicit FVector(std::vector<BigInt> entries);

  /// f_i for i >= -1; zero beyond the top dimension.
  BigInt operator()(int i) const;
  int dimension() const noexcept { return static_cast<int>(entries_.size()) - 2; }
  const std::vector<BigInt>& entries() const noexcept { return entries_; }
  /// Sum over i >= 0 of (-1)^i f_i.
  BigInt euler_characteristic() const;

  friend bool operator==(const FVector&, const FVector&) = default;

 private:
  std::vector<BigInt> entries_;
};

std::ostream& operator<<(std::ostream& os, const FVector& f);

class SimplicialComplex {
 public:
  /// The empty complex {∅}.
  SimplicialComplex() = default;

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
  std::size_t count(int d) const noexcept;
  std::size_t total_simplices() const noexcept;
  /// Simplices of dimension d, sorted lexicographically.
  std::span<const Simplex> simplices(int d) const;
  bool contains(const Simplex& s) const;
  /// Position of s inside simplices(s.dimension()).
  std::optional<std::size_t> index_of(const Simplex& s) const;

  const Label& label(VertexId v) const { return labels_.at(v); }
  const std::vector<Label>& labels() const noexcept { return labels_; }
  std::optional<VertexId> find_vertex(const Label& label) const;

  std::vector<Simplex> facets() const;
  bool is_pure() const;

  friend SimplicialComplex from_simplices(std::span<const Simplex> simplices, std::vector<Label> labels);

 private:
  std::vector<Label> labels_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::unordered_map<Simplex, std::size_t, SimplexHash>> index_;
};

/// Downward closure of `simplices`.  Every labelled vertex becomes a 0-simplex;
/// vertex identifiers must be below labels.size().
SimplicialComplex from_simplices(std::span<const Simplex> simplices, std::vector<Label> labels);
/// Convenience overload labelling vertex i by the decimal string of i.
SimplicialComplex from_simplices(std::span<const Simplex> simplices);

FVector f_vector(const SimplicialComplex& k);

/// link_K(σ) = {τ : τ ∪ σ ∈ K, τ ∩ σ = ∅}.  Vertices are renumbered densely in
/// increasing order of their identifiers in K; labels carry over.
SimplicialComplex link(const SimplicialComplex& k, const Simplex& sigma);

/// K_I = {σ ∈ K : σ ⊂ I}, renumbered like link().
SimplicialComplex full_subcomplex(const SimplicialComplex& k, std::span<const VertexId> vertices);

/// All simplices of dimension <= r, for -1 <= r <= dim K.
SimplicialComplex skeleton(const SimplicialComplex& k, int r);

/// Position of every simplex in one global numbering, dimension by dimension.
class SimplexIndexer {
 public:
  explicit SimplexIndexer(const SimplicialComplex& k);
  std::size_t size() const noexcept { return offsets_.back(); }
  std::size_t global(const Simplex& s) const;
  const Simplex& simplex(std::size_t g) const;
  int dimension_of(std::size_t g) const;

 private:
  const SimplicialComplex* k_;
  std::vector<std::size_t> offsets_;
};

// Facet-list text format: one facet per line, whitespace separated vertex
// labels, '#' starts a comment line, blank lines are ignored.

struct FacetList {
  SimplicialComplex complex;
  /// Facets in file order (significant for shelling orders).
  std::vector<Simplex> facets_in_order;
};

/// Vertex identifiers follow order of first appearance.
FacetList read_facet_list(std::istream& in);
FacetList parse_facet_list(const std::string& text);
void write_facet_list(std::ostream& out, const SimplicialComplex& k, std::span<const Simplex> facets);
void write_facet_list(std::ostream& out, const SimplicialComplex& k);

}  // namespace unicx
