#include "oracles.hpp"

#include <unicx/errors.hpp>
#include <unicx/scomplex.hpp>

#include <doctest.h>

#include <random>
#include <sstream>

using namespace unicx;

namespace {

SimplicialComplex from_facets(const std::vector<std::vector<VertexId>>& facets) {
  std::vector<Simplex> s;
  for (const auto& f : facets) s.emplace_back(f);
  return from_simplices(s);
}

}  // namespace

TEST_CASE("simplex operations") {
  const Simplex s = Simplex::from_unsorted({3, 1, 2});
  CHECK(s.vertices() == std::vector<VertexId>{1, 2, 3});
  CHECK(s.dimension() == 2);
  CHECK(Simplex{}.dimension() == -1);
  CHECK(s.without(2) == Simplex{1, 3});
  CHECK(Simplex{1, 3}.with(2) == s);
  CHECK(Simplex{1, 3}.is_face_of(s));
  CHECK_FALSE(Simplex{0, 1}.is_face_of(s));
  CHECK(s.intersection(Simplex{0, 2, 3}) == Simplex{2, 3});
}

TEST_CASE("closure matches power-set enumeration") {
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    std::vector<std::vector<VertexId>> facets;
    const int count = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < count; ++i) {
      std::set<VertexId> f;
      const int size = 1 + static_cast<int>(rng() % 4);
      while (static_cast<int>(f.size()) < size) f.insert(static_cast<VertexId>(rng() % 7));
      facets.emplace_back(f.begin(), f.end());
    }
    const SimplicialComplex k = from_facets(facets);
    // ids below the largest one used are vertices too
    for (VertexId v = 0; v < k.vertex_count(); ++v) facets.push_back({v});
    const auto all = oracle::closure(facets);
    std::vector<std::size_t> by_size(6, 0);
    for (const auto& s : all) ++by_size[s.size()];
    const FVector f = f_vector(k);
    for (int d = -1; d <= k.dimension(); ++d) CHECK(f(d) == by_size[static_cast<std::size_t>(d + 1)]);
    for (const auto& s : all) CHECK(k.contains(Simplex(s)));
  }
}

TEST_CASE("f-vector and euler characteristic of a hollow tetrahedron") {
  const SimplicialComplex k = from_facets({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  const FVector f = f_vector(k);
  CHECK(f.entries() == std::vector<BigInt>{1, 4, 6, 4});
  CHECK(f.euler_characteristic() == 2);
  CHECK(k.facets().size() == 4);
  CHECK(k.is_pure());
}

TEST_CASE("links") {
  const SimplicialComplex k = from_facets({{0, 1, 2}, {0, 2, 3}, {3, 4}});
  const SimplicialComplex l0 = link(k, Simplex{0});
  CHECK(f_vector(l0).entries() == std::vector<BigInt>{1, 3, 2});
  const SimplicialComplex l3 = link(k, Simplex{3});
  CHECK(f_vector(l3).entries() == std::vector<BigInt>{1, 3, 1});
  CHECK(f_vector(link(k, Simplex{0, 1, 2})).entries() == std::vector<BigInt>{1});
  CHECK_FALSE(k.is_pure());
}

TEST_CASE("full subcomplex and skeleton") {
  const SimplicialComplex k = from_facets({{0, 1, 2}, {2, 3}});
  const std::vector<VertexId> keep{0, 2, 3};
  CHECK(f_vector(full_subcomplex(k, keep)).entries() == std::vector<BigInt>{1, 3, 2});
  CHECK(f_vector(skeleton(k, 0)).entries() == std::vector<BigInt>{1, 4});
}

TEST_CASE("facet-list round trip") {
  const FacetList f = parse_facet_list("# triangle and edge\na b c\n\nc d\n");
  CHECK(f.complex.vertex_count() == 4);
  CHECK(f.facets_in_order.size() == 2);
  CHECK(label_to_string(f.complex.label(3)) == "d");
  std::ostringstream os;
  write_facet_list(os, f.complex);
  const FacetList g = parse_facet_list(os.str());
  CHECK(f_vector(g.complex) == f_vector(f.complex));
}

TEST_CASE("simplex indexer is a bijection") {
  const SimplicialComplex k = from_facets({{0, 1, 2}, {1, 2, 3}});
  const SimplexIndexer idx(k);
  CHECK(idx.size() == k.total_simplices());
  for (std::size_t g = 0; g < idx.size(); ++g) CHECK(idx.global(idx.simplex(g)) == g);
}
