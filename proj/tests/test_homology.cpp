#include <unicx/homology.hpp>
#include <unicx/linalg.hpp>
#include <unicx/universal_fp.hpp>

#include <doctest.h>

using namespace unicx;

namespace {

SimplicialComplex from_facets(const std::vector<std::vector<VertexId>>& facets) {
  std::vector<Simplex> s;
  for (const auto& f : facets) s.push_back(Simplex::from_unsorted(f));
  return from_simplices(s);
}

SimplicialComplex torus() {
  std::vector<std::vector<VertexId>> f;
  for (VertexId i = 0; i < 7; ++i) {
    f.push_back({i, (i + 1) % 7, (i + 3) % 7});
    f.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return from_facets(f);
}

SimplicialComplex projective_plane() {
  return from_facets({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                      {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}});
}

}  // namespace

TEST_CASE("boundary matrices compose to zero") {
  const SimplicialComplex k = build_universal({Variant::X, 2, 3});
  for (int d = 1; d <= k.dimension(); ++d) {
    const IntMatrix product = boundary_matrix(k, d - 1) * boundary_matrix(k, d);
    CHECK(product.isZero());
  }
  const IntMatrix aug = boundary_matrix(k, 0);
  CHECK(aug.rows() == 1);
  CHECK(aug.cols() == 7);
}

TEST_CASE("smith normal form of a hand example") {
  IntMatrix m(2, 2);
  m << 2, 4, 6, 8;  // det -8, gcd of entries 2
  const auto snf = smith_normal_form(m);
  CHECK(snf.rank == 2);
  CHECK(snf.diagonal == std::vector<BigInt>{2, 4});
  CHECK(determinant(m) == -8);
}

TEST_CASE("spheres and points") {
  const SimplicialComplex s2 = from_facets({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  const HomologyProfile h = reduced_homology(s2);
  CHECK(h.betti_at(-1) == 0);
  CHECK(h.betti_at(0) == 0);
  CHECK(h.betti_at(1) == 0);
  CHECK(h.betti_at(2) == 1);
  CHECK(h.torsion_free());

  const HomologyProfile empty = reduced_homology(SimplicialComplex{});
  CHECK(empty.betti_at(-1) == 1);

  const HomologyProfile point = reduced_homology(from_facets({{0}}));
  CHECK(point.betti_at(0) == 0);
}

TEST_CASE("torus and projective plane") {
  const HomologyProfile t = reduced_homology(torus());
  CHECK(t.betti_at(0) == 0);
  CHECK(t.betti_at(1) == 2);
  CHECK(t.betti_at(2) == 1);
  CHECK(t.torsion_free());

  const HomologyProfile rp2 = reduced_homology(projective_plane());
  CHECK(rp2.betti_at(1) == 0);
  CHECK(rp2.betti_at(2) == 0);
  CHECK(rp2.torsion_at(1) == std::vector<BigInt>{2});
}

TEST_CASE("large mode keeps betti numbers and flags torsion as inexact") {
  HomologyOptions opt;
  opt.dense_column_limit = 5;
  const HomologyProfile t = reduced_homology(torus(), opt);
  CHECK(t.betti_at(1) == 2);
  CHECK(t.betti_at(2) == 1);
  CHECK_FALSE(t.torsion_exact);
  const HomologyProfile rp2 = reduced_homology(projective_plane(), opt);
  CHECK(rp2.betti_at(1) == 0);
  CHECK_FALSE(rp2.torsion_free());
}

TEST_CASE("universal complexes are wedges of spheres") {
  for (auto kind : std::vector<UniversalKind>{{Variant::K, 2, 3}, {Variant::X, 3, 2}, {Variant::K, 5, 2}}) {
    const HomologyProfile h = reduced_homology(build_universal(kind));
    const SphereCount sc = sphere_count(kind);
    CHECK(h.betti_at(sc.dimension) == sc.count);
    CHECK(h.torsion_free());
  }
}

TEST_CASE("Reisner check") {
  const ReisnerResult ok = reisner_check(build_universal({Variant::K, 2, 3}));
  CHECK(ok.cohen_macaulay);
  CHECK(ok.links_checked > 0);
  CHECK(reisner_check(build_universal({Variant::X, 3, 2}), true).cohen_macaulay);

  const ReisnerResult edges = reisner_check(from_facets({{0, 1}, {2, 3}}));
  CHECK_FALSE(edges.cohen_macaulay);
  CHECK(edges.witness_degree == 0);

  // two triangles glued at a vertex: connected, but the link of that vertex is two points
  const ReisnerResult bow = reisner_check(from_facets({{0, 1, 2}, {0, 3, 4}}));
  CHECK_FALSE(bow.cohen_macaulay);
  REQUIRE(bow.witness_simplex);
  CHECK(*bow.witness_simplex == Simplex{0});
}
