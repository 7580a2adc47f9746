#include "oracles.hpp"

#include <unicx/errors.hpp>
#include <unicx/universal_fp.hpp>

#include <doctest.h>

using namespace unicx;

namespace {

std::vector<BigInt> fv(std::initializer_list<long> e) { return {e.begin(), e.end()}; }

std::vector<BigInt> as_big(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("builders agree with brute-force subset enumeration") {
  for (auto [p, n] : std::vector<std::pair<std::int64_t, int>>{{2, 2}, {2, 3}, {3, 2}, {5, 2}}) {
    const PrimeField f(p);
    const auto vectors = enumerate_nonzero_vectors_fp(n, f);
    std::vector<FpVector> generators;
    for (const auto& l : enumerate_lines_fp(n, f)) generators.push_back(l.generator());
    const auto un = static_cast<std::size_t>(n);
    CHECK(f_vector(build_universal({Variant::X, p, n})).entries() ==
          as_big(oracle::independent_subset_counts(vectors, p, un)));
    CHECK(f_vector(build_universal({Variant::K, p, n})).entries() ==
          as_big(oracle::independent_subset_counts(generators, p, un)));
  }
}

TEST_CASE("builder examples and labels") {
  CHECK(f_vector(build_universal({Variant::X, 2, 2})).entries() == fv({1, 3, 3}));
  CHECK(f_vector(build_universal({Variant::K, 3, 2})).entries() == fv({1, 4, 6}));
  const SimplicialComplex k = build_universal({Variant::K, 2, 3});
  CHECK(f_vector(k).entries() == fv({1, 7, 21, 28}));
  CHECK(std::holds_alternative<FpLine>(k.label(0)));
  CHECK(k.is_pure());
  CHECK(k.dimension() == 2);
}

TEST_CASE("budget is enforced") {
  CHECK_THROWS_AS(build_universal({Variant::X, 3, 3}, 100), ResourceError);
  try {
    build_universal({Variant::K, 5, 3}, 10);
  } catch (const ResourceError& e) {
    CHECK(std::string(e.what()).find("K(F_5^3)") != std::string::npos);
  }
}

TEST_CASE("closed-form f-vectors") {
  CHECK(formula_f_vector({Variant::X, 3, 2})(1) == 24);
  CHECK(formula_f_vector({Variant::K, 3, 3})(2) == 234);
  CHECK(formula_f_vector({Variant::K, 2, 3}, 0).entries() == fv({1, 6, 12}));
  CHECK_THROWS_AS(formula_f_vector({Variant::K, 2, 3}, 3), InputError);
}

TEST_CASE("sphere counts") {
  CHECK(sphere_count({Variant::K, 2, 3}).count == 13);
  CHECK(sphere_count({Variant::K, 2, 3}).dimension == 2);
  CHECK(sphere_count({Variant::K, 3, 2}).count == 3);
  CHECK(sphere_count({Variant::X, 3, 2}).count == 17);
  CHECK(sphere_count({Variant::K, 7, 1}).count == 0);
  // link of a facet is the empty complex, one (-1)-sphere
  const SphereCount facet_link = sphere_count({Variant::X, 3, 2}, 1);
  CHECK(facet_link.dimension == -1);
  CHECK(facet_link.count == 1);
}

TEST_CASE("link formulas agree with enumerated links") {
  for (auto kind : std::vector<UniversalKind>{{Variant::X, 2, 3}, {Variant::K, 3, 3}, {Variant::X, 3, 2}}) {
    const SimplicialComplex k = build_universal(kind);
    for (int i = 0; i < kind.n; ++i)
      for (const auto& s : k.simplices(i)) CHECK(f_vector(link(k, s)) == formula_f_vector(kind, i));
  }
}

TEST_CASE("projection to lines") {
  const SimplicialComplex x = build_universal({Variant::X, 3, 2});
  const SimplicialComplex k = build_universal({Variant::K, 3, 2});
  std::map<Simplex, int> fibre;
  for (const auto& s : x.simplices(1)) ++fibre[project_phi(x, k, s)];
  CHECK(fibre.size() == k.count(1));
  for (const auto& [s, c] : fibre) CHECK(c == 4);

  const SimplicialComplex x2 = build_universal({Variant::X, 2, 3});
  const SimplicialComplex k2 = build_universal({Variant::K, 2, 3});
  std::set<Simplex> image;
  for (const auto& s : x2.simplices(2)) image.insert(project_phi(x2, k2, s));
  CHECK(image.size() == x2.count(2));
}

TEST_CASE("sections compose to the identity") {
  const SimplicialComplex x = build_universal({Variant::X, 5, 2});
  const SimplicialComplex k = build_universal({Variant::K, 5, 2});
  const auto phi = phi_vertex_map(x, k);
  const auto psi = section_psi(k, x, {});
  for (VertexId v = 0; v < k.vertex_count(); ++v) CHECK(phi[psi[v]] == v);
  for (const auto& s : k.simplices(1)) CHECK(x.contains(apply_vertex_map(psi, s)));
}

TEST_CASE("standard pivots are the unit vectors") {
  const SimplicialComplex x = build_universal({Variant::X, 3, 3});
  const auto pivots = standard_pivots(x);
  REQUIRE(pivots.size() == 3);
  const PrimeField f(3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(std::get<FpVector>(x.label(pivots[i])) == FpVector::unit(3, i, f));
}
