#include <unicx/errors.hpp>
#include <unicx/shelling.hpp>
#include <unicx/universal_fp.hpp>

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace unicx;

namespace {

SimplicialComplex from_facets(const std::vector<std::vector<VertexId>>& facets) {
  std::vector<Simplex> s;
  for (const auto& f : facets) s.push_back(Simplex::from_unsorted(f));
  return from_simplices(s);
}

// Pairwise characterisation: every earlier intersection lies in a codimension-one one.
bool shelling_oracle(const std::vector<Simplex>& order) {
  for (std::size_t j = 1; j < order.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const Simplex meet = order[i].intersection(order[j]);
      bool covered = false;
      for (std::size_t k = 0; k < j && !covered; ++k) {
        const Simplex mk = order[k].intersection(order[j]);
        covered = mk.size() + 1 == order[j].size() && meet.is_face_of(mk);
      }
      if (!covered) return false;
    }
  return true;
}

// Tries every bijection onto 1..m.
bool shifted_oracle(const SimplicialComplex& k) {
  std::vector<std::size_t> label(k.vertex_count());
  std::iota(label.begin(), label.end(), std::size_t{1});
  do {
    bool ok = true;
    for (int d = 0; d <= k.dimension() && ok; ++d)
      for (const auto& s : k.simplices(d)) {
        for (VertexId v : s)
          for (VertexId w = 0; w < k.vertex_count() && ok; ++w)
            if (!s.contains(w) && label[w] < label[v]) ok = k.contains(s.without(v).with(w));
        if (!ok) break;
      }
    if (ok) return true;
  } while (std::next_permutation(label.begin(), label.end()));
  return false;
}

}  // namespace

TEST_CASE("verify_shelling on hand examples") {
  const SimplicialComplex s2 = from_facets({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  const auto f = s2.facets();
  CHECK(verify_shelling(s2, f).valid);
  const SimplicialComplex bow = from_facets({{0, 1, 2}, {0, 3, 4}});
  const ShellingCheck c = verify_shelling(bow, bow.facets());
  CHECK_FALSE(c.valid);
  CHECK(c.failing_index == 2);
  // a path of three edges shells from one end but not 01, 23, 12
  const SimplicialComplex path = from_facets({{0, 1}, {1, 2}, {2, 3}});
  const std::vector<Simplex> good{{0, 1}, {1, 2}, {2, 3}}, bad{{0, 1}, {2, 3}, {1, 2}};
  CHECK(verify_shelling(path, good).valid);
  CHECK(verify_shelling(path, bad).failing_index == 2);
}

TEST_CASE("verify_shelling agrees with the pairwise oracle on random orders") {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    std::vector<std::vector<VertexId>> facets;
    for (VertexId a = 0; a < 6; ++a)
      for (VertexId b = a + 1; b < 6; ++b)
        for (VertexId c = b + 1; c < 6; ++c)
          if (rng() % 4 == 0) facets.push_back({a, b, c});
    if (facets.empty()) continue;
    const SimplicialComplex k = from_facets(facets);
    if (!k.is_pure()) continue;  // an unused id below the largest one is an isolated vertex
    std::vector<Simplex> order = k.facets();
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(verify_shelling(k, order).valid == shelling_oracle(order));
  }
}

TEST_CASE("inductive shellings of universal complexes") {
  for (auto kind : std::vector<UniversalKind>{
           {Variant::K, 2, 2}, {Variant::K, 3, 3}, {Variant::X, 2, 3}, {Variant::X, 3, 2}, {Variant::K, 2, 4}}) {
    const SimplicialComplex k = build_universal(kind);
    const auto order = construct_shelling_fp(kind, k);
    CHECK(order.size() == k.count(k.dimension()));
    CHECK(verify_shelling(k, order).valid);
    CHECK(shelling_oracle(order));
  }
}

TEST_CASE("shiftedness") {
  CHECK(is_shifted(build_universal({Variant::X, 2, 2})).shifted);
  CHECK_FALSE(is_shifted(build_universal({Variant::X, 3, 2})).shifted);
  CHECK_FALSE(is_shifted(build_universal({Variant::K, 2, 3})).shifted);
  CHECK_FALSE(is_shifted(from_facets({{0, 1}, {2, 3}})).shifted);
  CHECK_THROWS_AS(is_shifted(build_universal({Variant::X, 3, 2}), 4), ResourceError);
}

TEST_CASE("shiftedness agrees with exhaustive labelling search") {
  std::mt19937 rng(5);
  for (int t = 0; t < 60; ++t) {
    std::vector<std::vector<VertexId>> facets;
    const VertexId m = 4 + static_cast<VertexId>(t % 2);
    for (VertexId a = 0; a < m; ++a)
      for (VertexId b = a + 1; b < m; ++b)
        if (rng() % 2) facets.push_back({a, b});
    for (VertexId v = 0; v < m; ++v) facets.push_back({v});
    const SimplicialComplex k = from_facets(facets);
    const ShiftedResult r = is_shifted(k);
    CHECK(r.shifted == shifted_oracle(k));
    if (r.shifted) {
      std::vector<std::size_t> sorted = r.labelling;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < sorted.size(); ++i) CHECK(sorted[i] == i + 1);
    }
  }
}
