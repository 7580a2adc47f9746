#include <unicx/errors.hpp>
#include <unicx/homology.hpp>
#include <unicx/morse.hpp>
#include <unicx/universal_fp.hpp>

#include <doctest.h>

using namespace unicx;

namespace {

SimplicialComplex triangle_boundary() {
  const std::vector<Simplex> f{{0, 1}, {1, 2}, {0, 2}};
  return from_simplices(f);
}

BigInt alternating(const CriticalCensus& c) {
  BigInt sum = 0;
  for (const auto& [d, n] : c.counts) sum += (d % 2 == 0 ? 1 : -1) * static_cast<long>(n);
  return sum;
}

}  // namespace

TEST_CASE("cyclic matching on a triangle boundary is detected") {
  const SimplicialComplex k = triangle_boundary();
  Matching m;
  m.pairs = {{Simplex{0}, Simplex{0, 1}, 1, 0}, {Simplex{1}, Simplex{1, 2}, 2, 0}, {Simplex{2}, Simplex{0, 2}, 0, 0}};
  CHECK_NOTHROW(validate_matching(k, m));
  const AcyclicityResult r = check_acyclic(k, m);
  CHECK_FALSE(r.acyclic);
  CHECK(r.cycle.size() == 6);
  CHECK_FALSE(describe_cycle(k, r.cycle).empty());
}

TEST_CASE("invalid matchings are rejected") {
  const SimplicialComplex k = triangle_boundary();
  Matching twice;
  twice.pairs = {{Simplex{0}, Simplex{0, 1}, 1, 0}, {Simplex{0}, Simplex{0, 2}, 2, 0}};
  CHECK_THROWS(validate_matching(k, twice));
  Matching skip;
  skip.pairs = {{Simplex{}, Simplex{0, 1}, 1, 0}};
  CHECK_THROWS(validate_matching(k, skip));
}

TEST_CASE("greedy matching on a triangle boundary") {
  const SimplicialComplex k = triangle_boundary();
  const std::vector<VertexId> pivots{0, 1, 2};
  const Matching m = greedy_matching(k, pivots, MatchingFlavor::vector_flavor);
  validate_matching(k, m);
  CHECK(check_acyclic(k, m).acyclic);
  const CriticalCensus c = critical_cells(k, m);
  CHECK(c.counts.at(0) == 1);
  CHECK(c.counts.at(1) == 1);
}

TEST_CASE("census is consistent with the euler characteristic") {
  for (auto kind : std::vector<UniversalKind>{{Variant::X, 2, 3}, {Variant::K, 3, 3}, {Variant::X, 5, 2}}) {
    const SimplicialComplex k = build_universal(kind);
    const auto pivots = standard_pivots(k);
    const auto flavor = kind.variant == Variant::K ? MatchingFlavor::line_flavor : MatchingFlavor::vector_flavor;
    const MorseSummary s = morse_summary(k, pivots, flavor);
    CHECK(s.acyclic);
    CHECK(s.euler_consistent);
    CHECK(alternating(s.census) == f_vector(k).euler_characteristic());
    CHECK(BigInt(s.census.counts.at(k.dimension())) == sphere_count(kind).count);
  }
}

TEST_CASE("link matchings give the link sphere counts") {
  const UniversalKind kind{Variant::K, 2, 4};
  const SimplicialComplex k = build_universal(kind);
  for (int i = 0; i < 2; ++i) {
    const Simplex sigma = k.simplices(i)[0];
    const SimplicialComplex lnk = link(k, sigma);
    const auto pivots = link_pivots(k, sigma, lnk);
    const MorseSummary s = morse_summary(lnk, pivots, MatchingFlavor::line_flavor);
    CHECK(s.acyclic);
    const SphereCount sc = sphere_count(kind, i);
    CHECK(BigInt(s.census.counts.at(sc.dimension)) == sc.count);
    CHECK(reduced_homology(lnk).betti_at(sc.dimension) == sc.count);
  }
}

TEST_CASE("matching weight") {
  const std::vector<VertexId> order{2, 0, 1};
  CHECK(matching_weight(Simplex{0, 2}, order) == 3);
  CHECK(matching_weight(Simplex{0, 1}, order) == 5);
  CHECK(matching_weight(Simplex{}, order) == 0);
}
