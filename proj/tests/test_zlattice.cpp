#include <unicx/errors.hpp>
#include <unicx/morse.hpp>
#include <unicx/zlattice.hpp>

#include <doctest.h>

#include <boost/integer/common_factor.hpp>

#include <algorithm>
#include <numeric>

using namespace unicx;

namespace {

std::vector<ZLine> brute_lines_2d(int max_norm) {
  std::vector<ZLine> out;
  for (int a = -max_norm; a <= max_norm; ++a)
    for (int b = -max_norm; b <= max_norm; ++b) {
      if (std::abs(a) + std::abs(b) > max_norm || (a == 0 && b == 0)) continue;
      if (boost::integer::gcd(a, b) != 1) continue;
      if (a < 0 || (a == 0 && b < 0)) continue;
      out.push_back(line_canonical_z(ZVector{a, b}));
    }
  return out;
}

}  // namespace

TEST_CASE("unimodularity over Z by hand determinants") {
  CHECK(is_unimodular_z(std::vector<ZVector>{{1, 0}, {0, 1}}));
  CHECK(is_unimodular_z(std::vector<ZVector>{{2, 1}, {1, 1}}));   // det 1
  CHECK_FALSE(is_unimodular_z(std::vector<ZVector>{{2, 0}, {0, 1}}));  // det 2
  CHECK(is_unimodular_z(std::vector<ZVector>{{2, 3, 0}}));  // primitive
  CHECK_FALSE(is_unimodular_z(std::vector<ZVector>{{2, 4, 6}}));
  CHECK(is_unimodular_z(std::vector<ZVector>{{1, 2, 3}, {0, 1, 4}}));
  CHECK_FALSE(is_unimodular_z(std::vector<ZVector>{{1, 1}, {1, 1}}));
  CHECK(is_unimodular_z(std::vector<ZVector>{}));
}

TEST_CASE("line canonical form") {
  CHECK(line_canonical_z(ZVector{-2, 3}).generator() == ZVector{2, -3});
  CHECK(line_canonical_z(ZVector{0, -1}).generator() == ZVector{0, 1});
  CHECK_THROWS_AS(line_canonical_z(ZVector{2, 4}), InputError);
  CHECK_THROWS_AS(line_canonical_z(ZVector{0, 0}), InputError);
}

TEST_CASE("line order") {
  const ZLine e1 = line_canonical_z(ZVector{1, 0}), e2 = line_canonical_z(ZVector{0, 1});
  const ZLine d = line_canonical_z(ZVector{1, 1}), a = line_canonical_z(ZVector{1, -1});
  CHECK(e1 < e2);
  CHECK(e2 < a);  // both norm ≤ 2; norm decides
  CHECK(a < d);   // last coordinate -1 < 1
  CHECK(compare_z_lines(d, d) == std::strong_ordering::equal);
}

TEST_CASE("line enumeration matches brute force") {
  for (int n = 1; n <= 6; ++n) {
    auto want = brute_lines_2d(n);
    std::sort(want.begin(), want.end());
    CHECK(enumerate_z_lines(2, n) == want);
  }
  CHECK(enumerate_z_lines(3, 1).size() == 3);
  CHECK(enumerate_z_lines(3, 2).size() == 3 + 6);
}

TEST_CASE("truncated complexes") {
  const SimplicialComplex k = build_truncated_universal_z(Variant::K, 2, 3);
  const auto lines = enumerate_z_lines(2, 3);
  CHECK(k.vertex_count() == lines.size());
  std::size_t edges = 0;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto& u = lines[i].generator();
      const auto& v = lines[j].generator();
      if (abs_value(u[0] * v[1] - u[1] * v[0]) == 1) ++edges;
    }
  CHECK(k.count(1) == edges);
  const SimplicialComplex x = build_truncated_universal_z(Variant::X, 2, 3);
  CHECK(x.vertex_count() == 2 * lines.size());
  CHECK(x.count(1) == 4 * edges);
  CHECK_THROWS_AS(build_truncated_universal_z(Variant::X, 3, 6, 100), ResourceError);
}

TEST_CASE("critical family on the truncation") {
  for (int n = 1; n <= 6; ++n) {
    const SimplicialComplex k = build_truncated_universal_z(Variant::K, 2, n);
    std::vector<VertexId> order(k.vertex_count());
    std::iota(order.begin(), order.end(), VertexId{0});
    const Matching m = greedy_matching(k, order, MatchingFlavor::line_flavor);
    CHECK(check_acyclic(k, m).acyclic);
    const CriticalCensus c = critical_cells(k, m);
    CHECK(c.counts.at(0) == 1);
    for (int j = 1; j <= 2 * n; ++j) {
      std::vector<VertexId> ids;
      for (const auto& l : critical_family_sigma(2, j))
        if (auto v = k.find_vertex(l)) ids.push_back(*v);
      if (ids.size() == 2)
        CHECK(std::find(c.cells.begin(), c.cells.end(), Simplex::from_unsorted(ids)) != c.cells.end());
    }
  }
}

TEST_CASE("quasitoric pairs") {
  const QuasitoricPair cp2 = parse_quasitoric_pair("1 2\n2 3\n1 3\nlambda\n1 0 -1\n0 1 -1\n");
  CHECK(cp2.lambda.rows() == 2);
  CHECK(cp2.lambda.cols() == 3);
  CHECK(validate_quasitoric_pair(cp2).valid);
  const auto images = pair_to_simplicial_map(cp2);
  CHECK(images[2] == ZVector{-1, -1});

  const QuasitoricPair mutant = parse_quasitoric_pair("1 2\n2 3\n1 3\nlambda\n2 0 -1\n0 1 -1\n");
  const QuasitoricCheck r = validate_quasitoric_pair(mutant);
  CHECK_FALSE(r.valid);
  REQUIRE(r.failing_facet);
  CHECK(*r.failing_facet == Simplex{0, 1});
  CHECK(abs_value(r.failing_determinant) == 2);

  CHECK_THROWS_AS(parse_quasitoric_pair("1 2\n2 3\n"), InputError);
  CHECK_THROWS_AS(validate_quasitoric_pair(parse_quasitoric_pair("1 2\nlambda\n1 0\n")), InputError);
}
