#include "oracles.hpp"

#include <unicx/errors.hpp>
#include <unicx/fplin.hpp>
#include <unicx/linalg.hpp>

#include <doctest.h>

#include <random>

using namespace unicx;

TEST_CASE("prime field construction rejects composites") {
  CHECK_NOTHROW(PrimeField(2));
  CHECK_NOTHROW(PrimeField(13));
  CHECK_THROWS_AS(PrimeField(1), InputError);
  CHECK_THROWS_AS(PrimeField(9), InputError);
  const PrimeField f(7);
  for (std::int64_t a = 1; a < 7; ++a) CHECK(f.mul(a, f.inverse(a)) == 1);
  CHECK(f.reduce(-3) == 4);
}

TEST_CASE("rank examples") {
  const PrimeField f2(2), f3(3);
  const std::vector<FpVector> basis{FpVector::unit(3, 0, f2), FpVector::unit(3, 1, f2)};
  CHECK(rank_fp(basis, f2) == 2);
  CHECK(rank_fp(std::vector<FpVector>{}, f2) == 0);
  const std::vector<FpVector> multiples{FpVector({1, 1}, f3), FpVector({2, 2}, f3)};
  CHECK(rank_fp(multiples, f3) == 1);
  const std::vector<FpVector> mixed{FpVector({1, 0}, f2), FpVector({1, 0, 0}, f2)};
  CHECK_THROWS_AS(rank_fp(mixed, f2), InputError);
}

TEST_CASE("unimodularity examples") {
  const PrimeField f2(2), f3(3);
  CHECK(is_unimodular_fp(std::vector<FpVector>{FpVector({1, 0}, f2), FpVector({1, 1}, f2)}, f2));
  CHECK_FALSE(is_unimodular_fp(
      std::vector<FpVector>{FpVector({1, 0}, f2), FpVector({0, 1}, f2), FpVector({1, 1}, f2)}, f2));
  CHECK_FALSE(is_unimodular_fp(std::vector<FpVector>{FpVector({1, 2}, f3), FpVector({2, 1}, f3)}, f3));
  CHECK_FALSE(is_unimodular_fp(std::vector<FpVector>{FpVector({1, 2}, f3), FpVector({1, 2}, f3)}, f3));
}

TEST_CASE("rank agrees with span counting on random sets") {
  std::mt19937 rng(7);
  for (std::int64_t p : {2, 3, 5}) {
    const PrimeField f(p);
    for (int t = 0; t < 200; ++t) {
      const std::size_t n = 1 + rng() % 4;
      const std::size_t m = rng() % 5;
      std::vector<FpVector> vs;
      for (std::size_t i = 0; i < m; ++i) {
        std::vector<std::int64_t> c(n);
        for (auto& x : c) x = static_cast<std::int64_t>(rng() % static_cast<unsigned>(p));
        vs.emplace_back(c, f);
      }
      std::size_t size = oracle::span_size(vs, p, n), r = 0;
      while (size > 1) {
        size /= static_cast<std::size_t>(p);
        ++r;
      }
      CHECK(rank_fp(vs, f) == r);
      CHECK(is_unimodular_fp(vs, f) == oracle::independent(vs, p, n));
    }
  }
}

TEST_CASE("canonical line representatives") {
  const PrimeField f5(5);
  const FpLine a = line_canonical_fp(FpVector({0, 3, 1}, f5));
  CHECK(a.generator() == FpVector({0, 1, 2}, f5));
  for (std::int64_t c = 1; c < 5; ++c) CHECK(line_canonical_fp(FpVector({0, 3, 1}, f5).scaled(c)) == a);
  CHECK(a.contains(FpVector({0, 4, 3}, f5)));
  CHECK_FALSE(a.contains(FpVector({1, 1, 2}, f5)));
  CHECK_THROWS_AS(line_canonical_fp(FpVector({0, 0}, f5)), InputError);
}

TEST_CASE("enumeration sizes and order") {
  for (std::int64_t p : {2, 3, 5})
    for (int n = 1; n <= 3; ++n) {
      const PrimeField f(p);
      const auto vs = enumerate_nonzero_vectors_fp(n, f);
      const auto ls = enumerate_lines_fp(n, f);
      const auto pn = static_cast<std::size_t>(ipow(BigInt(p), static_cast<unsigned>(n)));
      CHECK(vs.size() == pn - 1);
      CHECK(ls.size() == (pn - 1) / static_cast<std::size_t>(p - 1));
      CHECK(std::is_sorted(vs.begin(), vs.end()));
      CHECK(std::is_sorted(ls.begin(), ls.end()));
      for (const auto& l : ls) CHECK(line_canonical_fp(l.generator()) == l);
    }
}

TEST_CASE("echelon basis tracks span membership") {
  const PrimeField f3(3);
  EchelonBasis b(3, f3);
  CHECK(b.insert(FpVector({1, 2, 0}, f3)));
  CHECK(b.insert(FpVector({0, 1, 1}, f3)));
  CHECK(b.in_span(FpVector({1, 0, 1}, f3)));  // (1,2,0) + (0,1,1)
  CHECK_FALSE(b.insert(FpVector({2, 0, 2}, f3)));
  CHECK(b.insert(FpVector({0, 0, 1}, f3)));
  CHECK(b.rank() == 3);
}
