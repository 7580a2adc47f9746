#include <unicx/acceptance.hpp>

#include <unicx/bhargava.hpp>
#include <unicx/buchstaber.hpp>
#include <unicx/errors.hpp>
#include <unicx/homology.hpp>
#include <unicx/linalg.hpp>
#include <unicx/morse.hpp>
#include <unicx/shelling.hpp>
#include <unicx/universal_fp.hpp>
#include <unicx/zlattice.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

namespace unicx {

namespace {

struct Built {
  UniversalKind kind;
  SimplicialComplex k;
};

std::string name(const UniversalKind& kind) {
  return to_string(kind.variant) + "(F_" + std::to_string(kind.p) + "^" + std::to_string(kind.n) + ")";
}

/// Collects failed expectations; the criterion passes when none are recorded.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool passed() const { return failed_ == 0; }
  std::string summary(const std::string& ok_text) const {
    if (passed()) return ok_text + " (" + std::to_string(total_) + " checks)";
    std::string out = std::to_string(failed_) + " of " + std::to_string(total_) + " checks failed: ";
    for (std::size_t i = 0; i < failures_.size(); ++i) out += (i ? "; " : "") + failures_[i];
    return out;
  }

 private:
  std::size_t total_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

std::vector<Simplex> sample_simplices(const SimplicialComplex& k, int d, std::size_t want) {
  const auto layer = k.simplices(d);
  std::vector<Simplex> out;
  if (layer.empty()) return out;
  if (layer.size() <= want) return {layer.begin(), layer.end()};
  for (std::size_t i = 0; i < want; ++i) out.push_back(layer[i * (layer.size() - 1) / (want - 1)]);
  return out;
}

MatchingFlavor flavor_for(Variant v) {
  return v == Variant::K ? MatchingFlavor::line_flavor : MatchingFlavor::vector_flavor;
}

SimplicialComplex disjoint_edges() {
  const std::vector<Simplex> facets{{0, 1}, {2, 3}};
  return from_simplices(facets);
}

BigInt p_part(BigInt x, std::int64_t p) {
  BigInt part = 1;
  x = abs_value(x);
  while (x % p == 0) {
    x /= p;
    part *= p;
  }
  return part;
}

// --- criteria ---------------------------------------------------------------

std::string c1(std::vector<Built>& universe, Checks& c) {
  const std::vector<std::pair<std::int64_t, int>> pairs{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}};
  for (auto [p, n] : pairs)
    for (Variant v : {Variant::X, Variant::K}) {
      UniversalKind kind{v, p, n};
      universe.push_back({kind, build_universal(kind)});
      const FVector got = f_vector(universe.back().k);
      const FVector want = formula_f_vector(kind);
      std::ostringstream os;
      os << name(kind) << " enumerated " << got << " vs formula " << want;
      c.expect(got == want, os.str());
    }
  auto find = [&](Variant v, std::int64_t p, int n) -> const SimplicialComplex& {
    for (const auto& b : universe)
      if (b.kind.variant == v && b.kind.p == p && b.kind.n == n) return b.k;
    throw InputError("missing complex");
  };
  auto fv = [](std::initializer_list<long> e) {
    std::vector<BigInt> v;
    for (auto x : e) v.emplace_back(x);
    return FVector(v);
  };
  c.expect(f_vector(find(Variant::K, 2, 3)) == fv({1, 7, 21, 28}), "K(F_2^3) = (1,7,21,28)");
  c.expect(f_vector(find(Variant::K, 3, 3)) == fv({1, 13, 78, 234}), "K(F_3^3) = (1,13,78,234)");
  c.expect(f_vector(find(Variant::X, 3, 2)) == fv({1, 8, 24}), "X(F_3^2) = (1,8,24)");
  return c.summary("12 complexes: enumeration equals the closed form in every dimension");
}

std::string c2(const std::vector<Built>& universe, Checks& c) {
  std::size_t links = 0;
  for (const auto& b : universe)
    for (int i = 0; i < b.kind.n; ++i) {
      const FVector want = formula_f_vector(b.kind, i);
      for (const auto& s : sample_simplices(b.k, i, 3)) {
        ++links;
        std::ostringstream os;
        os << "link of a " << i << "-simplex in " << name(b.kind) << ": " << f_vector(link(b.k, s)) << " vs " << want;
        c.expect(f_vector(link(b.k, s)) == want, os.str());
      }
    }
  return c.summary(std::to_string(links) + " sampled links match the link formulas");
}

std::string c3(const std::vector<Built>& universe, Checks& c) {
  for (const auto& b : universe) {
    const FVector f = f_vector(b.k);
    const BigInt p = b.kind.p;
    const BigInt pn = ipow(p, static_cast<unsigned>(b.kind.n));
    for (int i = -1; i + 1 <= f.dimension(); ++i) {
      BigInt lhs = BigInt(i + 2) * f(i + 1);
      if (b.kind.variant == Variant::K) lhs *= p - 1;
      const BigInt rhs = (pn - ipow(p, static_cast<unsigned>(i + 1))) * f(i);
      c.expect(lhs == rhs, "recurrence at i = " + std::to_string(i) + " for " + name(b.kind));
    }
  }
  return c.summary("face recurrences hold on every enumerated f-vector");
}

std::string c4(const std::vector<Built>& universe, Checks& c) {
  for (const auto& b : universe) {
    const auto pivots = standard_pivots(b.k);
    const MorseSummary s = morse_summary(b.k, pivots, flavor_for(b.kind.variant));
    const BigInt spheres = sphere_count(b.kind).count;
    const int top = b.k.dimension();
    const std::size_t top_count = s.census.counts.count(top) ? s.census.counts.at(top) : 0;
    c.expect(s.acyclic, name(b.kind) + " matching acyclic");
    c.expect(s.vertex_plus_top, name(b.kind) + " critical cells are one vertex plus top cells");
    c.expect(s.census.counts.count(0) && s.census.counts.at(0) == 1, name(b.kind) + " one critical vertex");
    c.expect(BigInt(top_count) == spheres, name(b.kind) + " critical top cells " + std::to_string(top_count) +
                                                " vs sphere count " + spheres.str());
  }
  const std::vector<std::tuple<Variant, std::int64_t, int, long>> named{
      {Variant::K, 3, 2, 3}, {Variant::K, 2, 3, 13}, {Variant::K, 3, 3, 168}, {Variant::X, 3, 2, 17}};
  for (auto [v, p, n, want] : named) {
    const UniversalKind kind{v, p, n};
    c.expect(sphere_count(kind).count == want, name(kind) + " has " + std::to_string(want) + " spheres");
  }
  return c.summary("greedy matchings valid and acyclic; census = one vertex + A_n(p) or B_n(p) top cells");
}

std::string c5(const std::vector<Built>& universe, Checks& c) {
  auto wedge = [&](const SimplicialComplex& k, const SphereCount& sc, const std::string& what) {
    const HomologyProfile h = reduced_homology(k);
    for (int d = -1; d < sc.dimension; ++d) c.expect(h.betti_at(d) == 0, what + " betti below top vanishes");
    c.expect(h.betti_at(sc.dimension) == sc.count,
             what + " top betti " + h.betti_at(sc.dimension).str() + " vs " + sc.count.str());
    c.expect(h.torsion_free() && h.torsion_exact, what + " torsion free");
  };
  std::size_t links = 0;
  for (const auto& b : universe) {
    wedge(b.k, sphere_count(b.kind), name(b.kind));
    for (int i = 0; i < b.kind.n; ++i)
      for (const auto& s : sample_simplices(b.k, i, 3)) {
        ++links;
        wedge(link(b.k, s), sphere_count(b.kind, i), "link of a " + std::to_string(i) + "-simplex of " + name(b.kind));
      }
  }
  return c.summary("12 complexes and " + std::to_string(links) + " links are wedges of the predicted spheres");
}

std::string c6(const std::vector<Built>& universe, Checks& c) {
  std::size_t links = 0;
  for (const auto& b : universe) {
    const ReisnerResult r = reisner_check(b.k);
    links += r.links_checked;
    c.expect(r.cohen_macaulay, name(b.kind) + " satisfies Reisner's criterion");
  }
  const ReisnerResult bad = reisner_check(disjoint_edges());
  c.expect(!bad.cohen_macaulay && bad.witness_degree == 0, "two disjoint edges fail at H_0 of the whole complex");
  return c.summary("Cohen-Macaulay on all " + std::to_string(links) + " links; the disjoint-edges complex fails");
}

std::string c7(Checks& c, double& shifted_seconds) {
  const std::vector<UniversalKind> kinds{{Variant::K, 2, 2}, {Variant::K, 2, 3}, {Variant::K, 3, 2},
                                         {Variant::K, 3, 3}, {Variant::X, 2, 2}, {Variant::X, 2, 3},
                                         {Variant::X, 3, 2}};
  for (const auto& kind : kinds) {
    const SimplicialComplex k = build_universal(kind);
    const auto order = construct_shelling_fp(kind, k);
    c.expect(verify_shelling(k, order).valid, name(kind) + " inductive order is a shelling");
  }
  const auto t0 = std::chrono::steady_clock::now();
  c.expect(is_shifted(build_universal({Variant::X, 2, 2})).shifted, "X(F_2^2) is shifted");
  c.expect(!is_shifted(build_universal({Variant::X, 3, 2})).shifted, "X(F_3^2) is not shifted");
  c.expect(!is_shifted(build_universal({Variant::K, 2, 3})).shifted, "K(F_2^3) is not shifted");
  shifted_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(shifted_seconds < 30.0, "shiftedness tests within 30 s");
  return c.summary("7 inductive shellings verify; shiftedness as predicted");
}

std::string c8(Checks& c) {
  std::vector<SimplicialComplex> graphs;
  for (VertexId m = 1; m <= 4; ++m) {
    std::vector<Simplex> pairs;
    for (VertexId a = 0; a < m; ++a)
      for (VertexId b = a + 1; b < m; ++b) pairs.push_back({a, b});
    for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
      std::vector<Simplex> simplices;
      for (VertexId v = 0; v < m; ++v) simplices.push_back({v});
      for (std::size_t e = 0; e < pairs.size(); ++e)
        if (mask >> e & 1U) simplices.push_back(pairs[e]);
      graphs.push_back(from_simplices(simplices));
    }
  }
  std::mt19937_64 rng(20240607);
  std::bernoulli_distribution coin(0.5);
  for (VertexId m : {5U, 6U})
    for (int t = 0; t < 30; ++t) {
      std::vector<Simplex> simplices;
      for (VertexId v = 0; v < m; ++v) simplices.push_back({v});
      for (VertexId a = 0; a < m; ++a)
        for (VertexId b = a + 1; b < m; ++b)
          if (coin(rng)) simplices.push_back({a, b});
      graphs.push_back(from_simplices(simplices));
    }
  for (const auto& g : graphs)
    for (std::int64_t p : {2, 3}) {
      const auto map = min_rank_search(g, p, 4);
      c.expect(map.has_value(), "a nondegenerate map exists");
      if (!map) continue;
      const BigInt s = BigInt(g.vertex_count()) - map->rank;
      c.expect(s == s_fp_graph(g, p), "search and formula agree on a graph with " +
                                          std::to_string(g.vertex_count()) + " vertices at p = " + std::to_string(p));
      const BuchstaberReport r = buchstaber_bounds(g, p);
      c.expect(r.lower <= *r.s_fp && *r.s_fp <= r.upper, "bounds chain");
    }
  struct Expected {
    std::int64_t p, q;
    int n;
    long zl, zu, tl, tu;
  };
  // ⌈log_q((q-1)N+1)⌉, N, ⌈log_2(N+1)⌉, N with N = (p^n-1)/(p-1).
  const std::vector<Expected> table{{2, 3, 2, 2, 3, 2, 3}, {3, 2, 2, 3, 4, 3, 4}, {3, 2, 3, 4, 13, 4, 13}};
  for (const auto& e : table) {
    const ZetaThetaBounds b = zeta_theta_bounds(e.p, e.q, e.n);
    const std::string tag = "(" + std::to_string(e.p) + "," + std::to_string(e.q) + "," + std::to_string(e.n) + ")";
    c.expect(b.zeta_lower == e.zl && b.zeta_upper == e.zu, "zeta bounds at " + tag);
    c.expect(b.theta_lower == e.tl && b.theta_upper == e.tu, "theta bounds at " + tag);
    c.expect(b.monotone, "monotone bounds at " + tag);
  }
  return c.summary(std::to_string(graphs.size()) + " graphs: search matches the graph formula at p = 2, 3; ζ/θ bounds");
}

BigInt gcd_of_maximal_minors(const std::vector<ZVector>& rows) {
  const std::size_t m = rows.size();
  const std::size_t n = rows.front().dim();
  BigInt g = 0;
  std::vector<std::size_t> cols;
  std::function<void(std::size_t)> pick = [&](std::size_t from) {
    if (cols.size() == m) {
      IntMatrix minor(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) minor(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][cols[j]];
      g = gcd_value(g, determinant(minor));
      return;
    }
    for (std::size_t c = from; c < n; ++c) {
      cols.push_back(c);
      pick(c + 1);
      cols.pop_back();
    }
  };
  pick(0);
  return g;
}

std::string c9(Checks& c) {
  std::mt19937_64 rng(987654321);
  std::uniform_int_distribution<int> entry(-9, 9);
  std::size_t unimodular = 0;
  for (int t = 0; t < 10000; ++t) {
    const int n = std::uniform_int_distribution<int>(1, 5)(rng);
    const int m = std::uniform_int_distribution<int>(1, n)(rng);
    std::vector<ZVector> rows;
    for (int i = 0; i < m; ++i) {
      std::vector<BigInt> v;
      for (int j = 0; j < n; ++j) v.emplace_back(entry(rng));
      rows.emplace_back(std::move(v));
    }
    const bool got = is_unimodular_z(rows);
    unimodular += got ? 1 : 0;
    c.expect(got == (gcd_of_maximal_minors(rows) == 1), "unimodularity agrees with the maximal-minor oracle");
  }

  for (int n : {2, 3}) {
    std::vector<ZLine> lines = enumerate_z_lines(n, 6);
    std::vector<ZLine> sorted = lines;
    std::sort(sorted.begin(), sorted.end());
    c.expect(sorted == lines, "enumeration is sorted");
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      c.expect(compare_z_lines(sorted[i], sorted[i]) == 0, "reflexive equality");
      for (std::size_t j = i + 1; j < sorted.size(); ++j)
        c.expect(compare_z_lines(sorted[i], sorted[j]) < 0 && compare_z_lines(sorted[j], sorted[i]) > 0,
                 "strict total order on lines of 1-norm <= 6");
    }
    for (int i = 0; i < n; ++i) {
      std::vector<BigInt> e(static_cast<std::size_t>(n), BigInt(0));
      e[static_cast<std::size_t>(i)] = 1;
      c.expect(lines[static_cast<std::size_t>(i)] == line_canonical_z(ZVector(e)), "the first n lines are L(e_i)");
    }
    for (int N = 1; N < 6; ++N) {
      const auto small = enumerate_z_lines(n, N);
      c.expect(std::equal(small.begin(), small.end(), lines.begin()), "prefix stability");
    }
  }

  for (int max_norm : {2, 3, 4}) {
    const SimplicialComplex k = build_truncated_universal_z(Variant::K, 2, max_norm);
    std::vector<VertexId> order(k.vertex_count());
    for (VertexId v = 0; v < order.size(); ++v) order[v] = v;
    const Matching m = greedy_matching(k, order, MatchingFlavor::line_flavor);
    validate_matching(k, m);
    c.expect(check_acyclic(k, m).acyclic, "W matching acyclic at max norm " + std::to_string(max_norm));
    const CriticalCensus census = critical_cells(k, m);
    for (int kk = 1; kk <= 4 * max_norm; ++kk) {
      std::vector<VertexId> ids;
      for (const auto& l : critical_family_sigma(2, kk))
        if (auto v = k.find_vertex(l)) ids.push_back(*v);
      if (ids.size() != 2) continue;
      const Simplex sigma = Simplex::from_unsorted(ids);
      c.expect(std::find(census.cells.begin(), census.cells.end(), sigma) != census.cells.end(),
               "σ_" + std::to_string(kk) + " critical at max norm " + std::to_string(max_norm));
    }
  }
  return c.summary("10000 random sets (" + std::to_string(unimodular) +
                   " unimodular) agree with the minor oracle; line order laws; W matching on truncated K(Z^2)");
}

std::string c10(Checks& c) {
  const std::string cp2 = "1 2\n2 3\n1 3\nlambda\n1 0 -1\n0 1 -1\n";
  const std::string mutant = "1 2\n2 3\n1 3\nlambda\n2 0 -1\n0 1 -1\n";
  const QuasitoricPair good = parse_quasitoric_pair(cp2);
  c.expect(validate_quasitoric_pair(good).valid, "CP^2 pair validates");
  const auto images = pair_to_simplicial_map(good);
  for (const auto& f : good.dual_complex.facets()) {
    std::vector<ZVector> rows;
    for (auto v : f) rows.push_back(images[v]);
    c.expect(is_unimodular_z(rows), "facet image unimodular");
  }
  const QuasitoricPair bad = parse_quasitoric_pair(mutant);
  const QuasitoricCheck r = validate_quasitoric_pair(bad);
  c.expect(!r.valid, "det-2 mutant is rejected");
  if (r.failing_facet) {
    std::vector<std::string> names;
    for (auto v : *r.failing_facet) names.push_back(label_to_string(bad.dual_complex.label(v)));
    c.expect(names == std::vector<std::string>{"1", "2"} && abs_value(r.failing_determinant) == 2,
             "witness is facet {1,2} with determinant 2");
  }
  return c.summary("CP^2 pair valid; mutant fails at facet {1,2} (det 2)");
}

std::string c11(Checks& c) {
  for (std::int64_t p : {2, 3, 5})
    for (std::size_t k = 1; k <= 5; ++k) {
      const IdentityCheck r = check_identities(p, k);
      c.expect(r.product_identity && r.divisibility,
               "k!_S = k! f_{k-1}(X(F_p^k)) at p = " + std::to_string(p) + ", k = " + std::to_string(k));
    }
  const std::vector<std::int64_t> primes{2, 3, 5, 7, 11, 13};
  for (std::int64_t q : {2, 3, 5}) {
    const GroundSet s = GroundSet::geometric(1, q);
    for (std::size_t k = 1; k <= 5; ++k) {
      const BigInt closed = generalized_factorial(s, k);
      for (auto l : primes) {
        const BigInt nu = nu_k(s, l, k);
        c.expect(nu == p_part(closed, l), "greedy ν_" + std::to_string(k) + " at " + std::to_string(l) +
                                              " matches the closed form for q = " + std::to_string(q));
      }
    }
  }
  const std::vector<GroundSet> sets{GroundSet::integers(), GroundSet::geometric(1, 2), GroundSet::geometric(1, 3),
                                    GroundSet::explicit_list({0, 1, 3, 4, 9, 10, 12})};
  for (const auto& s : sets)
    for (std::int64_t p : {2, 3})
      for (std::size_t k = 1; k <= 4; ++k) {
        const BigInt base = nu_k(s, p, k, 0);
        for (std::size_t seed : {1, 2})
          c.expect(nu_k(s, p, k, seed) == base, "ν invariant under the starting element for " + s.describe());
      }
  std::mt19937_64 rng(424242);
  for (int t = 0; t < 40; ++t) {
    std::vector<long> window;
    for (long x = -20; x <= 20; ++x) window.push_back(x);
    std::shuffle(window.begin(), window.end(), rng);
    const std::size_t s_size = 8 + static_cast<std::size_t>(t % 5);
    const std::size_t t_size = 5 + static_cast<std::size_t>(t % 3);
    std::vector<BigInt> big(window.begin(), window.begin() + static_cast<std::ptrdiff_t>(s_size));
    std::vector<BigInt> small(big.begin(), big.begin() + static_cast<std::ptrdiff_t>(t_size));
    const GroundSet S = GroundSet::explicit_list(big), T = GroundSet::explicit_list(small);
    for (std::size_t k = 1; k < t_size; ++k) {
      const BigInt fs = generalized_factorial(S, k), ft = generalized_factorial(T, k);
      c.expect(ft % fs == 0, "k!_S divides k!_T for T ⊂ S");
    }
  }
  return c.summary("product identity, closed-form ν at primes <= 13, seed invariance, nested divisibility");
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  std::vector<Built> universe;
  double shifted_seconds = 0.0;

  auto run = [&](int id, std::string title, double limit, const std::function<std::string(Checks&)>& body) {
    CriterionResult r{id, std::move(title), false, {}, 0.0, limit};
    Checks c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r.detail = body(c);
      r.passed = c.passed();
    } catch (const std::exception& e) {
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit > 0 && r.seconds > limit) {
      r.passed = false;
      r.detail += "; runtime target exceeded";
    }
    out.push_back(std::move(r));
  };

  run(1, "f-vector formulas match enumeration", 60, [&](Checks& c) { return c1(universe, c); });
  run(2, "link f-vector formulas", 0, [&](Checks& c) { return c2(universe, c); });
  run(3, "face-count recurrences", 0, [&](Checks& c) { return c3(universe, c); });
  run(4, "greedy Morse matchings and critical census", 120, [&](Checks& c) { return c4(universe, c); });
  run(5, "wedge-of-spheres homology", 0, [&](Checks& c) { return c5(universe, c); });
  run(6, "Reisner Cohen-Macaulay criterion", 0, [&](Checks& c) { return c6(universe, c); });
  run(7, "shellings and shiftedness", 0, [&](Checks& c) { return c7(c, shifted_seconds); });
  run(8, "Buchstaber invariants of graphs and ζ/θ bounds", 0, [&](Checks& c) { return c8(c); });
  run(9, "Z-lattice unimodularity, line order, W matching", 60, [&](Checks& c) { return c9(c); });
  run(10, "quasitoric pair validation", 0, [&](Checks& c) { return c10(c); });
  run(11, "generalized factorial identities", 30, [&](Checks& c) { return c11(c); });
  const bool z_suite = out[8].passed;
  run(12, "infinite complexes covered by finite property suites", 0, [&](Checks& c) {
    c.expect(z_suite, "the Z-lattice property suite passed");
    return c.summary(
        "homotopy types of the infinite X(Z^n), K(Z^n) and their infinite shelling are not computed; "
        "finite truncations, the line order laws and σ_k criticality stand in for them");
  });
  return out;
}

}  // namespace unicx
