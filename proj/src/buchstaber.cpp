#include <unicx/buchstaber.hpp>

#include <unicx/errors.hpp>
#include <unicx/fplin.hpp>

#include <algorithm>
#include <functional>

namespace unicx {

namespace {

std::vector<std::vector<bool>> adjacency(const SimplicialComplex& k) {
  std::vector<std::vector<bool>> adj(k.vertex_count(), std::vector<bool>(k.vertex_count(), false));
  for (const auto& e : k.simplices(1)) adj[e[0]][e[1]] = adj[e[1]][e[0]] = true;
  return adj;
}

}  // namespace

Coloring chromatic_number(const SimplicialComplex& k, std::size_t max_vertices) {
  const std::size_t m = k.vertex_count();
  if (m > max_vertices)
    throw ResourceError("exact colouring is limited to " + std::to_string(max_vertices) + " vertices");
  Coloring out;
  if (m == 0) return out;
  const auto adj = adjacency(k);
  std::vector<std::size_t> order(m);
  for (std::size_t v = 0; v < m; ++v) order[v] = v;
  auto degree = [&](std::size_t v) { return std::count(adj[v].begin(), adj[v].end(), true); };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return degree(a) > degree(b); });

  std::vector<std::size_t> colour(m, 0);
  std::function<bool(std::size_t, std::size_t, std::size_t)> paint = [&](std::size_t i, std::size_t used,
                                                                         std::size_t limit) {
    if (i == m) return true;
    const std::size_t v = order[i];
    // A fresh colour is interchangeable with any other fresh colour.
    for (std::size_t c = 0; c < std::min(used + 1, limit); ++c) {
      bool clash = false;
      for (std::size_t j = 0; j < i && !clash; ++j)
        if (adj[v][order[j]] && colour[order[j]] == c) clash = true;
      if (clash) continue;
      colour[v] = c;
      if (paint(i + 1, std::max(used, c + 1), limit)) return true;
    }
    return false;
  };
  for (std::size_t limit = 1;; ++limit)
    if (paint(0, 0, limit)) {
      out.gamma = limit;
      out.colour = colour;
      return out;
    }
}

BigInt s_fp_graph(const SimplicialComplex& graph, std::int64_t p) {
  const PrimeField field(p);
  if (graph.dimension() > 1) throw InputError("s_fp_graph expects a graph (dimension at most 1)");
  const BigInt gamma = chromatic_number(graph).gamma;
  return BigInt(graph.vertex_count()) - ceil_log(p, (p - 1) * gamma + 1);
}

bool is_nondegenerate(const SimplicialComplex& k, const NondegenerateMap& map) {
  if (map.image.size() != k.vertex_count()) return false;
  for (int d = 1; d <= k.dimension(); ++d)
    for (const auto& s : k.simplices(d)) {
      std::vector<FpVector> rows;
      for (auto v : s) rows.push_back(map.image[v].generator());
      if (!is_unimodular_fp(rows, PrimeField(rows.front().p()))) return false;
    }
  return true;
}

std::optional<NondegenerateMap> min_rank_search(const SimplicialComplex& k, std::int64_t p, int r_max,
                                                const SearchLimits& limits) {
  const PrimeField field(p);
  const std::size_t m = k.vertex_count();
  if (m > limits.max_vertices || r_max > limits.max_rank)
    throw ResourceError("map search is limited to " + std::to_string(limits.max_vertices) + " vertices and rank " +
                        std::to_string(limits.max_rank));
  if (m == 0) return NondegenerateMap{};

  // Simplices of dimension >= 1, keyed by their largest vertex.
  std::vector<std::vector<Simplex>> closing(m);
  for (int d = 1; d <= k.dimension(); ++d)
    for (const auto& s : k.simplices(d)) closing[s.vertices().back()].push_back(s);
  const bool graph = k.dimension() <= 1;
  const std::size_t gamma = graph ? chromatic_number(k).gamma : 0;

  for (int r = 1; r <= r_max; ++r) {
    const std::vector<FpLine> lines = enumerate_lines_fp(r, field);
    std::vector<std::size_t> pick(m, 0);
    std::function<bool(VertexId)> assign = [&](VertexId v) {
      if (v == m) return true;
      const std::size_t choices = v == 0 ? 1 : lines.size();
      for (std::size_t c = 0; c < choices; ++c) {
        pick[v] = c;
        bool ok = true;
        for (const auto& s : closing[v]) {
          EchelonBasis basis(static_cast<std::size_t>(r), field);
          for (auto u : s)
            if (!basis.insert(lines[pick[u]].generator())) {
              ok = false;
              break;
            }
          if (!ok) break;
        }
        if (ok && assign(v + 1)) return true;
      }
      return false;
    };
    const bool found = assign(0);
    if (graph) {
      const BigInt capacity = (ipow(p, static_cast<unsigned>(r)) - 1) / (p - 1);
      if (found != (BigInt(gamma) <= capacity))
        throw VerificationError("map search disagrees with the colouring criterion at rank " + std::to_string(r));
    }
    if (found) {
      NondegenerateMap out{r, {}};
      for (std::size_t v = 0; v < m; ++v) out.image.push_back(lines[pick[v]]);
      return out;
    }
  }
  return std::nullopt;
}

BuchstaberReport buchstaber_bounds(const SimplicialComplex& k, std::int64_t p, const SearchLimits& limits) {
  const PrimeField field(p);
  BuchstaberReport r;
  r.m = k.vertex_count();
  r.gamma = chromatic_number(k).gamma;
  const BigInt m = r.m;
  r.lower = m - r.gamma;
  r.upper = m - k.dimension() - 1;
  r.coloring_upper = m - ceil_log(p, (p - 1) * BigInt(r.gamma) + 1);
  if (k.dimension() <= 1) {
    r.s_fp = s_fp_graph(k, p);
    r.method = "formula";
  } else if (r.m <= limits.max_vertices) {
    const int r_max = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(limits.max_rank), r.m));
    if (auto map = min_rank_search(k, p, r_max, limits)) {
      r.s_fp = m - map->rank;
      r.method = "search";
    } else {
      r.method = "bounds-only";
    }
  } else {
    r.method = "bounds-only";
  }
  if (r.s_fp && (*r.s_fp < r.lower || *r.s_fp > r.upper))
    throw VerificationError("s_F" + std::to_string(p) + " = " + r.s_fp->str() + " lies outside [" + r.lower.str() +
                            ", " + r.upper.str() + "]");
  return r;
}

ZetaThetaBounds zeta_theta_bounds(std::int64_t p, std::int64_t q, int n) {
  const PrimeField fp(p), fq(q);
  if (n < 1) throw InputError("n must be >= 1");
  auto at = [&](int e) {
    const BigInt lines = (ipow(p, static_cast<unsigned>(e)) - 1) / (p - 1);
    ZetaThetaBounds b;
    b.zeta_lower = ceil_log(q, (q - 1) * lines + 1);
    b.zeta_upper = lines;
    b.theta_lower = ceil_log(2, lines + 1);
    b.theta_upper = lines;
    return b;
  };
  ZetaThetaBounds b = at(n);
  const ZetaThetaBounds next = at(n + 1);
  b.monotone = b.zeta_lower <= next.zeta_lower && b.zeta_upper <= next.zeta_upper &&
               b.theta_lower <= next.theta_lower && b.theta_upper <= next.theta_upper;
  return b;
}

}  // namespace unicx
