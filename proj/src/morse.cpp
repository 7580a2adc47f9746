#include <unicx/morse.hpp>

#include <unicx/errors.hpp>
#include <unicx/universal_fp.hpp>

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace unicx {

Matching greedy_matching(const SimplicialComplex& k, std::span<const VertexId> pivots, MatchingFlavor flavor) {
  for (auto v : pivots)
    if (v >= k.vertex_count()) throw InputError("pivot " + std::to_string(v) + " is not a vertex");
  const SimplexIndexer idx(k);
  std::vector<bool> matched(idx.size(), false);
  Matching m;
  m.pivot_schedule.assign(pivots.begin(), pivots.end());

  for (std::size_t step = 0; step < pivots.size(); ++step) {
    const VertexId pivot = pivots[step];
    for (int d = 0; d < k.dimension(); ++d) {
      for (const auto& sigma : k.simplices(d)) {
        if (sigma.contains(pivot)) continue;
        const std::size_t g = idx.global(sigma);
        if (matched[g]) continue;
        Simplex tau = sigma.with(pivot);
        if (!k.contains(tau)) continue;
        const std::size_t h = idx.global(tau);
        if (matched[h]) continue;
        if (flavor == MatchingFlavor::line_flavor) {
          std::vector<VertexId> verts(sigma.begin(), sigma.end());
          const std::size_t before = label_rank(k, verts);
          verts.push_back(pivot);
          if (label_rank(k, verts) == before) continue;
        }
        matched[g] = matched[h] = true;
        m.pairs.push_back({sigma, std::move(tau), pivot, step});
      }
    }
  }
  return m;
}

void validate_matching(const SimplicialComplex& k, const Matching& m) {
  const SimplexIndexer idx(k);
  std::vector<bool> used(idx.size(), false);
  for (const auto& pr : m.pairs) {
    if (pr.lower.empty()) throw InputError("the empty simplex cannot be matched");
    if (!k.contains(pr.lower) || !k.contains(pr.upper)) throw InputError("matched simplex is not in the complex");
    if (pr.lower.contains(pr.pivot) || pr.lower.with(pr.pivot) != pr.upper)
      throw InputError("matched pair does not differ by its pivot");
    for (const Simplex* s : {&pr.lower, &pr.upper}) {
      const std::size_t g = idx.global(*s);
      if (used[g]) throw InputError("simplex matched twice");
      used[g] = true;
    }
  }
}

AcyclicityResult check_acyclic(const SimplicialComplex& k, const Matching& m) {
  const SimplexIndexer idx(k);
  const std::size_t n = idx.size();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> up(n, none);    // lower → upper
  std::vector<std::size_t> down(n, none);  // upper → lower
  for (const auto& pr : m.pairs) {
    const std::size_t lo = idx.global(pr.lower);
    const std::size_t hi = idx.global(pr.upper);
    up[lo] = hi;
    down[hi] = lo;
  }

  auto successors = [&](std::size_t g) {
    std::vector<std::size_t> out;
    const Simplex& s = idx.simplex(g);
    if (s.size() > 1)
      for (auto v : s) {
        const std::size_t f = idx.global(s.without(v));
        if (f != down[g]) out.push_back(f);
      }
    if (up[g] != none) out.push_back(up[g]);
    return out;
  };

  enum : unsigned char { white, grey, black };
  std::vector<unsigned char> colour(n, white);
  struct Frame {
    std::size_t node;
    std::vector<std::size_t> next;
    std::size_t pos;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (colour[root] != white) continue;
    std::vector<Frame> stack;
    stack.push_back({root, successors(root), 0});
    colour[root] = grey;
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.pos == top.next.size()) {
        colour[top.node] = black;
        stack.pop_back();
        continue;
      }
      const std::size_t w = top.next[top.pos++];
      if (colour[w] == grey) {
        AcyclicityResult r;
        r.acyclic = false;
        auto it = std::find_if(stack.begin(), stack.end(), [&](const Frame& f) { return f.node == w; });
        for (; it != stack.end(); ++it) r.cycle.push_back(idx.simplex(it->node));
        return r;
      }
      if (colour[w] == white) {
        colour[w] = grey;
        stack.push_back({w, successors(w), 0});
      }
    }
  }
  return {};
}

CriticalCensus critical_cells(const SimplicialComplex& k, const Matching& m) {
  const SimplexIndexer idx(k);
  std::vector<bool> matched(idx.size(), false);
  for (const auto& pr : m.pairs) matched[idx.global(pr.lower)] = matched[idx.global(pr.upper)] = true;
  CriticalCensus c;
  for (std::size_t g = 0; g < idx.size(); ++g)
    if (!matched[g]) {
      c.cells.push_back(idx.simplex(g));
      ++c.counts[idx.dimension_of(g)];
    }
  return c;
}

std::string describe_cycle(const SimplicialComplex& k, const std::vector<Simplex>& cycle) {
  std::ostringstream os;
  for (std::size_t i = 0; i <= cycle.size() && !cycle.empty(); ++i) {
    const Simplex& s = cycle[i % cycle.size()];
    os << (i ? " -> " : "") << '{';
    for (std::size_t j = 0; j < s.size(); ++j) os << (j ? "," : "") << label_to_string(k.label(s[j]));
    os << '}';
  }
  return os.str();
}

MorseSummary morse_summary(const SimplicialComplex& k, std::span<const VertexId> pivots, MatchingFlavor flavor) {
  const Matching m = greedy_matching(k, pivots, flavor);
  validate_matching(k, m);
  const AcyclicityResult acyclic = check_acyclic(k, m);
  if (!acyclic.acyclic) throw VerificationError("matching has a cycle: " + describe_cycle(k, acyclic.cycle));

  MorseSummary s;
  s.pair_count = m.pairs.size();
  s.census = critical_cells(k, m);
  s.acyclic = true;

  BigInt chi = f_vector(k).euler_characteristic();
  BigInt alternating = 0;
  for (const auto& [d, c] : s.census.counts) alternating += (d % 2 == 0) ? BigInt(c) : BigInt(-BigInt(c));
  s.euler_consistent = chi == alternating;

  const int top = k.dimension();
  for (const auto& [d, c] : s.census.counts) {
    if (top > 0 && d == 0 && c != 1) s.vertex_plus_top = false;
    if (d != 0 && d != top) s.vertex_plus_top = false;
  }

  for (const auto& sigma : k.simplices(top))
    if (std::none_of(pivots.begin(), pivots.end(), [&](VertexId v) { return sigma.contains(v); })) ++s.pivot_avoiding_top;
  return s;
}

BigInt matching_weight(const Simplex& sigma, std::span<const VertexId> order) {
  std::unordered_map<VertexId, std::size_t> pos;
  for (std::size_t i = 0; i < order.size(); ++i) pos.emplace(order[i], i + 1);
  BigInt w = 0;
  for (auto v : sigma) {
    auto it = pos.find(v);
    if (it == pos.end()) throw InputError("vertex missing from the order");
    w += it->second;
  }
  return w;
}

}  // namespace unicx
