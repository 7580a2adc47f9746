#include <unicx/shelling.hpp>

#include <unicx/errors.hpp>

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace unicx {

ShellingCheck verify_shelling(const SimplicialComplex& k, std::span<const Simplex> order) {
  if (!k.is_pure()) throw InputError("shelling requires a pure complex");
  std::vector<Simplex> sorted(order.begin(), order.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted != k.facets()) throw InputError("order is not a permutation of the facets");

  for (std::size_t kk = 1; kk < order.size(); ++kk) {
    const Simplex& f = order[kk];
    std::vector<Simplex> meets;
    meets.reserve(kk);
    std::vector<VertexId> ridge_missing;  // v with F_k \ {v} among the intersections
    for (std::size_t i = 0; i < kk; ++i) {
      Simplex m = order[i].intersection(f);
      if (m.size() + 1 == f.size()) {
        std::vector<VertexId> gone;
        std::set_difference(f.begin(), f.end(), m.begin(), m.end(), std::back_inserter(gone));
        ridge_missing.push_back(gone.front());
      }
      meets.push_back(std::move(m));
    }
    bool ok = !ridge_missing.empty();
    for (std::size_t i = 0; i < meets.size() && ok; ++i)
      ok = std::any_of(ridge_missing.begin(), ridge_missing.end(), [&](VertexId v) { return !meets[i].contains(v); });
    if (!ok) return {false, kk + 1};
  }
  return {};
}

namespace {

using Facet = std::vector<FpVector>;

FpVector append_zero(const FpVector& v, const PrimeField& field) {
  auto c = v.coords();
  c.push_back(0);
  return FpVector(std::move(c), field);
}

std::vector<Facet> shell_labels(Variant variant, const PrimeField& field, int n) {
  std::vector<Facet> out;
  if (n == 1) {
    if (variant == Variant::K) return {Facet{FpVector({1}, field)}};
    for (std::int64_t a = 1; a < field.p(); ++a) out.push_back(Facet{FpVector({a}, field)});
    return out;
  }
  std::vector<Facet> prev = shell_labels(variant, field, n - 1);
  for (auto& f : prev) {
    for (auto& v : f) v = append_zero(v, field);
    std::sort(f.begin(), f.end());
  }

  const auto last = static_cast<std::size_t>(n - 1);
  std::vector<FpVector> fresh;  // vertices off the hyperplane x_n = 0
  if (variant == Variant::K) {
    for (const auto& l : enumerate_lines_fp(n, field))
      if (l.generator()[last] != 0) fresh.push_back(l.generator());
  } else {
    for (const auto& v : enumerate_nonzero_vectors_fp(n, field))
      if (v[last] != 0) fresh.push_back(v);
  }

  // One group per independent σ ⊂ fresh, by size and then lexicographically.
  auto emit_group = [&](const std::vector<std::size_t>& pick) {
    const FpVector& s1 = fresh[pick.front()];
    const std::int64_t inv = field.inverse(s1[last]);
    EchelonBasis w(static_cast<std::size_t>(n), field);
    for (std::size_t j = 1; j < pick.size(); ++j) {
      const FpVector& s = fresh[pick[j]];
      const std::int64_t c = field.mul(s[last], inv);
      std::vector<std::int64_t> diff(s.coords());
      for (std::size_t t = 0; t < diff.size(); ++t) diff[t] -= c * s1[t];
      w.insert(FpVector(std::move(diff), field));
    }
    std::vector<FpVector> old_part = w.reduced_basis();
    std::sort(old_part.begin(), old_part.end());
    for (const auto& g : prev) {
      if (!std::includes(g.begin(), g.end(), old_part.begin(), old_part.end())) continue;
      Facet f;
      std::set_difference(g.begin(), g.end(), old_part.begin(), old_part.end(), std::back_inserter(f));
      for (auto i : pick) f.push_back(fresh[i]);
      out.push_back(std::move(f));
    }
  };
  std::vector<std::size_t> pick;
  std::function<void(const EchelonBasis&, std::size_t, std::size_t)> choose =
      [&](const EchelonBasis& basis, std::size_t from, std::size_t size) {
        if (pick.size() == size) {
          emit_group(pick);
          return;
        }
        for (std::size_t i = from; i < fresh.size(); ++i) {
          if (basis.in_span(fresh[i])) continue;
          EchelonBasis next = basis;
          next.insert(fresh[i]);
          pick.push_back(i);
          choose(next, i + 1, size);
          pick.pop_back();
        }
      };
  for (std::size_t size = 1; size <= static_cast<std::size_t>(n); ++size)
    choose(EchelonBasis(static_cast<std::size_t>(n), field), 0, size);
  return out;
}

}  // namespace

std::vector<Simplex> construct_shelling_fp(const UniversalKind& kind, const SimplicialComplex& k) {
  const PrimeField field(kind.p);
  if (kind.n < 1) throw InputError("ambient dimension must be >= 1");
  std::unordered_map<FpVector, VertexId> id;
  for (VertexId v = 0; v < k.vertex_count(); ++v) {
    const Label& l = k.label(v);
    if (const auto* line = std::get_if<FpLine>(&l))
      id.emplace(line->generator(), v);
    else
      id.emplace(std::get<FpVector>(l), v);
  }
  std::vector<Simplex> order;
  for (const auto& f : shell_labels(kind.variant, field, kind.n)) {
    std::vector<VertexId> verts;
    for (const auto& v : f) {
      auto it = id.find(v);
      if (it == id.end()) throw InputError("complex does not match the requested universal complex");
      verts.push_back(it->second);
    }
    order.push_back(Simplex::from_unsorted(std::move(verts)));
  }
  if (order.size() != k.count(k.dimension()))
    throw VerificationError("inductive order has " + std::to_string(order.size()) + " facets, expected " +
                            std::to_string(k.count(k.dimension())));
  const ShellingCheck check = verify_shelling(k, order);
  if (!check.valid)
    throw VerificationError("inductive order fails the shelling condition at facet " +
                            std::to_string(*check.failing_index));
  return order;
}

ShiftedResult is_shifted(const SimplicialComplex& k, std::size_t max_vertices) {
  const std::size_t m = k.vertex_count();
  if (m > max_vertices)
    throw ResourceError("shiftedness search is limited to " + std::to_string(max_vertices) + " vertices, complex has " +
                        std::to_string(m));
  // may_precede[u][v]: replacing v by u never leaves K.
  std::vector<std::vector<bool>> may_precede(m, std::vector<bool>(m, true));
  for (int d = 0; d <= k.dimension(); ++d)
    for (const auto& s : k.simplices(d))
      for (auto v : s)
        for (VertexId u = 0; u < m; ++u)
          if (!s.contains(u) && may_precede[u][v] && !k.contains(s.without(v).with(u))) may_precede[u][v] = false;

  std::vector<std::size_t> degree(m, 0);
  for (const auto& e : k.simplices(1))
    for (auto v : e) ++degree[v];
  std::vector<VertexId> candidates(m);
  for (VertexId v = 0; v < m; ++v) candidates[v] = v;
  std::stable_sort(candidates.begin(), candidates.end(), [&](VertexId a, VertexId b) { return degree[a] > degree[b]; });

  ShiftedResult result;
  result.labelling.assign(m, 0);
  std::vector<bool> placed(m, false);
  std::function<bool(std::size_t)> place = [&](std::size_t position) {
    if (position == m) return true;
    for (auto u : candidates) {
      if (placed[u]) continue;
      bool fits = true;
      for (VertexId w = 0; w < m && fits; ++w)
        if (w != u && !placed[w] && !may_precede[u][w]) fits = false;
      if (!fits) continue;
      placed[u] = true;
      result.labelling[u] = position + 1;
      if (place(position + 1)) return true;
      placed[u] = false;
    }
    return false;
  };
  result.shifted = place(0);
  if (!result.shifted) result.labelling.clear();
  return result;
}

std::vector<Simplex> labelled_lex_order(const SimplicialComplex& k, const std::vector<std::size_t>& labelling) {
  auto key = [&](const Simplex& s) {
    std::vector<std::size_t> out;
    for (auto v : s) out.push_back(labelling.at(v));
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<Simplex> facets = k.facets();
  std::sort(facets.begin(), facets.end(), [&](const Simplex& a, const Simplex& b) { return key(a) < key(b); });
  return facets;
}

}  // namespace unicx
