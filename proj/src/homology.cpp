#include <unicx/homology.hpp>

#include <unicx/errors.hpp>

namespace unicx {

IntMatrix boundary_matrix(const SimplicialComplex& k, int d) {
  if (d < 0 || d > k.dimension()) throw InputError("boundary degree out of range");
  const auto cols = static_cast<Eigen::Index>(k.count(d));
  if (d == 0) return IntMatrix::Constant(1, cols, BigInt(1));
  IntMatrix m = IntMatrix::Zero(static_cast<Eigen::Index>(k.count(d - 1)), cols);
  const auto simplices = k.simplices(d);
  for (Eigen::Index j = 0; j < cols; ++j) {
    const Simplex& s = simplices[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < s.size(); ++i) {
      const auto row = k.index_of(s.without(s[i]));
      m(static_cast<Eigen::Index>(*row), j) = (i % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

BigInt HomologyProfile::betti_at(int d) const {
  if (d < -1 || d > max_dim()) return 0;
  return betti[static_cast<std::size_t>(d + 1)];
}

const std::vector<BigInt>& HomologyProfile::torsion_at(int d) const {
  static const std::vector<BigInt> none;
  if (d < -1 || d > max_dim()) return none;
  return torsion[static_cast<std::size_t>(d + 1)];
}

bool HomologyProfile::torsion_free() const {
  for (const auto& t : torsion)
    if (!t.empty()) return false;
  return true;
}

HomologyProfile reduced_homology(const SimplicialComplex& k, const HomologyOptions& options) {
  if (k.total_simplices() > options.simplex_budget)
    throw ResourceError("homology of a complex with " + std::to_string(k.total_simplices()) +
                        " simplices exceeds the budget of " + std::to_string(options.simplex_budget));
  const int dim = k.dimension();
  HomologyProfile h;
  // rank[d + 1] = rank of ∂_d for d = -1 .. dim + 1; the two ends are zero.
  std::vector<std::size_t> rank(static_cast<std::size_t>(dim + 3), 0);
  // torsion_of[d + 1] = elementary divisors > 1 of ∂_d.
  std::vector<std::vector<BigInt>> torsion_of(static_cast<std::size_t>(dim + 3));
  for (int d = 0; d <= dim; ++d) {
    const IntMatrix m = boundary_matrix(k, d);
    auto& r = rank[static_cast<std::size_t>(d + 1)];
    auto& t = torsion_of[static_cast<std::size_t>(d + 1)];
    if (static_cast<std::size_t>(m.cols()) <= options.dense_column_limit) {
      const auto snf = smith_normal_form(m);
      r = snf.rank;
      for (const auto& e : snf.diagonal)
        if (e > 1) t.push_back(e);
    } else {
      h.torsion_exact = false;
      r = rank_fraction_free(m);
      for (std::int64_t p : {2, 3, 5})
        if (rank_mod_p(m, p) != r) t.emplace_back(p);
    }
  }
  for (int d = -1; d <= dim; ++d) {
    const auto i = static_cast<std::size_t>(d + 1);
    h.betti.push_back(BigInt(k.count(d)) - rank[i] - rank[i + 1]);
    h.torsion.push_back(torsion_of[i + 1]);
  }
  return h;
}

ReisnerResult reisner_check(const SimplicialComplex& k, bool vertex_transitive, const HomologyOptions& options) {
  ReisnerResult result;
  auto check = [&](const Simplex& sigma) {
    const SimplicialComplex lnk = sigma.empty() ? SimplicialComplex{} : link(k, sigma);
    const SimplicialComplex& target = sigma.empty() ? k : lnk;
    ++result.links_checked;
    if (target.dimension() <= 0) return true;
    const HomologyProfile h = reduced_homology(target, options);
    for (int i = 0; i < target.dimension(); ++i)
      if (h.betti_at(i) != 0 || !h.torsion_at(i).empty()) {
        result.cohen_macaulay = false;
        result.witness_simplex = sigma;
        result.witness_degree = i;
        return false;
      }
    return true;
  };
  if (!check(Simplex{})) return result;
  for (int d = 0; d <= k.dimension(); ++d) {
    const auto layer = k.simplices(d);
    const std::size_t limit = vertex_transitive ? std::min<std::size_t>(1, layer.size()) : layer.size();
    for (std::size_t i = 0; i < limit; ++i)
      if (!check(layer[i])) return result;
  }
  return result;
}

}  // namespace unicx
