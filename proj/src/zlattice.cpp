#include <unicx/zlattice.hpp>

#include <unicx/errors.hpp>
#include <unicx/linalg.hpp>

#include <algorithm>
#include <functional>
#include <istream>
#include <sstream>

namespace unicx {

bool is_unimodular_z(std::span<const ZVector> vectors) {
  if (vectors.empty()) return true;
  const std::size_t n = vectors.front().dim();
  for (const auto& v : vectors)
    if (v.dim() != n) throw InputError("dimension mismatch in is_unimodular_z");
  if (vectors.size() > n) return false;
  IntMatrix m(static_cast<Eigen::Index>(vectors.size()), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = vectors[i][j];
  const auto snf = smith_normal_form(m);
  if (snf.rank != vectors.size()) return false;
  return std::all_of(snf.diagonal.begin(), snf.diagonal.end(), [](const BigInt& d) { return d == 1; });
}

std::vector<ZLine> enumerate_z_lines(int n, int max_norm) {
  if (n < 1) throw InputError("ambient dimension must be >= 1");
  if (max_norm < 1) throw InputError("max_norm must be >= 1");
  std::vector<ZLine> out;
  std::vector<BigInt> c(static_cast<std::size_t>(n), BigInt(0));
  // Fill coordinates left to right; `leading` tracks whether a nonzero entry
  // has been placed, so the first nonzero entry is forced positive.
  std::function<void(std::size_t, int, bool)> fill = [&](std::size_t i, int budget, bool leading) {
    if (i == c.size()) {
      if (!leading) return;
      ZVector v(c);
      if (v.content() == 1) out.push_back(line_canonical_z(v));
      return;
    }
    for (int a = leading ? -budget : 0; a <= budget; ++a) {
      c[i] = a;
      fill(i + 1, budget - std::abs(a), leading || a != 0);
    }
    c[i] = 0;
  };
  fill(0, max_norm, false);
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex build_truncated_universal_z(Variant variant, int n, int max_norm, std::size_t budget) {
  std::vector<ZVector> gens;
  std::vector<Label> labels;
  for (const auto& l : enumerate_z_lines(n, max_norm)) {
    if (variant == Variant::K) {
      gens.push_back(l.generator());
      labels.emplace_back(l);
    } else {
      for (const auto& v : {l.generator(), l.generator().negated()}) {
        gens.push_back(v);
        labels.emplace_back(v);
      }
    }
  }
  std::vector<Simplex> found;
  std::vector<VertexId> current;
  std::vector<ZVector> rows;
  std::function<void(VertexId)> extend = [&](VertexId from) {
    for (VertexId v = from; v < gens.size(); ++v) {
      rows.push_back(gens[v]);
      if (is_unimodular_z(rows)) {
        current.push_back(v);
        found.emplace_back(current);
        if (found.size() > budget)
          throw ResourceError("truncated " + to_string(variant) + "(Z^" + std::to_string(n) + ") with max norm " +
                              std::to_string(max_norm) + " exceeds the budget of " + std::to_string(budget) +
                              " simplices");
        extend(v + 1);
        current.pop_back();
      }
      rows.pop_back();
    }
  };
  extend(0);
  return from_simplices(found, std::move(labels));
}

std::vector<ZLine> critical_family_sigma(int n, int k) {
  if (n < 2) throw InputError("σ_k needs n >= 2");
  if (k < 1) throw InputError("σ_k needs k >= 1");
  auto vec = [n](long long a, long long b, int third) {
    std::vector<BigInt> c(static_cast<std::size_t>(n), BigInt(0));
    c[0] = a;
    c[1] = b;
    if (third >= 2) c[static_cast<std::size_t>(third)] = 1;
    return ZVector(std::move(c));
  };
  std::vector<ZLine> out{line_canonical_z(vec(1, k, -1)), line_canonical_z(vec(2, 2LL * k - 1, -1))};
  for (int j = 2; j < n; ++j) out.push_back(line_canonical_z(vec(1, 0, j)));
  return out;
}

QuasitoricPair read_quasitoric_pair(std::istream& in) {
  std::string line;
  std::ostringstream facet_text;
  bool separator = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string word;
    if (ls >> word && word == "lambda") {
      separator = true;
      break;
    }
    facet_text << line << '\n';
  }
  if (!separator) throw InputError("quasitoric pair file has no 'lambda' line");
  FacetList fl = parse_facet_list(facet_text.str());

  std::vector<std::vector<BigInt>> rows;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    std::vector<BigInt> row;
    while (ls >> tok) {
      if (row.empty() && tok.front() == '#') break;
      try {
        std::size_t used = 0;
        const long long value = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        row.emplace_back(value);
      } catch (const std::exception&) {
        throw InputError("bad matrix entry '" + tok + "'");
      }
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size()) throw InputError("matrix rows have different lengths");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InputError("empty characteristic matrix");
  QuasitoricPair pair{std::move(fl.complex), std::move(fl.facets_in_order),
                      IntMatrix(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()))};
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      pair.lambda(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return pair;
}

QuasitoricPair parse_quasitoric_pair(const std::string& text) {
  std::istringstream in(text);
  return read_quasitoric_pair(in);
}

QuasitoricCheck validate_quasitoric_pair(const QuasitoricPair& pair) {
  const SimplicialComplex& k = pair.dual_complex;
  const auto n = pair.lambda.rows();
  if (static_cast<std::size_t>(pair.lambda.cols()) != k.vertex_count())
    throw InputError("Λ has " + std::to_string(pair.lambda.cols()) + " columns for " +
                     std::to_string(k.vertex_count()) + " vertices");
  if (!k.is_pure() || k.dimension() != n - 1)
    throw InputError("dual complex must be pure of dimension " + std::to_string(n - 1));
  const std::vector<Simplex> facets = pair.facets.empty() ? k.facets() : pair.facets;
  for (const auto& f : facets) {
    IntMatrix minor(n, n);
    for (Eigen::Index j = 0; j < n; ++j) minor.col(j) = pair.lambda.col(f[static_cast<std::size_t>(j)]);
    const BigInt det = determinant(minor);
    if (abs_value(det) != 1) return {false, f, det};
  }
  return {};
}

std::vector<ZVector> pair_to_simplicial_map(const QuasitoricPair& pair) {
  const QuasitoricCheck check = validate_quasitoric_pair(pair);
  if (!check.valid) throw InputError("quasitoric pair is not valid; the map is degenerate");
  std::vector<ZVector> out;
  for (Eigen::Index j = 0; j < pair.lambda.cols(); ++j) {
    std::vector<BigInt> c;
    for (Eigen::Index i = 0; i < pair.lambda.rows(); ++i) c.push_back(pair.lambda(i, j));
    out.emplace_back(std::move(c));
  }
  return out;
}

}  // namespace unicx
