#include <unicx/universal_fp.hpp>

#include <unicx/errors.hpp>
#include <unicx/linalg.hpp>

#include <algorithm>
#include <functional>

namespace unicx {

std::string to_string(Variant v) { return v == Variant::X ? "X" : "K"; }

Variant parse_variant(const std::string& s) {
  if (s == "X" || s == "x") return Variant::X;
  if (s == "K" || s == "k") return Variant::K;
  throw InputError("variant must be X or K, got '" + s + "'");
}

namespace {

std::string kind_name(const UniversalKind& kind) {
  return to_string(kind.variant) + "(F_" + std::to_string(kind.p) + "^" + std::to_string(kind.n) + ")";
}

void check_kind(const UniversalKind& kind) {
  PrimeField field(kind.p);
  if (kind.n < 1) throw InputError("ambient dimension must be >= 1");
}

BigInt exact_div(const BigInt& a, const BigInt& b, const char* what) {
  if (a % b != 0) throw VerificationError(std::string("inexact division in ") + what);
  return a / b;
}

}  // namespace

FVector formula_f_vector(const UniversalKind& kind, std::optional<int> link_dim) {
  check_kind(kind);
  int shift = 0;
  if (link_dim) {
    if (*link_dim < 0 || *link_dim > kind.n - 1) throw InputError("link dimension must lie in [0, n-1]");
    shift = *link_dim + 1;
  }
  const BigInt p = kind.p;
  const BigInt pn = ipow(p, static_cast<unsigned>(kind.n));
  std::vector<BigInt> entries{BigInt(1)};
  BigInt numerator = 1;
  for (int k = 0; shift + k <= kind.n - 1; ++k) {
    numerator *= pn - ipow(p, static_cast<unsigned>(shift + k));
    BigInt denominator = factorial(static_cast<unsigned>(k + 1));
    if (kind.variant == Variant::K) denominator *= ipow(p - 1, static_cast<unsigned>(k + 1));
    entries.push_back(exact_div(numerator, denominator, "the f-vector formula"));
  }
  return FVector(std::move(entries));
}

SphereCount sphere_count(const UniversalKind& kind, std::optional<int> link_dim) {
  const FVector f = formula_f_vector(kind, link_dim);
  const int d = f.dimension();
  // (-1)^{d+1} + sum_k (-1)^{d-k} f_k, i.e. the alternating sum from f_{-1}.
  BigInt count = 0;
  for (int k = -1; k <= d; ++k) {
    if ((d - k) % 2 == 0)
      count += f(k);
    else
      count -= f(k);
  }
  if (count < 0) throw VerificationError("negative sphere count for " + kind_name(kind));
  return {d, count};
}

SimplicialComplex build_universal(const UniversalKind& kind, std::size_t budget) {
  check_kind(kind);
  const FVector expected = formula_f_vector(kind);
  BigInt total = 0;
  for (int d = 0; d <= expected.dimension(); ++d) total += expected(d);
  if (total > budget)
    throw ResourceError(kind_name(kind) + " has " + total.str() + " simplices, over the budget of " +
                        std::to_string(budget));

  const PrimeField field(kind.p);
  std::vector<FpVector> gens;
  std::vector<Label> labels;
  if (kind.variant == Variant::X) {
    gens = enumerate_nonzero_vectors_fp(kind.n, field);
    for (const auto& v : gens) labels.emplace_back(v);
  } else {
    for (const auto& l : enumerate_lines_fp(kind.n, field)) {
      gens.push_back(l.generator());
      labels.emplace_back(l);
    }
  }

  const auto n = static_cast<std::size_t>(kind.n);
  std::vector<Simplex> top;
  std::vector<VertexId> current;
  std::function<void(const EchelonBasis&, VertexId)> extend = [&](const EchelonBasis& basis, VertexId from) {
    if (current.size() == n) {
      top.emplace_back(current);
      return;
    }
    for (VertexId v = from; v < gens.size(); ++v) {
      if (basis.in_span(gens[v])) continue;
      EchelonBasis next = basis;
      next.insert(gens[v]);
      current.push_back(v);
      extend(next, v + 1);
      current.pop_back();
    }
  };
  extend(EchelonBasis(n, field), 0);
  return from_simplices(top, std::move(labels));
}

LabelCoordinates label_coordinates(const Label& label) {
  struct Visitor {
    LabelCoordinates operator()(const std::string& s) const {
      throw InputError("vertex '" + s + "' has no coordinates");
    }
    LabelCoordinates operator()(const FpVector& v) const {
      return {std::vector<BigInt>(v.coords().begin(), v.coords().end()), v.p()};
    }
    LabelCoordinates operator()(const FpLine& l) const { return (*this)(l.generator()); }
    LabelCoordinates operator()(const ZVector& v) const { return {v.coords(), 0}; }
    LabelCoordinates operator()(const ZLine& l) const { return {l.generator().coords(), 0}; }
  };
  return std::visit(Visitor{}, label);
}

namespace {

std::size_t coordinate_rank(const std::vector<LabelCoordinates>& rows) {
  if (rows.empty()) return 0;
  const std::size_t n = rows.front().coords.size();
  const std::int64_t modulus = rows.front().modulus;
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].coords.size() != n || rows[i].modulus != modulus) throw InputError("labels of mixed type");
    for (std::size_t j = 0; j < n; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i].coords[j];
  }
  return modulus == 0 ? rank_fraction_free(m) : rank_mod_p(m, modulus);
}

bool is_unit_vector(const std::vector<BigInt>& c, std::size_t j) {
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != (i == j ? 1 : 0)) return false;
  return true;
}

std::optional<VertexId> find_unit_vertex(const SimplicialComplex& k, std::size_t j) {
  for (VertexId v = 0; v < k.vertex_count(); ++v)
    if (is_unit_vector(label_coordinates(k.label(v)).coords, j)) return v;
  return std::nullopt;
}

std::size_t ambient_dim(const SimplicialComplex& k) {
  if (k.vertex_count() == 0) throw InputError("complex has no vertices");
  return label_coordinates(k.label(0)).coords.size();
}

}  // namespace

std::size_t label_rank(const SimplicialComplex& k, std::span<const VertexId> vertices) {
  std::vector<LabelCoordinates> rows;
  for (auto v : vertices) rows.push_back(label_coordinates(k.label(v)));
  return coordinate_rank(rows);
}

std::vector<VertexId> standard_pivots(const SimplicialComplex& k) {
  const std::size_t n = ambient_dim(k);
  std::vector<VertexId> out;
  for (std::size_t j = 0; j < n; ++j) {
    auto v = find_unit_vertex(k, j);
    if (!v) throw InputError("no vertex labelled by e_" + std::to_string(j + 1));
    out.push_back(*v);
  }
  return out;
}

std::vector<VertexId> link_pivots(const SimplicialComplex& k, const Simplex& sigma, const SimplicialComplex& lnk) {
  const std::size_t n = ambient_dim(k);
  std::vector<LabelCoordinates> rows;
  for (auto v : sigma) rows.push_back(label_coordinates(k.label(v)));
  const std::int64_t modulus = label_coordinates(k.label(0)).modulus;
  std::vector<VertexId> out;
  for (std::size_t j = 0; j < n && rows.size() < n; ++j) {
    std::vector<BigInt> e(n, BigInt(0));
    e[j] = 1;
    rows.push_back({e, modulus});
    if (coordinate_rank(rows) < rows.size()) {
      rows.pop_back();
      continue;
    }
    auto v = find_unit_vertex(lnk, j);
    if (!v) throw InputError("e_" + std::to_string(j + 1) + " extends the simplex but is not in its link");
    out.push_back(*v);
  }
  return out;
}

std::vector<VertexId> phi_vertex_map(const SimplicialComplex& x, const SimplicialComplex& k) {
  std::unordered_map<FpLine, VertexId> line_id;
  for (VertexId v = 0; v < k.vertex_count(); ++v) line_id.emplace(std::get<FpLine>(k.label(v)), v);
  std::vector<VertexId> out;
  out.reserve(x.vertex_count());
  for (VertexId v = 0; v < x.vertex_count(); ++v) {
    auto it = line_id.find(line_canonical_fp(std::get<FpVector>(x.label(v))));
    if (it == line_id.end()) throw InputError("X and K complexes do not match");
    out.push_back(it->second);
  }
  return out;
}

Simplex project_phi(const SimplicialComplex& x, const SimplicialComplex& k, const Simplex& sigma) {
  if (!x.contains(sigma)) throw InputError("simplex is not in X");
  return apply_vertex_map(phi_vertex_map(x, k), sigma);
}

std::vector<VertexId> section_psi(const SimplicialComplex& k, const SimplicialComplex& x,
                                  const std::unordered_map<FpLine, FpVector>& choice) {
  std::unordered_map<FpVector, VertexId> vector_id;
  for (VertexId v = 0; v < x.vertex_count(); ++v) vector_id.emplace(std::get<FpVector>(x.label(v)), v);
  std::vector<VertexId> out;
  out.reserve(k.vertex_count());
  for (VertexId v = 0; v < k.vertex_count(); ++v) {
    const auto& line = std::get<FpLine>(k.label(v));
    auto c = choice.find(line);
    const FpVector& g = c == choice.end() ? line.generator() : c->second;
    if (g.is_zero() || !line.contains(g)) throw InputError("chosen generator " + label_to_string(g) + " is not on " + label_to_string(line));
    out.push_back(vector_id.at(g));
  }
  return out;
}

Simplex apply_vertex_map(std::span<const VertexId> map, const Simplex& sigma) {
  std::vector<VertexId> img;
  for (auto v : sigma) img.push_back(map[v]);
  return Simplex::from_unsorted(std::move(img));
}

}  // namespace unicx
