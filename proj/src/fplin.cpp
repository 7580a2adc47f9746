#include <unicx/fplin.hpp>

#include <unicx/errors.hpp>
#include <unicx/linalg.hpp>

#include <algorithm>
#include <string>

namespace unicx {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::int64_t p) : p_(p) {
  if (p >= (std::int64_t{1} << 31) || !is_prime(p)) throw InputError("not a supported prime: " + std::to_string(p));
}

std::int64_t PrimeField::inverse(std::int64_t a) const {
  if (reduce(a) == 0) throw InputError("zero has no inverse in F_" + std::to_string(p_));
  return detail::mod_inverse(a, p_);
}

FpVector::FpVector(std::vector<std::int64_t> coords, const PrimeField& field) : coords_(std::move(coords)), p_(field.p()) {
  if (coords_.empty()) throw InputError("F_p vectors need ambient dimension >= 1");
  for (auto& c : coords_) c = field.reduce(c);
}

FpVector FpVector::unit(std::size_t n, std::size_t i, const PrimeField& field) {
  std::vector<std::int64_t> c(n, 0);
  c.at(i) = 1;
  return FpVector(std::move(c), field);
}

bool FpVector::is_zero() const noexcept {
  for (auto c : coords_)
    if (c != 0) return false;
  return true;
}

FpVector FpVector::scaled(std::int64_t c) const {
  const PrimeField field(p_);
  std::vector<std::int64_t> out(coords_.size());
  const std::int64_t cc = field.reduce(c);
  for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = field.mul(coords_[i], cc);
  return FpVector(std::move(out), field);
}

bool FpLine::contains(const FpVector& v) const {
  if (v.dim() != dim() || v.p() != generator_.p()) return false;
  if (v.is_zero()) return true;
  return line_canonical_fp(v) == *this;
}

std::vector<std::int64_t> EchelonBasis::reduce(std::vector<std::int64_t> v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::int64_t f = v[pivots_[r]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) v[j] = field_.reduce(v[j] - f * rows_[r][j]);
  }
  return v;
}

bool EchelonBasis::insert(const FpVector& v) {
  if (v.dim() != n_ || v.p() != field_.p()) throw InputError("dimension or field mismatch in echelon basis");
  auto w = reduce(v.coords());
  std::size_t piv = 0;
  while (piv < n_ && w[piv] == 0) ++piv;
  if (piv == n_) return false;
  const std::int64_t inv = field_.inverse(w[piv]);
  for (auto& x : w) x = field_.mul(x, inv);
  rows_.push_back(std::move(w));
  pivots_.push_back(piv);
  return true;
}

bool EchelonBasis::in_span(const FpVector& v) const {
  if (v.dim() != n_ || v.p() != field_.p()) throw InputError("dimension or field mismatch in echelon basis");
  for (auto x : reduce(v.coords()))
    if (x != 0) return false;
  return true;
}

std::vector<FpVector> EchelonBasis::reduced_basis() const {
  // Back-substitute so every pivot column is a unit column, then sort by pivot.
  std::vector<std::vector<std::int64_t>> rows = rows_;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t s = 0; s < rows.size(); ++s) {
      if (s == r) continue;
      const std::int64_t f = rows[s][pivots_[r]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) rows[s][j] = field_.reduce(rows[s][j] - f * rows[r][j]);
    }
  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  std::vector<FpVector> out;
  for (auto i : order) out.emplace_back(rows[i], field_);
  return out;
}

std::size_t rank_fp(std::span<const FpVector> vectors, const PrimeField& field) {
  if (vectors.empty()) return 0;
  const std::size_t n = vectors.front().dim();
  DenseMatrix<std::int64_t> m(static_cast<Eigen::Index>(vectors.size()), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].dim() != n) throw InputError("dimension mismatch in rank_fp");
    if (vectors[i].p() != field.p()) throw InputError("field mismatch in rank_fp");
    for (std::size_t j = 0; j < n; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = vectors[i][j];
  }
  return rank_mod_p(m, field.p());
}

bool is_unimodular_fp(std::span<const FpVector> vectors, const PrimeField& field) {
  return rank_fp(vectors, field) == vectors.size();
}

FpLine line_canonical_fp(const FpVector& v) {
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (v[i] != 0) {
      const PrimeField field(v.p());
      return FpLine(v.scaled(field.inverse(v[i])));
    }
  throw InputError("the zero vector spans no line");
}

std::vector<FpVector> enumerate_nonzero_vectors_fp(int n, const PrimeField& field) {
  if (n < 1) throw InputError("ambient dimension must be >= 1");
  std::vector<FpVector> out;
  std::vector<std::int64_t> c(static_cast<std::size_t>(n), 0);
  for (;;) {
    // Odometer increment with the last coordinate fastest: lexicographic order.
    int i = n - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == field.p() - 1) c[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    out.emplace_back(c, field);
  }
  return out;
}

std::vector<FpLine> enumerate_lines_fp(int n, const PrimeField& field) {
  std::vector<FpLine> out;
  for (auto& v : enumerate_nonzero_vectors_fp(n, field)) {
    std::size_t lead = 0;
    while (v[lead] == 0) ++lead;
    if (v[lead] == 1) out.push_back(line_canonical_fp(v));
  }
  return out;
}

}  // namespace unicx
