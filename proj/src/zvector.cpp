#include <unicx/zvector.hpp>

#include <unicx/errors.hpp>

namespace unicx {

ZVector::ZVector(std::vector<BigInt> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InputError("integer vectors need ambient dimension >= 1");
}

ZVector::ZVector(std::initializer_list<long long> coords) {
  for (auto c : coords) coords_.emplace_back(c);
  if (coords_.empty()) throw InputError("integer vectors need ambient dimension >= 1");
}

bool ZVector::is_zero() const noexcept {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

BigInt ZVector::norm1() const {
  BigInt s = 0;
  for (const auto& c : coords_) s += abs_value(c);
  return s;
}

BigInt ZVector::content() const {
  BigInt g = 0;
  for (const auto& c : coords_) g = gcd_value(g, c);
  return g;
}

ZVector ZVector::negated() const {
  std::vector<BigInt> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.emplace_back(-c);
  return ZVector(std::move(out));
}

ZLine line_canonical_z(const ZVector& v) {
  if (v.is_zero()) throw InputError("the zero vector spans no line");
  if (v.content() != 1) throw InputError("a line generator must be primitive (gcd of entries 1)");
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (v[i] != 0) return ZLine(v[i] > 0 ? v : v.negated());
  throw InputError("unreachable");
}

std::strong_ordering compare_z_lines(const ZLine& a, const ZLine& b) {
  if (a.dim() != b.dim()) throw InputError("comparing lines of different ambient dimension");
  const BigInt na = a.generator().norm1();
  const BigInt nb = b.generator().norm1();
  if (na != nb) return na < nb ? std::strong_ordering::less : std::strong_ordering::greater;
  for (std::size_t j = a.dim(); j-- > 0;) {
    const BigInt& x = a.generator()[j];
    const BigInt& y = b.generator()[j];
    if (x != y) return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace unicx
