#pragma once

// Integer vectors and lines of Z^n, with the well-order on lines used by the
// matching on the integer universal complexes.

#include <unicx/bigint.hpp>

#include <compare>
#include <functional>
#include <vector>

namespace unicx {

class ZVector {
 public:
  explicit ZVector(std::vector<BigInt> coords);
  ZVector(std::initializer_list<long long> coords);

  std::size_t dim() const noexcept { return coords_.size(); }
  const BigInt& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<BigInt>& coords() const noexcept { return coords_; }
  bool is_zero() const noexcept;
  BigInt norm1() const;
  BigInt content() const;  ///< gcd of the entries
  ZVector negated() const;

  friend bool operator==(const ZVector&, const ZVector&) = default;
  friend auto operator<=>(const ZVector& a, const ZVector& b) { return a.coords_ <=> b.coords_; }

 private:
  std::vector<BigInt> coords_;
};

/// A rank-1 direct summand of Z^n, stored by its primitive generator whose
/// first nonzero coordinate is positive.
class ZLine {
 public:
  const ZVector& generator() const noexcept { return generator_; }
  std::size_t dim() const noexcept { return generator_.dim(); }

  friend bool operator==(const ZLine&, const ZLine&) = default;

 private:
  friend ZLine line_canonical_z(const ZVector& v);
  explicit ZLine(ZVector g) : generator_(std::move(g)) {}
  ZVector generator_;
};

/// Throws InputError on the zero vector or on a non-primitive vector.
ZLine line_canonical_z(const ZVector& v);

/// Line order: by 1-norm of the generator, ties broken at the last differing
/// coordinate (the smaller coordinate wins).
std::strong_ordering compare_z_lines(const ZLine& a, const ZLine& b);

inline bool operator<(const ZLine& a, const ZLine& b) { return compare_z_lines(a, b) < 0; }

}  // namespace unicx

template <>
struct std::hash<unicx::ZVector> {
  std::size_t operator()(const unicx::ZVector& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (const auto& c : v.coords()) h = (h ^ std::hash<std::string>{}(c.str())) * 1099511628211ULL;
    return h;
  }
};
