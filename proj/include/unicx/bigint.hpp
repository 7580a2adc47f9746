#pragma once

// Arbitrary-precision integers usable as an Eigen scalar.

#include <Eigen/Core>
#include <boost/multiprecision/traits/is_byte_container.hpp>

// Eigen expression types expose a `const_iterator` typedef of `void`, which
// trips the byte-container detection of cpp_int's converting constructor.
namespace boost::multiprecision::detail {
template <class C>
  requires std::is_base_of_v<Eigen::EigenBase<C>, C>
struct is_byte_container<C> : boost::false_type {};
}  // namespace boost::multiprecision::detail

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <string>

namespace unicx {

using BigInt = boost::multiprecision::cpp_int;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = DenseMatrix<BigInt>;

inline BigInt ipow(BigInt base, unsigned exponent) {
  BigInt result = 1;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

/// Smallest k >= 0 with base^k >= value. Requires base >= 2.
inline unsigned ceil_log(const BigInt& base, const BigInt& value) {
  unsigned k = 0;
  BigInt power = 1;
  while (power < value) {
    power *= base;
    ++k;
  }
  return k;
}

inline BigInt factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

inline std::string to_decimal(const BigInt& value) { return value.str(); }

inline BigInt abs_value(const BigInt& value) { return value < 0 ? BigInt(-value) : value; }

inline BigInt gcd_value(BigInt a, BigInt b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace unicx
