#pragma once

// Exact dense linear algebra over Z, Q and F_p on Eigen matrices.  Every
// routine is templated on the scalar so the same code runs on std::int64_t
// (small test matrices) and BigInt (boundary operators, lattice bases).

#include <unicx/bigint.hpp>

#include <cstdint>
#include <cstdlib>
#include <vector>

namespace unicx {

template <typename Scalar>
struct SNFResult {
  /// Nonzero elementary divisors d_1 | d_2 | ... , all positive.
  std::vector<Scalar> diagonal;
  std::size_t rank = 0;
};

namespace detail {

inline BigInt scalar_abs(const BigInt& x) { return abs_value(x); }
inline std::int64_t scalar_abs(std::int64_t x) { return x < 0 ? -x : x; }

inline BigInt scalar_gcd(const BigInt& a, const BigInt& b) { return gcd_value(a, b); }
inline std::int64_t scalar_gcd(std::int64_t a, std::int64_t b) {
  a = scalar_abs(a);
  b = scalar_abs(b);
  while (b != 0) {
    const std::int64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline std::int64_t mod_reduce(std::int64_t x, std::int64_t p) {
  const std::int64_t r = x % p;
  return r < 0 ? r + p : r;
}
inline std::int64_t mod_reduce(const BigInt& x, std::int64_t p) {
  BigInt r = x % p;
  if (r < 0) r += p;
  return r.convert_to<std::int64_t>();
}

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  // Extended Euclid; a is nonzero mod p and p is prime.
  std::int64_t t = 0, new_t = 1, r = p, new_r = mod_reduce(a, p);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return mod_reduce(t, p);
}

template <typename Scalar>
std::vector<Eigen::Index> nonzero_columns(const DenseMatrix<Scalar>& a, Eigen::Index row, Eigen::Index from) {
  std::vector<Eigen::Index> out;
  for (Eigen::Index j = from; j < a.cols(); ++j)
    if (a(row, j) != 0) out.push_back(j);
  return out;
}

}  // namespace detail

/// Smith normal form by repeated row/column reduction.  The pivot is always a
/// nonzero entry of minimal absolute value in the remaining block; the search
/// stops early at a unit, which is the common case for boundary operators.
template <typename Scalar>
SNFResult<Scalar> smith_normal_form(DenseMatrix<Scalar> a) {
  using Eigen::Index;
  using detail::scalar_abs;
  const Index rows = a.rows();
  const Index cols = a.cols();
  SNFResult<Scalar> out;

  for (Index t = 0; t < rows && t < cols; ++t) {
    Index pr = -1, pc = -1;
    Scalar best = 0;
    for (Index j = t; j < cols; ++j) {
      for (Index i = t; i < rows; ++i) {
        if (a(i, j) == 0) continue;
        Scalar m = scalar_abs(a(i, j));
        if (pr < 0 || m < best) {
          pr = i;
          pc = j;
          best = m;
          if (best == 1) break;
        }
      }
      if (pr >= 0 && best == 1) break;
    }
    if (pr < 0) break;
    a.row(t).swap(a.row(pr));
    a.col(t).swap(a.col(pc));

    for (;;) {
      // Clear column t below the pivot.
      Index smallest = -1;
      {
        const auto nz = detail::nonzero_columns(a, t, t);
        for (Index i = t + 1; i < rows; ++i) {
          if (a(i, t) == 0) continue;
          const Scalar q = a(i, t) / a(t, t);
          for (Index j : nz) a(i, j) -= q * a(t, j);
          if (a(i, t) != 0 && (smallest < 0 || scalar_abs(a(i, t)) < scalar_abs(a(smallest, t)))) smallest = i;
        }
      }
      if (smallest >= 0) {
        a.row(t).swap(a.row(smallest));
        continue;
      }
      // Column t is clear, so column operations only touch row t.
      Index leftover = -1;
      for (Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        a(t, j) = a(t, j) % a(t, t);
        if (a(t, j) != 0 && (leftover < 0 || scalar_abs(a(t, j)) < scalar_abs(a(t, leftover)))) leftover = j;
      }
      if (leftover >= 0) {
        a.col(t).swap(a.col(leftover));
        continue;
      }
      const Scalar pivot = scalar_abs(a(t, t));
      if (pivot == 1) break;
      // Enforce d_t | every remaining entry.
      Index bad_row = -1;
      for (Index j = t + 1; j < cols && bad_row < 0; ++j)
        for (Index i = t + 1; i < rows; ++i)
          if (a(i, j) % pivot != 0) {
            bad_row = i;
            break;
          }
      if (bad_row < 0) break;
      a.row(t) += a.row(bad_row);
    }
    out.diagonal.push_back(scalar_abs(a(t, t)));
  }
  out.rank = out.diagonal.size();
  return out;
}

template <typename Derived>
auto smith_normal_form(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  return smith_normal_form<Scalar>(DenseMatrix<Scalar>(m));
}

/// Rank over Q by fraction-free row elimination (no column operations).
/// Rows are divided by their content whenever a non-unit multiplier is used.
template <typename Scalar>
std::size_t rank_fraction_free(DenseMatrix<Scalar> a) {
  using Eigen::Index;
  using detail::scalar_abs;
  const Index rows = a.rows();
  const Index cols = a.cols();
  Index rank = 0;
  for (Index c = 0; c < cols && rank < rows; ++c) {
    Index pr = -1;
    for (Index i = rank; i < rows; ++i) {
      if (a(i, c) == 0) continue;
      if (pr < 0 || scalar_abs(a(i, c)) < scalar_abs(a(pr, c))) pr = i;
      if (scalar_abs(a(pr, c)) == 1) break;
    }
    if (pr < 0) continue;
    a.row(rank).swap(a.row(pr));
    if (a(rank, c) < 0)
      for (Index j = c; j < cols; ++j) a(rank, j) = -a(rank, j);
    const auto nz = detail::nonzero_columns(a, rank, c);
    for (Index i = rank + 1; i < rows; ++i) {
      if (a(i, c) == 0) continue;
      const Scalar g = detail::scalar_gcd(a(rank, c), a(i, c));
      const Scalar keep = a(rank, c) / g;
      const Scalar sub = a(i, c) / g;
      if (keep == 1) {
        for (Index j : nz) a(i, j) -= sub * a(rank, j);
      } else {
        for (Index j = c; j < cols; ++j) a(i, j) = keep * a(i, j) - sub * a(rank, j);
        Scalar content = 0;
        for (Index j = c; j < cols; ++j)
          if (a(i, j) != 0) content = detail::scalar_gcd(content, a(i, j));
        if (content > 1)
          for (Index j = c; j < cols; ++j) a(i, j) /= content;
      }
    }
    ++rank;
  }
  return static_cast<std::size_t>(rank);
}

template <typename Derived>
std::size_t rank_fraction_free(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  return rank_fraction_free<Scalar>(DenseMatrix<Scalar>(m));
}

/// Rank of an integer matrix reduced modulo the prime p.
template <typename Derived>
std::size_t rank_mod_p(const Eigen::MatrixBase<Derived>& m, std::int64_t p) {
  using Eigen::Index;
  DenseMatrix<std::int64_t> a(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) a(i, j) = detail::mod_reduce(m(i, j), p);
  Index rank = 0;
  for (Index c = 0; c < a.cols() && rank < a.rows(); ++c) {
    Index pr = -1;
    for (Index i = rank; i < a.rows(); ++i)
      if (a(i, c) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    a.row(rank).swap(a.row(pr));
    const std::int64_t inv = detail::mod_inverse(a(rank, c), p);
    for (Index j = c; j < a.cols(); ++j) a(rank, j) = (a(rank, j) * inv) % p;
    const auto nz = detail::nonzero_columns(a, rank, c);
    for (Index i = rank + 1; i < a.rows(); ++i) {
      const std::int64_t f = a(i, c);
      if (f == 0) continue;
      for (Index j : nz) a(i, j) = detail::mod_reduce(a(i, j) - f * a(rank, j), p);
    }
    ++rank;
  }
  return static_cast<std::size_t>(rank);
}

/// Determinant by Bareiss fraction-free elimination.
template <typename Scalar>
Scalar determinant(DenseMatrix<Scalar> a) {
  using Eigen::Index;
  const Index n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return Scalar(1);
  Scalar sign = 1;
  Scalar prev = 1;
  for (Index k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      Index swap_row = -1;
      for (Index i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return Scalar(0);
      a.row(k).swap(a.row(swap_row));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j) a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  return determinant<Scalar>(DenseMatrix<Scalar>(m));
}

}  // namespace unicx
