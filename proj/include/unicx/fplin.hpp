#pragma once

// Linear algebra over the prime field F_p: vectors, canonical lines, rank and
// unimodularity, and deterministic enumeration of vectors and lines.

#include <unicx/bigint.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace unicx {

bool is_prime(std::int64_t n);

class PrimeField {
 public:
  /// Throws InputError unless p is a prime below 2^31.
  explicit PrimeField(std::int64_t p);

  std::int64_t p() const noexcept { return p_; }
  std::int64_t reduce(std::int64_t x) const noexcept {
    const std::int64_t r = x % p_;
    return r < 0 ? r + p_ : r;
  }
  std::int64_t mul(std::int64_t a, std::int64_t b) const noexcept { return (a * b) % p_; }
  std::int64_t inverse(std::int64_t a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::int64_t p_;
};

class FpVector {
 public:
  FpVector(std::vector<std::int64_t> coords, const PrimeField& field);

  static FpVector unit(std::size_t n, std::size_t i, const PrimeField& field);

  std::size_t dim() const noexcept { return coords_.size(); }
  std::int64_t p() const noexcept { return p_; }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<std::int64_t>& coords() const noexcept { return coords_; }
  bool is_zero() const noexcept;

  /// c * v with c taken mod p.
  FpVector scaled(std::int64_t c) const;

  friend bool operator==(const FpVector&, const FpVector&) = default;
  friend auto operator<=>(const FpVector& a, const FpVector& b) { return a.coords_ <=> b.coords_; }

 private:
  std::vector<std::int64_t> coords_;
  std::int64_t p_;
};

/// A line through the origin, stored by its generator whose first nonzero
/// coordinate is 1.
class FpLine {
 public:
  const FpVector& generator() const noexcept { return generator_; }
  std::size_t dim() const noexcept { return generator_.dim(); }
  bool contains(const FpVector& v) const;

  friend bool operator==(const FpLine&, const FpLine&) = default;
  friend auto operator<=>(const FpLine& a, const FpLine& b) { return a.generator_ <=> b.generator_; }

 private:
  friend FpLine line_canonical_fp(const FpVector& v);
  explicit FpLine(FpVector g) : generator_(std::move(g)) {}
  FpVector generator_;
};

/// Row-echelon basis of a subspace of F_p^n, grown one vector at a time.
class EchelonBasis {
 public:
  EchelonBasis(std::size_t n, const PrimeField& field) : n_(n), field_(field) {}

  /// Adds v if it is outside the current span; returns whether it was added.
  bool insert(const FpVector& v);
  bool in_span(const FpVector& v) const;
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t ambient_dim() const noexcept { return n_; }
  /// Fully reduced basis (reduced row echelon form), rows ordered by pivot.
  std::vector<FpVector> reduced_basis() const;

 private:
  std::vector<std::int64_t> reduce(std::vector<std::int64_t> v) const;
  std::size_t n_;
  PrimeField field_;
  std::vector<std::vector<std::int64_t>> rows_;  // each row normalized: pivot entry 1
  std::vector<std::size_t> pivots_;
};

std::size_t rank_fp(std::span<const FpVector> vectors, const PrimeField& field);
bool is_unimodular_fp(std::span<const FpVector> vectors, const PrimeField& field);
FpLine line_canonical_fp(const FpVector& v);

/// All nonzero vectors of F_p^n in lexicographic order.
std::vector<FpVector> enumerate_nonzero_vectors_fp(int n, const PrimeField& field);
/// All lines of F_p^n, lexicographic on the canonical generator.
std::vector<FpLine> enumerate_lines_fp(int n, const PrimeField& field);

}  // namespace unicx

template <>
struct std::hash<unicx::FpVector> {
  std::size_t operator()(const unicx::FpVector& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto c : v.coords()) h = (h ^ static_cast<std::size_t>(c)) * 1099511628211ULL;
    return h;
  }
};

template <>
struct std::hash<unicx::FpLine> {
  std::size_t operator()(const unicx::FpLine& l) const noexcept { return std::hash<unicx::FpVector>{}(l.generator()); }
};
