#pragma once

// p-orderings, the invariants ν_k(S, p) and generalized factorials k!_S.

#include <unicx/bigint.hpp>

#include <string>
#include <vector>

namespace unicx {

class GroundSet {
 public:
  enum class Kind { integers, geometric, explicit_list };

  static GroundSet integers();
  /// {a q^i : i >= 0}; requires a != 0 and q not in {-1, 0, 1}.
  static GroundSet geometric(BigInt a, BigInt q);
  /// Throws InputError on duplicates or an empty list.
  static GroundSet explicit_list(std::vector<BigInt> elements);
  /// "integers", "geometric:a:q" or "list:x,y,z".
  static GroundSet parse(const std::string& spec);

  Kind kind() const noexcept { return kind_; }
  const BigInt& a() const noexcept { return a_; }
  const BigInt& q() const noexcept { return q_; }
  const std::vector<BigInt>& elements() const noexcept { return elements_; }
  std::string describe() const;

  /// First `count` elements in enumeration order: 0, 1, -1, 2, -2, … for Z;
  /// a, aq, aq², … for geometric sets; list order otherwise (capped at the
  /// list length).
  std::vector<BigInt> enumerate(std::size_t count) const;

 private:
  Kind kind_ = Kind::integers;
  BigInt a_ = 0, q_ = 0;
  std::vector<BigInt> elements_;
};

/// Exponent of the prime p in x != 0.
unsigned valuation(const BigInt& x, std::int64_t p);

struct POrdering {
  std::int64_t prime = 0;
  std::vector<BigInt> elements;  ///< a_0, …, a_K
  std::vector<BigInt> nu;        ///< ν_0 = 1, …, ν_K as powers of p
};

/// Greedy p-ordering of length K + 1 over the first `budget` enumerated
/// elements, starting from the element at position `seed`.  Ties go to the
/// earliest enumerated candidate.
POrdering p_ordering(const GroundSet& s, std::int64_t p, std::size_t k_max, std::size_t budget, std::size_t seed = 0);

/// ν_k(S, p).  For Z and geometric sets the truncation is doubled until two
/// consecutive sizes agree; disagreement after the doubling is an error
/// (VerificationError), never a silent answer.
BigInt nu_k(const GroundSet& s, std::int64_t p, std::size_t k, std::size_t seed = 0);

/// k!_S = Π_p ν_k(S, p): k! for Z, |a^k Π_{j<k}(q^k - q^j)| for geometric
/// sets, and the product over the primes dividing some difference for lists.
BigInt generalized_factorial(const GroundSet& s, std::size_t k);

/// Primes dividing at least one pairwise difference of the list.
std::vector<std::int64_t> difference_primes(const std::vector<BigInt>& elements);

struct IdentityCheck {
  BigInt geometric_factorial;  ///< k! over {1, p, p², …}
  BigInt factorial;            ///< k!
  BigInt top_faces;            ///< f_{k-1}(X(F_p^k)) from the closed form
  bool product_identity = false;  ///< geometric_factorial == k! · top_faces
  bool divisibility = false;      ///< k! divides it with quotient top_faces
};

IdentityCheck check_identities(std::int64_t p, std::size_t k);

}  // namespace unicx
