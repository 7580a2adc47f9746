#include <unicx/bhargava.hpp>

#include <unicx/errors.hpp>
#include <unicx/fplin.hpp>
#include <unicx/universal_fp.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace unicx {

GroundSet GroundSet::integers() { return GroundSet{}; }

GroundSet GroundSet::geometric(BigInt a, BigInt q) {
  if (a == 0) throw InputError("geometric ground set needs a != 0");
  if (q == 0 || q == 1 || q == -1) throw InputError("geometric ground set needs q outside {-1, 0, 1}");
  GroundSet s;
  s.kind_ = Kind::geometric;
  s.a_ = std::move(a);
  s.q_ = std::move(q);
  return s;
}

GroundSet GroundSet::explicit_list(std::vector<BigInt> elements) {
  if (elements.empty()) throw InputError("explicit ground set is empty");
  std::vector<BigInt> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("explicit ground set has a repeated element");
  GroundSet s;
  s.kind_ = Kind::explicit_list;
  s.elements_ = std::move(elements);
  return s;
}

namespace {

BigInt parse_integer(const std::string& tok) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(tok, &used);
    if (used == tok.size()) return BigInt(v);
  } catch (const std::exception&) {
  }
  throw InputError("not an integer: '" + tok + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream in(s);
  while (std::getline(in, part, sep)) out.push_back(part);
  return out;
}

}  // namespace

GroundSet GroundSet::parse(const std::string& text) {
  if (text == "integers" || text == "Z") return integers();
  if (text.rfind("geometric:", 0) == 0) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw InputError("expected geometric:a:q, got '" + text + "'");
    return geometric(parse_integer(parts[1]), parse_integer(parts[2]));
  }
  const std::string body = text.rfind("list:", 0) == 0 ? text.substr(5) : text;
  std::vector<BigInt> elements;
  for (const auto& tok : split(body, ',')) elements.push_back(parse_integer(tok));
  return explicit_list(std::move(elements));
}

std::string GroundSet::describe() const {
  switch (kind_) {
    case Kind::integers:
      return "integers";
    case Kind::geometric:
      return "geometric:" + a_.str() + ":" + q_.str();
    case Kind::explicit_list: {
      std::string out = "list:";
      for (std::size_t i = 0; i < elements_.size(); ++i) out += (i ? "," : "") + elements_[i].str();
      return out;
    }
  }
  return {};
}

std::vector<BigInt> GroundSet::enumerate(std::size_t count) const {
  std::vector<BigInt> out;
  switch (kind_) {
    case Kind::integers:
      for (std::size_t i = 0; i < count; ++i) {
        const BigInt half = BigInt((i + 1) / 2);
        out.push_back(i % 2 == 1 ? half : BigInt(-half));
      }
      break;
    case Kind::geometric: {
      BigInt x = a_;
      for (std::size_t i = 0; i < count; ++i, x *= q_) out.push_back(x);
      break;
    }
    case Kind::explicit_list:
      out.assign(elements_.begin(), elements_.begin() + static_cast<std::ptrdiff_t>(std::min(count, elements_.size())));
      break;
  }
  return out;
}

unsigned valuation(const BigInt& x, std::int64_t p) {
  if (x == 0) throw InputError("valuation of zero");
  unsigned v = 0;
  BigInt y = x;
  while (y % p == 0) {
    y /= p;
    ++v;
  }
  return v;
}

POrdering p_ordering(const GroundSet& s, std::int64_t p, std::size_t k_max, std::size_t budget, std::size_t seed) {
  const PrimeField field(p);
  if (budget < k_max + 1) throw InputError("budget must be at least K + 1");
  const std::vector<BigInt> cand = s.enumerate(budget);
  if (cand.size() < k_max + 1) throw InputError("ground set has fewer than K + 1 elements");
  if (seed >= cand.size()) throw InputError("seed position beyond the enumerated candidates");

  POrdering out;
  out.prime = p;
  std::vector<unsigned> val(cand.size(), 0);
  std::vector<bool> used(cand.size(), false);
  auto take = [&](std::size_t i) {
    used[i] = true;
    out.elements.push_back(cand[i]);
    out.nu.push_back(ipow(p, val[i]));
    for (std::size_t j = 0; j < cand.size(); ++j)
      if (!used[j]) val[j] += valuation(cand[j] - cand[i], p);
  };
  take(seed);
  for (std::size_t k = 1; k <= k_max; ++k) {
    std::size_t best = cand.size();
    for (std::size_t i = 0; i < cand.size(); ++i)
      if (!used[i] && (best == cand.size() || val[i] < val[best])) best = i;
    take(best);
  }
  return out;
}

BigInt nu_k(const GroundSet& s, std::int64_t p, std::size_t k, std::size_t seed) {
  if (k == 0) return 1;
  if (s.kind() == GroundSet::Kind::explicit_list) return p_ordering(s, p, k, s.elements().size(), seed).nu[k];
  // Z: the window [-4k, 4k]; geometric sets: the first 4(k + 1) terms.
  const std::size_t base = s.kind() == GroundSet::Kind::integers ? 8 * k + 1 : 4 * (k + 1);
  const BigInt first = p_ordering(s, p, k, std::max(base, seed + 1), seed).nu[k];
  const BigInt second = p_ordering(s, p, k, 2 * std::max(base, seed + 1), seed).nu[k];
  if (first != second)
    throw VerificationError("ν_" + std::to_string(k) + " of " + s.describe() + " at p = " + std::to_string(p) +
                            " is not stable under doubling the truncation");
  return first;
}

std::vector<std::int64_t> difference_primes(const std::vector<BigInt>& elements) {
  std::set<std::int64_t> primes;
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      BigInt d = abs_value(elements[i] - elements[j]);
      for (BigInt f = 2; f * f <= d; ++f)
        while (d % f == 0) {
          primes.insert(f.convert_to<std::int64_t>());
          d /= f;
        }
      if (d > 1) {
        if (d >= (BigInt(1) << 31)) throw ResourceError("difference has a prime factor beyond 2^31");
        primes.insert(d.convert_to<std::int64_t>());
      }
    }
  return {primes.begin(), primes.end()};
}

BigInt generalized_factorial(const GroundSet& s, std::size_t k) {
  switch (s.kind()) {
    case GroundSet::Kind::integers:
      return factorial(static_cast<unsigned>(k));
    case GroundSet::Kind::geometric: {
      const auto kk = static_cast<unsigned>(k);
      BigInt result = ipow(s.a(), kk);
      const BigInt qk = ipow(s.q(), kk);
      for (unsigned j = 0; j < kk; ++j) result *= qk - ipow(s.q(), j);
      return abs_value(result);
    }
    case GroundSet::Kind::explicit_list: {
      if (k >= s.elements().size())
        throw InputError("k = " + std::to_string(k) + " needs a list of more than k elements");
      BigInt result = 1;
      for (auto p : difference_primes(s.elements())) result *= nu_k(s, p, k);
      return result;
    }
  }
  return 0;
}

IdentityCheck check_identities(std::int64_t p, std::size_t k) {
  if (k < 1) throw InputError("k must be >= 1");
  IdentityCheck c;
  c.geometric_factorial = generalized_factorial(GroundSet::geometric(1, p), k);
  c.factorial = factorial(static_cast<unsigned>(k));
  c.top_faces = formula_f_vector({Variant::X, p, static_cast<int>(k)})(static_cast<int>(k) - 1);
  c.product_identity = c.geometric_factorial == c.factorial * c.top_faces;
  c.divisibility = c.geometric_factorial % c.factorial == 0 && c.geometric_factorial / c.factorial == c.top_faces;
  return c;
}

}  // namespace unicx
