#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace wildsets {

/// An element of F_q encoded as the integer sum d_i p^i, where the element is
/// sum d_i a^i and `a` is the class of x in F_p[x]/(modulus).
using Elt = std::uint32_t;

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// F_q for an odd prime power q = p^k. The defining modulus is the
/// lexicographically first monic irreducible of degree k over F_p, so two
/// fields built for the same q are identical.
class FiniteField {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  static FieldPtr make(std::uint32_t q);

  std::uint32_t p() const { return p_; }
  unsigned k() const { return k_; }
  std::uint32_t q() const { return q_; }
  /// Coefficients over F_p, low to high, monic of degree k (k == 1: {0, 1}).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elt add(Elt a, Elt b) const;
  Elt sub(Elt a, Elt b) const;
  Elt neg(Elt a) const;
  Elt mul(Elt a, Elt b) const;
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt pow(Elt a, std::uint64_t e) const;

  /// Image of an integer under Z -> F_p -> F_q.
  Elt from_int(long long v) const;
  Elt minus_one() const { return p_ - 1; }
  /// The class of `a`, the adjoined root of the modulus (k > 1 only).
  Elt adjoined_root() const { return k_ > 1 ? p_ : 0; }

  /// Euler criterion: +1 for nonzero squares, -1 for non-squares, 0 for 0.
  int quad_char(Elt a) const { return chi_[a]; }
  Elt first_nonsquare() const { return first_nonsquare_; }

  /// Prime fields print as 0..p-1; extensions as a polynomial in `a`.
  std::string to_string(Elt a) const;
  /// Coefficient digits of `a` over F_p, low to high, length k.
  std::vector<std::uint32_t> digits(Elt a) const;
  Elt from_digits(const std::vector<std::uint32_t>& d) const;

 private:
  FiniteField(std::uint32_t p, unsigned k);

  std::uint32_t p_;
  unsigned k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  // Discrete log tables with respect to a primitive element.
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<signed char> chi_;
  Elt first_nonsquare_ = 0;
};

/// Returns (p, k) with q = p^k, or throws PreconditionError if q is not an odd
/// prime power in range.
std::pair<std::uint32_t, unsigned> split_prime_power(std::uint32_t q);

}  // namespace wildsets
