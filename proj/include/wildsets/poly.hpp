#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "wildsets/finite_field.hpp"

namespace wildsets {

/// A univariate polynomial in t over F_q. Coefficients are stored low to high
/// with no trailing zeros; the zero polynomial has degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldPtr field) : field_(std::move(field)) {}
  Poly(FieldPtr field, std::vector<Elt> coeffs);

  static Poly constant(const FieldPtr& field, Elt c);
  static Poly monomial(const FieldPtr& field, Elt c, unsigned degree);
  /// The polynomial t.
  static Poly variable(const FieldPtr& field) { return monomial(field, 1, 1); }

  const FieldPtr& field() const { return field_; }
  const FiniteField& F() const { return *field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  Elt lead() const { return c_.empty() ? 0 : c_.back(); }
  Elt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<Elt>& coeffs() const { return c_; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Poly monic() const;
  Poly scaled(Elt c) const;
  Poly derivative() const;
  Elt eval(Elt x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator/(const Poly& a, const Poly& b);
  friend Poly operator%(const Poly& a, const Poly& b);

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  /// Degree first, then coefficients from the top down. For monic
  /// polynomials of a fixed degree this is the lexicographic order on
  /// coefficient vectors used for all deterministic enumeration.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

 private:
  void normalize();

  FieldPtr field_;
  std::vector<Elt> c_;
};

/// Quotient and remainder; throws PreconditionError on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);
/// Extended gcd: returns (g, s, u) with s*a + u*b = g, g monic (or zero).
struct Xgcd {
  Poly g, s, u;
};
Xgcd xgcd(const Poly& a, const Poly& b);
Poly powmod(Poly base, std::uint64_t e, const Poly& mod);
/// Largest k with d^k | a (a nonzero, d nonconstant).
int multiplicity(const Poly& d, Poly a);

bool is_irreducible(const Poly& f);

struct Factorization {
  Elt unit = 0;
  /// Distinct monic irreducibles with multiplicities, sorted by Poly order.
  std::vector<std::pair<Poly, int>> factors;

  Poly product() const;
};

/// Squarefree decomposition, distinct-degree and equal-degree splitting. The
/// splitting is randomized with a fixed seed; the result is sorted so it does
/// not depend on the seed.
Factorization factor(const Poly& f, std::uint64_t seed = 0x5eedf00du);

/// Visits the monic polynomials of degree d in lexicographic order of their
/// coefficient vectors (top coefficient first); stops when fn returns false.
void for_each_monic(const FieldPtr& field, unsigned d, const std::function<bool(const Poly&)>& fn);
/// Visits each monic irreducible of degree d exactly once, in the same order.
void for_each_irreducible(const FieldPtr& field, unsigned d, const std::function<bool(const Poly&)>& fn);
std::vector<Poly> irreducibles_of_degree(const FieldPtr& field, unsigned d);
/// Gauss necklace count (1/d) sum_{e | d} mu(e) q^(d/e).
std::uint64_t necklace_count(std::uint64_t q, unsigned d);

}  // namespace wildsets
