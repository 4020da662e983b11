#pragma once

#include <cstdint>
#include <optional>

#include "wildsets/poly.hpp"

namespace wildsets {

/// The residue field F_q[t]/(m) of a finite place, m monic irreducible of
/// degree d. Elements are polynomials of degree < d.
class ResidueField {
 public:
  explicit ResidueField(Poly modulus);

  const Poly& modulus() const { return m_; }
  const FieldPtr& field() const { return m_.field(); }
  unsigned degree() const { return static_cast<unsigned>(m_.degree()); }
  /// q^d; throws PreconditionError if it does not fit in 63 bits.
  std::uint64_t order() const;

  Poly reduce(const Poly& a) const { return a % m_; }
  Poly one() const { return Poly::constant(field(), 1); }
  Poly mul(const Poly& a, const Poly& b) const { return (a * b) % m_; }
  Poly inv(const Poly& a) const;
  Poly pow(const Poly& a, std::uint64_t e) const { return powmod(a, e, m_); }
  /// N(a) = a * a^q * ... * a^(q^(d-1)), an element of F_q.
  Elt norm(const Poly& a) const;
  /// Quadratic character on F_{q^d}: a is a square iff its norm is a square
  /// in F_q.
  int quad_char(const Poly& a) const;
  /// A square root (Tonelli-Shanks), or nullopt for non-squares.
  std::optional<Poly> sqrt(const Poly& a) const;

 private:
  Poly m_;
};

/// a + b*w in the quadratic extension F_{q^d}(w), w^2 = D with D a
/// non-square of F_{q^d}. Used for residues at inert places of the curve;
/// b == 0 covers the ordinary residue fields.
struct QuadElem {
  Poly a, b;

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
};

QuadElem quad_mul(const ResidueField& R, const Poly& D, const QuadElem& x, const QuadElem& y);
QuadElem quad_inv(const ResidueField& R, const Poly& D, const QuadElem& x);
/// Character of F_{q^{2d}}: x is a square iff a^2 - D b^2 is a square of F_{q^d}.
int quad_char_ext(const ResidueField& R, const Poly& D, const QuadElem& x);

}  // namespace wildsets
