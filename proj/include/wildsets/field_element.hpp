#pragma once

#include <map>

#include "wildsets/poly.hpp"

namespace wildsets {

/// The linear form a + b*y with b monic and gcd(a, b) = 1.
struct YFactor {
  Poly a, b;

  friend auto operator<=>(const YFactor& x, const YFactor& y) = default;
  friend bool operator==(const YFactor& x, const YFactor& y) = default;
};

/// A nonzero element of F_q(t) or of the elliptic function field, stored as
///   c * prod p^e * prod (a + b*y)^k
/// with p monic irreducible in t. Over P^1 there are no y-factors. The form
/// is a formal product: distinct representations may denote the same
/// element, which is harmless because everything computed from it (orders,
/// residues, square classes) is multiplicative.
class FieldElement {
 public:
  FieldElement() = default;
  static FieldElement constant(const FieldPtr& F, Elt c);
  static FieldElement one(const FieldPtr& F) { return constant(F, 1); }
  /// Factors a nonzero polynomial.
  static FieldElement from_poly(const Poly& p);
  static FieldElement from_ratio(const Poly& num, const Poly& den);
  /// p must be monic irreducible.
  static FieldElement prime_power(const Poly& p, int e);
  /// a + b*y for polynomials a, b not both zero.
  static FieldElement linear_y(const Poly& a, const Poly& b);

  const FieldPtr& field() const { return F_; }
  Elt constant_part() const { return c_; }
  const std::map<Poly, int>& base_factors() const { return base_; }
  const std::map<YFactor, int>& y_factors() const { return y_; }
  bool has_y() const { return !y_.empty(); }
  bool is_constant() const { return base_.empty() && y_.empty(); }
  /// Sum of e * deg p over the base factors.
  long base_degree() const;

  FieldElement operator*(const FieldElement& o) const;
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement inverse() const;
  FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }
  FieldElement pow(int e) const;
  /// Representative of the square class: exponents reduced mod 2 and the
  /// constant replaced by 1 or the field's first non-square.
  FieldElement square_class_rep() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.c_ == b.c_ && a.base_ == b.base_ && a.y_ == b.y_;
  }

 private:
  void add_base(const Poly& p, int e);
  void add_y(const YFactor& f, int e);

  FieldPtr F_;
  Elt c_ = 1;
  std::map<Poly, int> base_;
  std::map<YFactor, int> y_;
};

}  // namespace wildsets
