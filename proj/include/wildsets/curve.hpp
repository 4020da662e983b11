#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "wildsets/bit_matrix.hpp"
#include "wildsets/elliptic_group.hpp"
#include "wildsets/field_element.hpp"
#include "wildsets/place.hpp"
#include "wildsets/residue_field.hpp"

namespace wildsets {

class Curve;
using CurvePtr = std::shared_ptr<const Curve>;

/// Residue field of a place: F_q[t]/(base), extended by sqrt(D) at inert
/// places. At infinity the modulus is t, so residues are constants.
struct ResidueContext {
  ResidueField R;
  Poly D;

  bool quadratic() const { return !D.is_zero(); }
  QuadElem one() const { return {R.one(), Poly(R.field())}; }
  QuadElem embed(const Poly& a) const { return {R.reduce(a), Poly(R.field())}; }
  QuadElem mul(const QuadElem& x, const QuadElem& y) const;
  QuadElem inv(const QuadElem& x) const;
  QuadElem pow(const QuadElem& x, int e) const;
  int quad_char(const QuadElem& x) const;
};

/// ord at a place together with the residue of the unit part lambda / pi^ord,
/// pi being the fixed uniformizer of the place.
struct LocalValue {
  int ord = 0;
  QuadElem unit;
};

/// The complete curve X: either P^1 (K = F_q(t)) or the elliptic curve
/// y^2 = f(t) with deg f = 3. All place-level arithmetic lives here.
class Curve {
 public:
  static CurvePtr projective_line(const FieldPtr& F);
  static CurvePtr elliptic(const Poly& f, std::uint32_t bound = EllipticGroup::kDefaultEnumerationBound);

  bool is_elliptic() const { return group_ != nullptr; }
  const FieldPtr& field() const { return F_; }
  const Poly& f() const;
  const EllipticGroup& group() const;
  Poly t() const { return Poly::variable(F_); }

  Place infinity() const;
  /// The places over a finite place of F_q(t) (a monic irreducible).
  std::vector<Place> places_above(const Poly& base) const;
  /// Visits places of degree exactly n in the global order; stops early when
  /// fn returns false (and then returns false).
  bool for_each_place_of_degree(unsigned n, const std::function<bool(const Place&)>& fn) const;
  bool for_each_place(unsigned max_degree, const std::function<bool(const Place&)>& fn) const;
  /// Throws PreconditionError unless p is a place of this curve.
  void validate(const Place& p) const;

  ResidueContext residue_context(const Place& p) const;
  LocalValue local_value(const FieldElement& x, const Place& p) const;
  int ord(const FieldElement& x, const Place& p) const { return local_value(x, p).ord; }
  /// Residue of x at p; throws PreconditionError when ord_p x != 0.
  QuadElem residue(const FieldElement& x, const Place& p) const;

  /// Places where x may have nonzero order (all places above the relevant
  /// base places and infinity).
  std::vector<Place> candidate_support(const FieldElement& x) const;
  Divisor divisor_of(const FieldElement& x) const;

  FieldElement uniformizer(const Place& p) const;
  /// A unit at p whose residue is a non-square, chosen deterministically.
  FieldElement primary_unit(const Place& p) const;
  FieldElement y() const;

  /// 2-rank of Pic^0 X (zero for P^1) and of Pic X.
  unsigned pic0_two_rank() const { return group_ ? group_->two_rank() : 0; }
  unsigned pic_two_rank() const { return 1 + pic0_two_rank(); }
  /// Class of p - deg(p)*infinity in Pic^0 X = E(F_q).
  Point point_class(const Place& p) const;
  /// Class of p in Pic X / 2 Pic X: degree parity, then E/2E coordinates.
  BitVec pic2_vector(const Place& p) const;
  BitVec pic2_vector(const Divisor& D) const;
  bool two_divisible(const Divisor& D) const;
  /// The degree-1 place of a rational point (infinity for the identity).
  Place point_place(const Point& P) const;

  /// A function with divisor exactly D. Throws NotPrincipal if D has nonzero
  /// degree or nonzero class.
  FieldElement function_with_principal_divisor(const Divisor& D) const;
  /// lambda with div(lambda) = D + 2H for some H; throws NotPrincipal when
  /// the class of D is not 2-divisible.
  FieldElement two_divisibility_witness(const Divisor& D) const;
  /// Basis of Sing(X): a non-square constant and, on the elliptic curve, the
  /// functions t - x for a basis of the rational 2-torsion.
  std::vector<FieldElement> sing_complete_basis() const;
  /// Exact test for x being a square in K.
  bool is_square(const FieldElement& x) const;

 private:
  Curve() = default;
  // Mumford reduction of the divisor (u, v); multiplies acc by the function g
  // with D(u,v) - deg(u)*inf = div g + (Q - inf) and returns Q.
  Point reduce_mumford(Poly u, Poly v, FieldElement* acc) const;
  Point add_points(const Point& P, const Point& Q, FieldElement* acc) const;

  FieldPtr F_;
  Poly f_;
  std::shared_ptr<const EllipticGroup> group_;
};

}  // namespace wildsets
