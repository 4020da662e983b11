#pragma once

#include <optional>
#include <vector>

#include "wildsets/bit_matrix.hpp"
#include "wildsets/poly.hpp"

namespace wildsets {

/// An F_q-rational point of y^2 = f(x), or the point at infinity.
struct Point {
  bool inf = true;
  Elt x = 0, y = 0;

  static Point infinity() { return {}; }
  static Point affine(Elt x, Elt y) { return {false, x, y}; }
  friend auto operator<=>(const Point&, const Point&) = default;
  friend bool operator==(const Point&, const Point&) = default;
};

/// The group E(F_q) of y^2 = f(x), deg f = 3, with the chord-tangent law and
/// identity at infinity. Enumerated once at construction.
class EllipticGroup {
 public:
  static constexpr std::uint32_t kDefaultEnumerationBound = 49;

  /// Throws PreconditionError when q exceeds `bound` or f is not a
  /// squarefree cubic.
  EllipticGroup(Poly f, std::uint32_t bound = kDefaultEnumerationBound);

  const Poly& f() const { return f_; }
  const FiniteField& F() const { return f_.F(); }
  bool on_curve(const Point& P) const;
  Point add(const Point& P, const Point& Q) const;
  Point neg(const Point& P) const;
  Point mul(const Point& P, long k) const;

  /// All points, identity first, then affine points by (x, y).
  const std::vector<Point>& points() const { return points_; }
  std::size_t order() const { return points_.size(); }
  std::vector<Point> two_torsion() const;
  bool two_divisible(const Point& P) const;
  std::optional<Point> halve(const Point& P) const;

  /// Rank r of E/2E (equal to the rank of the 2-torsion).
  unsigned two_rank() const { return static_cast<unsigned>(e2_basis_.size()); }
  /// Coordinates of P + 2E in the basis of E/2E fixed at construction.
  BitVec e2_coords(const Point& P) const;
  const std::vector<Point>& e2_basis() const { return e2_basis_; }

  std::size_t index_of(const Point& P) const;

 private:
  Poly f_;
  Elt l_, a_;  // leading and t^2 coefficient of f
  std::vector<Point> points_;
  std::vector<bool> doubled_;  // indexed like points_: membership in 2E
  std::vector<Point> e2_basis_;
};

}  // namespace wildsets
