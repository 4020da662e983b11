#include "wildsets/elliptic_group.hpp"

#include <algorithm>

#include "wildsets/errors.hpp"

namespace wildsets {

EllipticGroup::EllipticGroup(Poly f, std::uint32_t bound) : f_(std::move(f)) {
  if (f_.degree() != 3) throw PreconditionError("the curve polynomial must be a cubic");
  if (gcd(f_, f_.derivative()).degree() > 0) throw PreconditionError("the curve polynomial must be squarefree");
  if (F().q() > bound)
    throw PreconditionError("q = " + std::to_string(F().q()) + " exceeds the group enumeration bound " +
                            std::to_string(bound));
  l_ = f_.lead();
  a_ = f_.coeff(2);

  const FiniteField& K = F();
  std::vector<std::vector<Elt>> roots(K.q());
  for (Elt y = 0; y < K.q(); ++y) roots[K.mul(y, y)].push_back(y);
  points_.push_back(Point::infinity());
  for (Elt x = 0; x < K.q(); ++x)
    for (Elt y : roots[f_.eval(x)]) points_.push_back(Point::affine(x, y));
  std::sort(points_.begin(), points_.end());

  doubled_.assign(points_.size(), false);
  for (const auto& P : points_) doubled_[index_of(add(P, P))] = true;

  // Greedy basis of E/2E: a point joins when it is outside the span of the
  // previous basis points modulo 2E.
  std::vector<bool> in_span = doubled_;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (in_span[i]) continue;
    e2_basis_.push_back(points_[i]);
    std::vector<bool> next = in_span;
    for (std::size_t j = 0; j < points_.size(); ++j)
      if (in_span[j]) next[index_of(add(points_[j], points_[i]))] = true;
    in_span = std::move(next);
  }
}

bool EllipticGroup::on_curve(const Point& P) const {
  if (P.inf) return true;
  return F().mul(P.y, P.y) == f_.eval(P.x);
}

Point EllipticGroup::neg(const Point& P) const {
  if (P.inf) return P;
  return Point::affine(P.x, F().neg(P.y));
}

Point EllipticGroup::add(const Point& P, const Point& Q) const {
  const FiniteField& K = F();
  if (P.inf) return Q;
  if (Q.inf) return P;
  Elt s;
  if (P.x == Q.x) {
    if (K.add(P.y, Q.y) == 0) return Point::infinity();
    // Tangent slope f'(x) / 2y.
    s = K.div(f_.derivative().eval(P.x), K.add(P.y, P.y));
  } else {
    s = K.div(K.sub(Q.y, P.y), K.sub(Q.x, P.x));
  }
  const Elt x3 = K.sub(K.sub(K.div(K.sub(K.mul(s, s), a_), l_), P.x), Q.x);
  const Elt y3 = K.neg(K.add(P.y, K.mul(s, K.sub(x3, P.x))));
  return Point::affine(x3, y3);
}

Point EllipticGroup::mul(const Point& P, long k) const {
  Point base = k < 0 ? neg(P) : P;
  unsigned long n = static_cast<unsigned long>(k < 0 ? -k : k);
  Point acc = Point::infinity();
  while (n) {
    if (n & 1u) acc = add(acc, base);
    base = add(base, base);
    n >>= 1;
  }
  return acc;
}

std::size_t EllipticGroup::index_of(const Point& P) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), P);
  if (it == points_.end() || !(*it == P)) throw PreconditionError("point is not on the curve");
  return static_cast<std::size_t>(it - points_.begin());
}

std::vector<Point> EllipticGroup::two_torsion() const {
  std::vector<Point> out;
  for (const auto& P : points_)
    if (add(P, P).inf) out.push_back(P);
  return out;
}

bool EllipticGroup::two_divisible(const Point& P) const { return doubled_[index_of(P)]; }

std::optional<Point> EllipticGroup::halve(const Point& P) const {
  for (const auto& H : points_)
    if (add(H, H) == P) return H;
  return std::nullopt;
}

BitVec EllipticGroup::e2_coords(const Point& P) const {
  const std::size_t r = e2_basis_.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
    Point acc = P;
    for (std::size_t i = 0; i < r; ++i)
      if (mask >> i & 1u) acc = add(acc, e2_basis_[i]);
    if (two_divisible(acc)) {
      BitVec v(r);
      for (std::size_t i = 0; i < r; ++i)
        if (mask >> i & 1u) v.set(i);
      return v;
    }
  }
  throw InternalError("E/2E coordinates not found");
}

}  // namespace wildsets
