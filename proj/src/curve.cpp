#include "wildsets/curve.hpp"

#include <set>

#include "wildsets/errors.hpp"

namespace wildsets {

QuadElem ResidueContext::mul(const QuadElem& x, const QuadElem& y) const { return quad_mul(R, D, x, y); }

QuadElem ResidueContext::inv(const QuadElem& x) const {
  if (x.is_zero()) throw PreconditionError("inverse of zero residue");
  return quad_inv(R, D, x);
}

QuadElem ResidueContext::pow(const QuadElem& x, int e) const {
  QuadElem base = e < 0 ? inv(x) : x;
  unsigned n = static_cast<unsigned>(e < 0 ? -e : e);
  QuadElem acc = one();
  while (n) {
    if (n & 1u) acc = mul(acc, base);
    base = mul(base, base);
    n >>= 1;
  }
  return acc;
}

int ResidueContext::quad_char(const QuadElem& x) const {
  return quadratic() ? quad_char_ext(R, D, x) : R.quad_char(x.a);
}

namespace {

// Zero, then c * m for m monic of degree 0..d-1 (lexicographic) and c = 1..q-1.
bool for_each_residue_poly(const FieldPtr& F, unsigned d, const std::function<bool(const Poly&)>& fn) {
  if (!fn(Poly(F))) return false;
  for (unsigned k = 0; k < d; ++k) {
    bool go = true;
    for_each_monic(F, k, [&](const Poly& m) {
      for (Elt c = 1; c < F->q() && go; ++c) go = fn(m.scaled(c));
      return go;
    });
    if (!go) return false;
  }
  return true;
}

}  // namespace

CurvePtr Curve::projective_line(const FieldPtr& F) {
  auto c = std::shared_ptr<Curve>(new Curve());
  c->F_ = F;
  c->f_ = Poly(F);
  return c;
}

CurvePtr Curve::elliptic(const Poly& f, std::uint32_t bound) {
  auto c = std::shared_ptr<Curve>(new Curve());
  c->F_ = f.field();
  c->f_ = f;
  c->group_ = std::make_shared<EllipticGroup>(f, bound);
  return c;
}

const Poly& Curve::f() const {
  if (!group_) throw PreconditionError("the projective line has no curve polynomial");
  return f_;
}

const EllipticGroup& Curve::group() const {
  if (!group_) throw PreconditionError("the projective line has no elliptic group");
  return *group_;
}

Place Curve::infinity() const { return group_ ? Place::curve_infinity() : Place::rational_infinity(); }

FieldElement Curve::y() const {
  if (!group_) throw PreconditionError("y is only defined on the elliptic curve");
  return FieldElement::linear_y(Poly(F_), Poly::constant(F_, 1));
}

std::vector<Place> Curve::places_above(const Poly& base) const {
  if (!group_) return {Place::rational(base)};
  ResidueField R(base);
  const Poly fm = R.reduce(f_);
  if (fm.is_zero()) return {Place::curve(base, PlaceKind::Ramified)};
  if (R.quad_char(fm) == -1) return {Place::curve(base, PlaceKind::Inert)};
  Poly r = *R.sqrt(fm);
  Poly r2 = R.reduce(-r);
  if (r2 < r) std::swap(r, r2);
  return {Place::curve(base, PlaceKind::Split, r), Place::curve(base, PlaceKind::Split, r2)};
}

bool Curve::for_each_place_of_degree(unsigned n, const std::function<bool(const Place&)>& fn) const {
  bool go = true;
  if (group_ && n % 2 == 0) {
    for_each_irreducible(F_, n / 2, [&](const Poly& p) {
      ResidueField R(p);
      if (R.quad_char(R.reduce(f_)) == -1) go = fn(Place::curve(p, PlaceKind::Inert));
      return go;
    });
    if (!go) return false;
  }
  for_each_irreducible(F_, n, [&](const Poly& p) {
    for (const Place& P : places_above(p)) {
      if (P.kind() == PlaceKind::Inert) continue;
      if (!(go = fn(P))) break;
    }
    return go;
  });
  if (!go) return false;
  if (n == 1) return fn(infinity());
  return true;
}

bool Curve::for_each_place(unsigned max_degree, const std::function<bool(const Place&)>& fn) const {
  for (unsigned n = 1; n <= max_degree; ++n)
    if (!for_each_place_of_degree(n, fn)) return false;
  return true;
}

void Curve::validate(const Place& P) const {
  if (P.is_infinite()) {
    if (!(P == infinity())) throw PreconditionError("place at infinity belongs to the other backend");
    return;
  }
  if (P.base().field() != F_ && (!P.base().field() || P.base().field()->q() != F_->q()))
    throw PreconditionError("place is defined over a different field");
  if (!P.base().is_monic() || !is_irreducible(P.base()))
    throw PreconditionError("place base polynomial must be monic irreducible");
  if (!group_) {
    if (P.kind() != PlaceKind::Rational) throw PreconditionError("curve place given for the projective line");
    return;
  }
  if (P.kind() == PlaceKind::Rational) throw PreconditionError("rational-function place given for the elliptic curve");
  const auto above = places_above(P.base());
  for (const auto& Q : above)
    if (Q == P) return;
  throw PreconditionError("place does not lie on the curve with the given kind and branch");
}

ResidueContext Curve::residue_context(const Place& P) const {
  if (P.is_infinite()) return {ResidueField(t()), Poly(F_)};
  ResidueField R(P.base());
  Poly D(F_);
  if (P.kind() == PlaceKind::Inert) D = R.reduce(f_);
  return {std::move(R), std::move(D)};
}

LocalValue Curve::local_value(const FieldElement& x, const Place& P) const {
  const ResidueContext ctx = residue_context(P);
  LocalValue v{0, ctx.embed(Poly::constant(F_, x.constant_part()))};
  const FiniteField& K = *F_;
  auto accumulate = [&](int o, const QuadElem& r, int e) {
    v.ord += o * e;
    v.unit = ctx.mul(v.unit, ctx.pow(r, e));
  };

  if (P.is_infinite()) {
    if (!group_) {
      for (const auto& [g, e] : x.base_factors()) v.ord -= e * g.degree();
      return v;
    }
    const Elt l = f_.lead();
    for (const auto& [g, e] : x.base_factors())
      accumulate(-2 * g.degree(), ctx.embed(Poly::constant(F_, K.inv(K.pow(l, g.degree())))), e);
    for (const auto& [yf, e] : x.y_factors()) {
      const int da = yf.a.degree(), db = yf.b.degree();
      if (!yf.a.is_zero() && 2 * da > 2 * db + 3) {
        accumulate(-2 * da, ctx.embed(Poly::constant(F_, K.div(yf.a.lead(), K.pow(l, da)))), e);
      } else {
        accumulate(-2 * db - 3, ctx.embed(Poly::constant(F_, K.div(yf.b.lead(), K.pow(l, db + 1)))), e);
      }
    }
    return v;
  }

  const Poly& p = P.base();
  const bool ram = P.kind() == PlaceKind::Ramified;
  Poly f1inv(F_);
  if (ram) f1inv = ctx.R.inv(ctx.R.reduce(f_ / p));
  for (const auto& [g, e] : x.base_factors()) {
    if (g == p) {
      accumulate(ram ? 2 : 1, ram ? ctx.embed(f1inv) : ctx.one(), e);
    } else {
      accumulate(0, ctx.embed(g), e);
    }
  }
  if (x.has_y() && !group_) throw PreconditionError("element with y-factors on the projective line");
  for (const auto& [yf, e] : x.y_factors()) {
    const Poly& A = yf.a;
    const Poly& B = yf.b;
    switch (P.kind()) {
      case PlaceKind::Split: {
        const Poly r = P.branch();
        const Poly val = ctx.R.reduce(A + B * r);
        if (!val.is_zero()) {
          accumulate(0, ctx.embed(val), e);
        } else {
          const Poly N = A * A - B * B * f_;
          const int m = multiplicity(p, N);
          Poly N1 = N;
          for (int i = 0; i < m; ++i) N1 = N1 / p;
          const Poly conj = ctx.R.reduce(A - B * r);
          accumulate(m, ctx.embed(ctx.R.mul(ctx.R.reduce(N1), ctx.R.inv(conj))), e);
        }
        break;
      }
      case PlaceKind::Inert: {
        const int a = A.is_zero() ? INT32_MAX : multiplicity(p, A);
        const int b = multiplicity(p, B);
        const int k = std::min(a, b);
        Poly A1 = A, B1 = B;
        for (int i = 0; i < k; ++i) {
          A1 = A1 / p;
          B1 = B1 / p;
        }
        accumulate(k, QuadElem{ctx.R.reduce(A1), ctx.R.reduce(B1)}, e);
        break;
      }
      case PlaceKind::Ramified: {
        const int a = A.is_zero() ? INT32_MAX : multiplicity(p, A);
        const int b = multiplicity(p, B);
        if (a <= b) {
          Poly A1 = A;
          for (int i = 0; i < a; ++i) A1 = A1 / p;
          accumulate(2 * a, ctx.embed(ctx.R.mul(ctx.R.reduce(A1), ctx.R.pow(f1inv, static_cast<unsigned>(a)))), e);
        } else {
          Poly B1 = B;
          for (int i = 0; i < b; ++i) B1 = B1 / p;
          accumulate(2 * b + 1, ctx.embed(ctx.R.mul(ctx.R.reduce(B1), ctx.R.pow(f1inv, static_cast<unsigned>(b)))),
                     e);
        }
        break;
      }
      case PlaceKind::Rational:
        throw InternalError("rational place on the elliptic curve");
    }
  }
  return v;
}

QuadElem Curve::residue(const FieldElement& x, const Place& P) const {
  LocalValue v = local_value(x, P);
  if (v.ord != 0) throw PreconditionError("element is not a unit at the place");
  return v.unit;
}

std::vector<Place> Curve::candidate_support(const FieldElement& x) const {
  std::set<Place> out;
  auto add_base = [&](const Poly& p) {
    for (const auto& P : places_above(p)) out.insert(P);
  };
  for (const auto& [g, e] : x.base_factors()) add_base(g);
  for (const auto& [yf, e] : x.y_factors()) {
    const Poly N = yf.a * yf.a - yf.b * yf.b * f_;
    for (const auto& [g, m] : factor(N).factors) add_base(g);
  }
  out.insert(infinity());
  return {out.begin(), out.end()};
}

Divisor Curve::divisor_of(const FieldElement& x) const {
  Divisor D;
  for (const auto& P : candidate_support(x)) D.add(P, ord(x, P));
  return D;
}

FieldElement Curve::uniformizer(const Place& P) const {
  if (!group_) {
    if (P.is_infinite()) return FieldElement::prime_power(t(), -1);
    return FieldElement::prime_power(P.base(), 1);
  }
  if (P.is_infinite()) return FieldElement::prime_power(t(), 1) * y().inverse();
  if (P.kind() == PlaceKind::Ramified) return y();
  return FieldElement::prime_power(P.base(), 1);
}

FieldElement Curve::primary_unit(const Place& P) const {
  if (P.is_infinite()) return FieldElement::constant(F_, F_->first_nonsquare());
  const ResidueContext ctx = residue_context(P);
  const unsigned d = ctx.R.degree();
  std::optional<FieldElement> out;
  if (P.kind() == PlaceKind::Inert) {
    for_each_residue_poly(F_, d, [&](const Poly& a) {
      if (ctx.quad_char(QuadElem{a, ctx.R.one()}) == -1) {
        out = FieldElement::linear_y(a, Poly::constant(F_, 1));
        return false;
      }
      return true;
    });
  } else {
    for_each_residue_poly(F_, d, [&](const Poly& g) {
      if (!g.is_zero() && ctx.R.quad_char(g) == -1) {
        out = FieldElement::from_poly(g);
        return false;
      }
      return true;
    });
  }
  if (!out) throw InternalError("no non-square residue found");
  return *out;
}

Point Curve::reduce_mumford(Poly u, Poly v, FieldElement* acc) const {
  const Poly one = Poly::constant(F_, 1);
  while (u.degree() > 1) {
    Poly u2 = ((f_ - v * v) / u).monic();
    if (acc) {
      *acc *= FieldElement::linear_y(-v, one);
      *acc *= FieldElement::from_poly(u2).inverse();
    }
    v = (-v) % u2;
    u = std::move(u2);
  }
  if (u.degree() < 1) return Point::infinity();
  const Elt x = F_->neg(u.coeff(0));
  return Point::affine(x, v.eval(x));
}

Point Curve::add_points(const Point& P, const Point& Q, FieldElement* acc) const {
  const FiniteField& K = *F_;
  if (P.inf) return Q;
  if (Q.inf) return P;
  const Poly tt = t();
  auto vertical = [&](Elt x) { return tt - Poly::constant(F_, x); };
  if (P.x == Q.x && K.add(P.y, Q.y) == 0) {
    if (acc) *acc *= FieldElement::from_poly(vertical(P.x));
    return Point::infinity();
  }
  const Point R = group_->add(P, Q);
  Elt s;
  if (P.x == Q.x) {
    s = K.div(f_.derivative().eval(P.x), K.add(P.y, P.y));
  } else {
    s = K.div(K.sub(Q.y, P.y), K.sub(Q.x, P.x));
  }
  if (acc) {
    // line y - (s t + m) through P, Q and -R
    const Elt m = K.sub(P.y, K.mul(s, P.x));
    const Poly line_a = -(tt.scaled(s) + Poly::constant(F_, m));
    *acc *= FieldElement::linear_y(line_a, Poly::constant(F_, 1));
    *acc *= FieldElement::from_poly(vertical(R.x)).inverse();
  }
  return R;
}

Point Curve::point_class(const Place& P) const {
  const EllipticGroup& E = group();
  if (P.is_infinite() || P.kind() == PlaceKind::Inert) return Point::infinity();
  const Poly v = P.kind() == PlaceKind::Split ? P.branch() : Poly(F_);
  const Point Q = reduce_mumford(P.base(), v, nullptr);
  if (!E.on_curve(Q)) throw InternalError("Mumford reduction left the curve");
  return Q;
}

BitVec Curve::pic2_vector(const Place& P) const {
  BitVec v(pic_two_rank());
  if (P.degree() % 2) v.set(0);
  if (group_) {
    const BitVec c = group_->e2_coords(point_class(P));
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c.get(i)) v.set(i + 1);
  }
  return v;
}

BitVec Curve::pic2_vector(const Divisor& D) const {
  BitVec v(pic_two_rank());
  for (const auto& [P, n] : D.coeffs)
    if (n % 2) v ^= pic2_vector(P);
  return v;
}

bool Curve::two_divisible(const Divisor& D) const { return pic2_vector(D).is_zero(); }

Place Curve::point_place(const Point& P) const {
  if (P.inf) return infinity();
  const Poly base = t() - Poly::constant(F_, P.x);
  for (const auto& Q : places_above(base)) {
    if (Q.kind() == PlaceKind::Ramified && P.y == 0) return Q;
    if (Q.kind() == PlaceKind::Split && Q.branch() == Poly::constant(F_, P.y)) return Q;
  }
  throw PreconditionError("point is not on the curve");
}

FieldElement Curve::function_with_principal_divisor(const Divisor& D) const {
  if (D.degree() != 0) throw NotPrincipal("divisor has nonzero degree");
  FieldElement F = FieldElement::one(F_);
  if (!group_) {
    for (const auto& [P, n] : D.coeffs)
      if (!P.is_infinite()) F *= FieldElement::prime_power(P.base(), n);
    return F;
  }
  Point run = Point::infinity();
  for (const auto& [P, n] : D.coeffs) {
    if (P.is_infinite()) continue;
    validate(P);
    if (P.kind() == PlaceKind::Inert) {
      F *= FieldElement::prime_power(P.base(), n);
      continue;
    }
    FieldElement g = FieldElement::one(F_);
    const Poly v = P.kind() == PlaceKind::Split ? P.branch() : Poly(F_);
    const Point Q = reduce_mumford(P.base(), v, &g);
    F *= g.pow(n);
    if (Q.inf) continue;
    const Point step = n > 0 ? Q : group_->neg(Q);
    for (int i = 0; i < std::abs(n); ++i) run = add_points(run, step, &F);
    if (n < 0) F *= FieldElement::from_poly(t() - Poly::constant(F_, Q.x)).pow(n);
  }
  if (!run.inf) throw NotPrincipal("divisor class is nonzero in the Picard group");
  if (!(divisor_of(F) == D)) throw InternalError("constructed function has the wrong divisor");
  return F;
}

FieldElement Curve::two_divisibility_witness(const Divisor& D0) const {
  if (!two_divisible(D0)) throw NotPrincipal("divisor class is not 2-divisible");
  const long deg = D0.degree();
  if (!group_) {
    FieldElement F = FieldElement::one(F_);
    for (const auto& [P, n] : D0.coeffs)
      if (!P.is_infinite()) F *= FieldElement::prime_power(P.base(), n);
    return F;
  }
  Point S = Point::infinity();
  for (const auto& [P, n] : D0.coeffs) S = group_->add(S, group_->mul(point_class(P), n));
  const auto h = group_->halve(S);
  if (!h) throw InternalError("2-divisible class without a half");
  Divisor E = D0;
  E.add(infinity(), static_cast<int>(-deg));
  if (!h->inf) {
    E.add(point_place(*h), -2);
    E.add(infinity(), 2);
  }
  return function_with_principal_divisor(E);
}

std::vector<FieldElement> Curve::sing_complete_basis() const {
  std::vector<FieldElement> out{FieldElement::constant(F_, F_->first_nonsquare())};
  if (!group_) return out;
  const unsigned r = group_->two_rank();
  for (Elt x = 0; x < F_->q() && out.size() < 1 + r; ++x)
    if (f_.eval(x) == 0) out.push_back(FieldElement::from_poly(t() - Poly::constant(F_, x)));
  return out;
}

bool Curve::is_square(const FieldElement& x) const {
  if (!group_) {
    if (x.has_y()) throw PreconditionError("element with y-factors on the projective line");
    for (const auto& [g, e] : x.base_factors())
      if (e % 2) return false;
    return F_->quad_char(x.constant_part()) == 1;
  }
  const Divisor D = divisor_of(x);
  Point half = Point::infinity();
  for (const auto& [P, n] : D.coeffs) {
    if (n % 2) return false;
    if (!P.is_infinite()) half = group_->add(half, group_->mul(point_class(P), n / 2));
  }
  if (!half.inf) return false;
  const LocalValue v = local_value(x, infinity());
  return residue_context(infinity()).quad_char(v.unit) == 1;
}

}  // namespace wildsets
