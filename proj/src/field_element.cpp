#include "wildsets/field_element.hpp"

#include "wildsets/errors.hpp"

namespace wildsets {

FieldElement FieldElement::constant(const FieldPtr& F, Elt c) {
  if (c == 0) throw PreconditionError("field elements must be nonzero");
  FieldElement x;
  x.F_ = F;
  x.c_ = c;
  return x;
}

FieldElement FieldElement::from_poly(const Poly& p) {
  if (p.is_zero()) throw PreconditionError("field elements must be nonzero");
  auto fac = factor(p);
  FieldElement x = constant(p.field(), fac.unit);
  for (const auto& [g, m] : fac.factors) x.add_base(g, m);
  return x;
}

FieldElement FieldElement::from_ratio(const Poly& num, const Poly& den) {
  return from_poly(num) / from_poly(den);
}

FieldElement FieldElement::prime_power(const Poly& p, int e) {
  if (!p.is_monic() || p.degree() < 1) throw PreconditionError("prime_power needs a monic polynomial");
  FieldElement x = one(p.field());
  x.add_base(p, e);
  return x;
}

FieldElement FieldElement::linear_y(const Poly& a, const Poly& b) {
  const FieldPtr& F = a.field() ? a.field() : b.field();
  if (b.is_zero()) return from_poly(a);
  Poly g = gcd(a, b);
  Poly a1 = a / g, b1 = b / g;
  const Elt lc = b1.lead();
  const Elt lci = F->inv(lc);
  FieldElement x = from_poly(g);
  x.c_ = F->mul(x.c_, lc);
  x.add_y(YFactor{a1.scaled(lci), b1.scaled(lci)}, 1);
  return x;
}

void FieldElement::add_base(const Poly& p, int e) {
  if (e == 0) return;
  auto it = base_.find(p);
  if (it == base_.end()) {
    base_.emplace(p, e);
  } else if ((it->second += e) == 0) {
    base_.erase(it);
  }
}

void FieldElement::add_y(const YFactor& f, int e) {
  if (e == 0) return;
  auto it = y_.find(f);
  if (it == y_.end()) {
    y_.emplace(f, e);
  } else if ((it->second += e) == 0) {
    y_.erase(it);
  }
}

long FieldElement::base_degree() const {
  long d = 0;
  for (const auto& [p, e] : base_) d += static_cast<long>(e) * p.degree();
  return d;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  if (!F_) return o;
  if (!o.F_) return *this;
  FieldElement r = *this;
  r.c_ = F_->mul(c_, o.c_);
  for (const auto& [p, e] : o.base_) r.add_base(p, e);
  for (const auto& [f, e] : o.y_) r.add_y(f, e);
  return r;
}

FieldElement FieldElement::inverse() const {
  FieldElement r;
  r.F_ = F_;
  r.c_ = F_ ? F_->inv(c_) : 1;
  for (const auto& [p, e] : base_) r.base_.emplace(p, -e);
  for (const auto& [f, e] : y_) r.y_.emplace(f, -e);
  return r;
}

FieldElement FieldElement::pow(int e) const {
  FieldElement r;
  r.F_ = F_;
  if (e < 0) return inverse().pow(-e);
  r.c_ = F_ ? F_->pow(c_, static_cast<std::uint64_t>(e)) : 1;
  if (e == 0) return r;
  for (const auto& [p, k] : base_) r.base_.emplace(p, k * e);
  for (const auto& [f, k] : y_) r.y_.emplace(f, k * e);
  return r;
}

FieldElement FieldElement::square_class_rep() const {
  FieldElement r;
  r.F_ = F_;
  r.c_ = (F_ && F_->quad_char(c_) == -1) ? F_->first_nonsquare() : 1;
  for (const auto& [p, e] : base_)
    if (e % 2) r.base_.emplace(p, 1);
  for (const auto& [f, e] : y_)
    if (e % 2) r.y_.emplace(f, 1);
  return r;
}

}  // namespace wildsets
