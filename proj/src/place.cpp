#include "wildsets/place.hpp"

#include "wildsets/errors.hpp"

namespace wildsets {

const char* to_string(PlaceKind k) {
  switch (k) {
    case PlaceKind::Rational: return "rational";
    case PlaceKind::Split: return "split";
    case PlaceKind::Inert: return "inert";
    case PlaceKind::Ramified: return "ramified";
  }
  return "?";
}

Place Place::rational(Poly p) {
  if (p.degree() < 1 || !p.is_monic()) throw PreconditionError("a finite place needs a monic polynomial of positive degree");
  Place pl;
  pl.base_ = std::move(p);
  return pl;
}

Place Place::rational_infinity() {
  Place pl;
  pl.inf_ = true;
  return pl;
}

Place Place::curve(Poly base, PlaceKind kind, Poly branch) {
  if (kind == PlaceKind::Rational) throw PreconditionError("curve places cannot be of rational kind");
  if (base.degree() < 1 || !base.is_monic()) throw PreconditionError("a finite place needs a monic polynomial of positive degree");
  Place pl;
  pl.kind_ = kind;
  pl.base_ = std::move(base);
  if (kind == PlaceKind::Split) pl.branch_ = std::move(branch);
  return pl;
}

Place Place::curve_infinity() {
  Place pl;
  pl.inf_ = true;
  pl.kind_ = PlaceKind::Ramified;
  return pl;
}

std::strong_ordering operator<=>(const Place& a, const Place& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (auto c = a.inf_ <=> b.inf_; c != 0) return c;
  if (auto c = a.base_ <=> b.base_; c != 0) return c;
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  return a.branch_ <=> b.branch_;
}

void Divisor::add(const Place& p, int n) {
  if (n == 0) return;
  auto it = coeffs.find(p);
  if (it == coeffs.end()) {
    coeffs.emplace(p, n);
  } else {
    it->second += n;
    if (it->second == 0) coeffs.erase(it);
  }
}

int Divisor::coeff(const Place& p) const {
  auto it = coeffs.find(p);
  return it == coeffs.end() ? 0 : it->second;
}

long Divisor::degree() const {
  long d = 0;
  for (const auto& [p, n] : coeffs) d += static_cast<long>(n) * p.degree();
  return d;
}

Divisor Divisor::operator+(const Divisor& o) const {
  Divisor r = *this;
  for (const auto& [p, n] : o.coeffs) r.add(p, n);
  return r;
}

Divisor Divisor::operator-(const Divisor& o) const {
  Divisor r = *this;
  for (const auto& [p, n] : o.coeffs) r.add(p, -n);
  return r;
}

Divisor Divisor::scaled(int k) const {
  Divisor r;
  if (k == 0) return r;
  for (const auto& [p, n] : coeffs) r.coeffs.emplace(p, n * k);
  return r;
}

}  // namespace wildsets
