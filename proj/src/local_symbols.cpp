#include "wildsets/local_symbols.hpp"

#include <set>

#include "wildsets/errors.hpp"

namespace wildsets {

const char* to_string(LocalClass c) {
  switch (c) {
    case LocalClass::One: return "1";
    case LocalClass::U: return "u";
    case LocalClass::Pi: return "pi";
    case LocalClass::UPi: return "upi";
  }
  return "?";
}

LocalClass local_class_from_string(const std::string& s) {
  if (s == "1") return LocalClass::One;
  if (s == "u") return LocalClass::U;
  if (s == "pi") return LocalClass::Pi;
  if (s == "upi" || s == "u*pi" || s == "pi*u") return LocalClass::UPi;
  throw ParseError("unknown local square class '" + s + "'");
}

LocalClass local_square_class(const Curve& X, const FieldElement& x, const Place& p) {
  const LocalValue v = X.local_value(x, p);
  const bool pi = (v.ord % 2) != 0;
  const bool u = X.residue_context(p).quad_char(v.unit) == -1;
  return static_cast<LocalClass>((u ? 1u : 0u) | (pi ? 2u : 0u));
}

bool is_local_square(const Curve& X, const FieldElement& x, const Place& p) {
  return local_square_class(X, x, p) == LocalClass::One;
}

int minus_one_char(const Curve& X, const Place& p) {
  const auto ctx = X.residue_context(p);
  return ctx.quad_char(ctx.embed(Poly::constant(X.field(), X.field()->minus_one())));
}

int hilbert_symbol(const Curve& X, const FieldElement& x, const FieldElement& y, const Place& p) {
  const LocalValue a = X.local_value(x, p);
  const LocalValue b = X.local_value(y, p);
  const auto ctx = X.residue_context(p);
  int s = 1;
  if ((static_cast<long>(a.ord) * b.ord) % 2) s *= minus_one_char(X, p);
  if (b.ord % 2) s *= ctx.quad_char(a.unit);
  if (a.ord % 2) s *= ctx.quad_char(b.unit);
  return s;
}

int hilbert_symbol(LocalClass a, LocalClass b, int chi_minus_one) {
  int s = 1;
  if (has_pi(a) && has_pi(b)) s *= chi_minus_one;
  if (has_u(a) && has_pi(b)) s = -s;
  if (has_u(b) && has_pi(a)) s = -s;
  return s;
}

ReciprocityReport reciprocity_product(const Curve& X, const FieldElement& x, const FieldElement& y) {
  std::set<Place> places;
  for (const auto& p : X.candidate_support(x)) places.insert(p);
  for (const auto& p : X.candidate_support(y)) places.insert(p);
  ReciprocityReport r;
  for (const auto& p : places) {
    if (X.ord(x, p) == 0 && X.ord(y, p) == 0) continue;
    const int s = hilbert_symbol(X, x, y, p);
    r.factors.emplace_back(p, s);
    r.product *= s;
  }
  return r;
}

LocalMap LocalMap::from_pairs(const Place& s, const Place& t, LocalClass a, LocalClass fa, LocalClass b,
                              LocalClass fb) {
  if (a == LocalClass::One || b == LocalClass::One || a == b)
    throw PreconditionError("local map prescribed on dependent classes");
  // Express u and pi in terms of a and b.
  const LocalClass ab = a * b;
  auto image = [&](LocalClass c) {
    if (c == a) return fa;
    if (c == b) return fb;
    if (c == ab) return fa * fb;
    return LocalClass::One;
  };
  return {s, t, image(LocalClass::U), image(LocalClass::Pi), std::nullopt};
}

LocalClass LocalMap::apply(LocalClass c) const {
  if (c == LocalClass::UPi && image_upi) return *image_upi;
  LocalClass r = LocalClass::One;
  if (has_u(c)) r = r * image_u;
  if (has_pi(c)) r = r * image_pi;
  return r;
}

bool LocalMap::is_homomorphism() const { return !image_upi || *image_upi == image_u * image_pi; }

bool LocalMap::is_isomorphism() const {
  return is_homomorphism() && image_u != LocalClass::One && image_pi != LocalClass::One && image_u != image_pi;
}

LocalMap LocalMap::inverse() const {
  if (!is_isomorphism()) throw PreconditionError("local map is not invertible");
  return from_pairs(target, source, image_u, LocalClass::U, image_pi, LocalClass::Pi);
}

LocalMap compose(const LocalMap& first, const LocalMap& second) {
  if (!(first.target == second.source)) throw PreconditionError("local maps do not compose");
  return {first.source, second.target, second.apply(first.apply(LocalClass::U)),
          second.apply(first.apply(LocalClass::Pi)), std::nullopt};
}

}  // namespace wildsets
