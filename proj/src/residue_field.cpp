#include "wildsets/residue_field.hpp"

#include "wildsets/errors.hpp"

namespace wildsets {

ResidueField::ResidueField(Poly modulus) : m_(std::move(modulus)) {
  if (m_.degree() < 1 || !m_.is_monic()) throw PreconditionError("residue field modulus must be monic of positive degree");
}

std::uint64_t ResidueField::order() const {
  const std::uint64_t q = field()->q();
  std::uint64_t r = 1;
  for (unsigned i = 0; i < degree(); ++i) {
    if (r > (std::uint64_t{1} << 62) / q) throw PreconditionError("residue field too large");
    r *= q;
  }
  return r;
}

Poly ResidueField::inv(const Poly& a) const {
  Poly r = reduce(a);
  if (r.is_zero()) throw PreconditionError("inverse of zero in a residue field");
  Xgcd g = xgcd(r, m_);
  return g.s % m_;
}

Elt ResidueField::norm(const Poly& a) const {
  Poly n = one();
  Poly conj = reduce(a);
  const std::uint32_t q = field()->q();
  for (unsigned i = 0; i < degree(); ++i) {
    n = mul(n, conj);
    if (i + 1 < degree()) conj = pow(conj, q);
  }
  if (n.degree() > 0) throw InternalError("norm did not land in the constant field");
  return n.coeff(0);
}

int ResidueField::quad_char(const Poly& a) const {
  Poly r = reduce(a);
  if (r.is_zero()) return 0;
  return field()->quad_char(norm(r));
}

std::optional<Poly> ResidueField::sqrt(const Poly& a) const {
  const Poly x = reduce(a);
  if (x.is_zero()) return x;
  if (quad_char(x) != 1) return std::nullopt;
  const std::uint64_t Q = order();
  std::uint64_t m = Q - 1;
  unsigned s = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++s;
  }
  // Deterministic non-square: first polynomial in enumeration order.
  Poly z;
  bool found = false;
  for (unsigned d = 0; d < degree() && !found; ++d) {
    for_each_monic(field(), d, [&](const Poly& cand) {
      for (Elt c = 1; c < field()->q(); ++c) {
        Poly scaled = cand.scaled(c);
        if (quad_char(scaled) == -1) {
          z = scaled;
          found = true;
          return false;
        }
      }
      return true;
    });
  }
  if (!found) throw InternalError("no non-square found in residue field");

  Poly c = pow(z, m);
  Poly t = pow(x, m);
  Poly r = pow(x, (m + 1) / 2);
  unsigned M = s;
  while (!t.is_one()) {
    unsigned i = 0;
    Poly t2 = t;
    while (!t2.is_one()) {
      t2 = mul(t2, t2);
      ++i;
      if (i == M) throw InternalError("Tonelli-Shanks failed");
    }
    Poly b = c;
    for (unsigned j = 0; j + i + 1 < M; ++j) b = mul(b, b);
    M = i;
    c = mul(b, b);
    t = mul(t, c);
    r = mul(r, b);
  }
  return r;
}

QuadElem quad_mul(const ResidueField& R, const Poly& D, const QuadElem& x, const QuadElem& y) {
  Poly a = R.reduce(x.a * y.a + R.mul(x.b * y.b, D));
  Poly b = R.reduce(x.a * y.b + x.b * y.a);
  return {a, b};
}

QuadElem quad_inv(const ResidueField& R, const Poly& D, const QuadElem& x) {
  if (x.b.is_zero()) return {R.inv(x.a), Poly(R.field())};
  Poly n = R.reduce(x.a * x.a - R.mul(x.b * x.b, D));
  Poly ni = R.inv(n);
  return {R.mul(x.a, ni), R.mul(-x.b, ni)};
}

int quad_char_ext(const ResidueField& R, const Poly& D, const QuadElem& x) {
  if (x.is_zero()) return 0;
  Poly n = R.reduce(x.a * x.a - R.mul(x.b * x.b, D));
  return R.quad_char(n);
}

}  // namespace wildsets
