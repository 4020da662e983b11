#include "wildsets/poly.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "wildsets/errors.hpp"

namespace wildsets {

Poly::Poly(FieldPtr field, std::vector<Elt> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  normalize();
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const FieldPtr& field, Elt c) { return Poly(field, {c}); }

Poly Poly::monomial(const FieldPtr& field, Elt c, unsigned degree) {
  std::vector<Elt> v(degree + 1, 0);
  v[degree] = c;
  return Poly(field, std::move(v));
}

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return scaled(F().inv(lead()));
}

Poly Poly::scaled(Elt c) const {
  std::vector<Elt> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = F().mul(c_[i], c);
  return Poly(field_, std::move(v));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(field_);
  std::vector<Elt> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = F().mul(c_[i], F().from_int(static_cast<long long>(i)));
  return Poly(field_, std::move(v));
}

Elt Poly::eval(Elt x) const {
  Elt r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = F().add(F().mul(r, x), c_[i]);
  return r;
}

Poly Poly::operator-() const {
  std::vector<Elt> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = F().neg(c_[i]);
  return Poly(field_, std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
  if (!field_) field_ = o.field_;
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = F().add(c_[i], o.c_[i]);
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (!field_) field_ = o.field_;
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = F().sub(c_[i], o.c_[i]);
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  const FieldPtr& field = a.field_ ? a.field_ : b.field_;
  if (a.is_zero() || b.is_zero()) return Poly(field);
  const FiniteField& F = *field;
  std::vector<Elt> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = F.add(v[i + j], F.mul(a.c_[i], b.c_[j]));
  }
  return Poly(field, std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  const FiniteField& F = b.F();
  if (a.degree() < b.degree()) return {Poly(b.field()), a};
  std::vector<Elt> r = a.coeffs();
  std::vector<Elt> qv(a.degree() - b.degree() + 1, 0);
  const Elt inv_lead = F.inv(b.lead());
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    const Elt coef = F.mul(r[i], inv_lead);
    qv[i - db] = coef;
    if (coef == 0) continue;
    for (int j = 0; j <= db; ++j) r[i - db + j] = F.sub(r[i - db + j], F.mul(coef, b.coeffs()[j]));
  }
  r.resize(db);
  return {Poly(b.field(), std::move(qv)), Poly(b.field(), std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = a.c_.size(); i-- > 0;)
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Xgcd xgcd(const Poly& a, const Poly& b) {
  const FieldPtr& field = a.field() ? a.field() : b.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(field, 1), s1(field);
  Poly u0(field), u1 = Poly::constant(field, 1);
  while (!r1.is_zero()) {
    auto [qq, rr] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(rr);
    Poly s2 = s0 - qq * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly u2 = u0 - qq * u1;
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (r0.is_zero()) return {r0, s0, u0};
  const Elt inv = field->inv(r0.lead());
  return {r0.scaled(inv), s0.scaled(inv), u0.scaled(inv)};
}

Poly powmod(Poly base, std::uint64_t e, const Poly& mod) {
  Poly result = Poly::constant(mod.field(), 1) % mod;
  base = base % mod;
  while (e > 0) {
    if (e & 1u) result = (result * base) % mod;
    e >>= 1;
    if (e) base = (base * base) % mod;
  }
  return result;
}

int multiplicity(const Poly& d, Poly a) {
  if (a.is_zero()) throw PreconditionError("multiplicity in the zero polynomial");
  int k = 0;
  while (true) {
    auto [qq, rr] = divmod(a, d);
    if (!rr.is_zero()) break;
    a = std::move(qq);
    ++k;
  }
  return k;
}

namespace {

// t^(q^n) mod f by n successive q-th powers.
Poly frobenius_power(const Poly& f, unsigned n) {
  const FieldPtr& field = f.field();
  Poly x = Poly::variable(field) % f;
  for (unsigned i = 0; i < n; ++i) x = powmod(x, field->q(), f);
  return x;
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> ps;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

// p-th root of a polynomial whose derivative vanishes.
Poly pth_root(const Poly& f) {
  const FiniteField& F = f.F();
  const std::uint32_t p = F.p();
  // In F_q with q = p^k, c^(1/p) = c^(q/p).
  const std::uint64_t root_exp = F.q() / p;
  std::vector<Elt> v;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) v.push_back(F.pow(f.coeffs()[i], root_exp));
  return Poly(f.field(), std::move(v));
}

// Squarefree factorization of a monic polynomial: pairs (g, m) with g
// squarefree, pairwise coprime, f = prod g^m.
void squarefree(const Poly& f, int mult, std::vector<std::pair<Poly, int>>& out) {
  if (f.degree() <= 0) return;
  const std::uint32_t p = f.F().p();
  Poly c = gcd(f, f.derivative());
  Poly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i * mult);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) squarefree(pth_root(c).monic(), mult * static_cast<int>(p), out);
}

// Equal-degree splitting (Cantor-Zassenhaus) of a squarefree monic f whose
// irreducible factors all have degree d.
void equal_degree(const Poly& f, unsigned d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (static_cast<unsigned>(f.degree()) == d) {
    out.push_back(f);
    return;
  }
  const FieldPtr& field = f.field();
  const FiniteField& F = *field;
  std::uniform_int_distribution<Elt> pick(0, F.q() - 1);
  while (true) {
    std::vector<Elt> v(f.degree());
    for (auto& x : v) x = pick(rng);
    Poly a(field, std::move(v));
    if (a.degree() <= 0) continue;
    // b = a^((q^d - 1)/2) = (a * a^q * ... * a^(q^(d-1)))^((q-1)/2) mod f.
    Poly norm = Poly::constant(field, 1);
    Poly conj = a % f;
    for (unsigned i = 0; i < d; ++i) {
      norm = (norm * conj) % f;
      conj = powmod(conj, F.q(), f);
    }
    Poly b = powmod(norm, (F.q() - 1) / 2, f);
    Poly g = gcd(b - Poly::constant(field, 1), f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

bool is_irreducible(const Poly& f) {
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  const Poly m = f.monic();
  const unsigned n = static_cast<unsigned>(m.degree());
  const Poly x = Poly::variable(m.field());
  if (!(frobenius_power(m, n) - x).is_zero()) return false;
  for (unsigned r : prime_divisors(n)) {
    Poly h = frobenius_power(m, n / r) - x;
    if (gcd(h, m).degree() > 0) return false;
  }
  return true;
}

Poly Factorization::product() const {
  if (factors.empty()) return Poly::constant(FieldPtr(), unit);
  const FieldPtr& field = factors.front().first.field();
  Poly r = Poly::constant(field, unit);
  for (const auto& [g, m] : factors)
    for (int i = 0; i < m; ++i) r = r * g;
  return r;
}

Factorization factor(const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) throw PreconditionError("cannot factor the zero polynomial");
  Factorization result;
  result.unit = f.lead();
  if (f.degree() == 0) return result;
  const FieldPtr& field = f.field();
  std::vector<std::pair<Poly, int>> sqf;
  squarefree(f.monic(), 1, sqf);

  std::mt19937_64 rng(seed);
  std::map<Poly, int> acc;
  const Poly x = Poly::variable(field);
  for (const auto& [g0, m] : sqf) {
    // Distinct-degree factorization.
    Poly g = g0;
    Poly h = x % g;
    unsigned d = 0;
    while (g.degree() > 0) {
      ++d;
      if (2 * d > static_cast<unsigned>(g.degree())) {
        acc[g.monic()] += m;
        break;
      }
      h = powmod(h, field->q(), g);
      Poly part = gcd(h - x, g);
      if (part.degree() > 0) {
        std::vector<Poly> pieces;
        equal_degree(part, d, rng, pieces);
        for (const auto& pc : pieces) acc[pc.monic()] += m;
        g = g / part;
        h = h % g;
      }
    }
  }
  for (auto& [g, m] : acc) result.factors.emplace_back(g, m);
  return result;
}

void for_each_monic(const FieldPtr& field, unsigned d, const std::function<bool(const Poly&)>& fn) {
  const std::uint32_t q = field->q();
  std::vector<Elt> c(d + 1, 0);
  c[d] = 1;
  while (true) {
    if (!fn(Poly(field, c))) return;
    // Increment the lower coefficients as a base-q counter, c[0] fastest.
    unsigned i = 0;
    while (i < d) {
      if (++c[i] < q) break;
      c[i] = 0;
      ++i;
    }
    if (i == d) return;
  }
}

void for_each_irreducible(const FieldPtr& field, unsigned d, const std::function<bool(const Poly&)>& fn) {
  if (d == 0) throw PreconditionError("irreducibles of degree 0 requested");
  for_each_monic(field, d, [&](const Poly& f) {
    if (!is_irreducible(f)) return true;
    return fn(f);
  });
}

std::vector<Poly> irreducibles_of_degree(const FieldPtr& field, unsigned d) {
  std::vector<Poly> out;
  for_each_irreducible(field, d, [&](const Poly& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::uint64_t necklace_count(std::uint64_t q, unsigned d) {
  auto mobius = [](unsigned n) {
    int mu = 1;
    for (unsigned p = 2; p * p <= n; ++p)
      if (n % p == 0) {
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
      }
    if (n > 1) mu = -mu;
    return mu;
  };
  long long total = 0;
  for (unsigned e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    long long pw = 1;
    for (unsigned i = 0; i < d / e; ++i) pw *= static_cast<long long>(q);
    total += mobius(e) * pw;
  }
  return static_cast<std::uint64_t>(total / d);
}

}  // namespace wildsets
