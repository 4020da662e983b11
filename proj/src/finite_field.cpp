#include "wildsets/finite_field.hpp"

#include <sstream>

#include "wildsets/errors.hpp"

namespace wildsets {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Naive polynomial arithmetic over F_p on coefficient vectors (low to high),
// used only to bootstrap the extension modulus and the log tables.
using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs mod_p(Coeffs a, const Coeffs& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  // m is monic.
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t sub = static_cast<std::uint64_t>(lead) * m[i] % p;
      a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

bool divides_p(const Coeffs& d, const Coeffs& a, std::uint32_t p) {
  return mod_p(a, d, p).empty();
}

// Monic polynomial of degree `deg` whose lower coefficients are the base-p
// digits of `index` (high digits most significant).
Coeffs monic_from_index(std::uint64_t index, unsigned deg, std::uint32_t p) {
  Coeffs c(deg + 1, 0);
  c[deg] = 1;
  for (unsigned i = 0; i < deg; ++i) {
    c[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return c;
}

bool naive_irreducible(const Coeffs& m, std::uint32_t p) {
  const unsigned deg = static_cast<unsigned>(m.size() - 1);
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx)
      if (divides_p(monic_from_index(idx, d, p), m, p)) return false;
  }
  return true;
}

}  // namespace

std::pair<std::uint32_t, unsigned> split_prime_power(std::uint32_t q) {
  if (q < 3 || q % 2 == 0 || q > FiniteField::kMaxOrder)
    throw PreconditionError("q must be an odd prime power in [3, " +
                            std::to_string(FiniteField::kMaxOrder) + "], got " +
                            std::to_string(q));
  std::uint32_t p = 0;
  for (std::uint32_t d = 3; d <= q; d += 2)
    if (q % d == 0) {
      p = d;
      break;
    }
  unsigned k = 0;
  std::uint32_t r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1 || !is_prime(p))
    throw PreconditionError("q must be an odd prime power, got " + std::to_string(q));
  return {p, k};
}

FieldPtr FiniteField::make(std::uint32_t q) {
  auto [p, k] = split_prime_power(q);
  return FieldPtr(new FiniteField(p, k));
}

FiniteField::FiniteField(std::uint32_t p, unsigned k) : p_(p), k_(k), q_(1) {
  for (unsigned i = 0; i < k; ++i) q_ *= p;
  if (k == 1) {
    modulus_ = {0, 1};
  } else {
    std::uint64_t count = q_;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Coeffs m = monic_from_index(idx, k, p);
      if (naive_irreducible(m, p)) {
        modulus_ = m;
        break;
      }
    }
  }

  // Find a primitive element by brute force and build exp/log tables. The
  // multiplication used here is the slow reference product.
  auto slow_mul = [&](Elt a, Elt b) -> Elt {
    if (k_ == 1) return static_cast<Elt>(static_cast<std::uint64_t>(a) * b % p_);
    Coeffs da = digits(a), db = digits(b);
    Coeffs prod(2 * k_, 0);
    for (unsigned i = 0; i < k_; ++i)
      for (unsigned j = 0; j < k_; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
    Coeffs r = mod_p(prod, modulus_, p_);
    r.resize(k_, 0);
    return from_digits(r);
  };

  const std::uint32_t order = q_ - 1;
  exp_.assign(order, 0);
  log_.assign(q_, 0);
  for (Elt g = 2; g < q_; ++g) {
    Elt x = 1;
    std::uint32_t n = 0;
    bool primitive = true;
    do {
      exp_[n] = x;
      x = slow_mul(x, g);
      ++n;
      if (x == 1 && n < order) {
        primitive = false;
        break;
      }
    } while (n < order);
    if (primitive) break;
  }
  for (std::uint32_t i = 0; i < order; ++i) log_[exp_[i]] = i;

  chi_.assign(q_, 0);
  for (Elt a = 1; a < q_; ++a) chi_[a] = (log_[a] % 2 == 0) ? 1 : -1;
  for (Elt a = 1; a < q_; ++a)
    if (chi_[a] == -1) {
      first_nonsquare_ = a;
      break;
    }
}

std::vector<std::uint32_t> FiniteField::digits(Elt a) const {
  std::vector<std::uint32_t> d(k_, 0);
  for (unsigned i = 0; i < k_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

Elt FiniteField::from_digits(const std::vector<std::uint32_t>& d) const {
  Elt v = 0;
  for (unsigned i = k_; i-- > 0;) v = v * p_ + (i < d.size() ? d[i] % p_ : 0);
  return v;
}

Elt FiniteField::add(Elt a, Elt b) const {
  if (k_ == 1) {
    const Elt s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elt r = 0, place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    r += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return r;
}

Elt FiniteField::neg(Elt a) const {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  Elt r = 0, place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    r += ((p_ - a % p_) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return r;
}

Elt FiniteField::sub(Elt a, Elt b) const { return add(a, neg(b)); }

Elt FiniteField::mul(Elt a, Elt b) const {
  if (a == 0 || b == 0) return 0;
  if (k_ == 1) return static_cast<Elt>(static_cast<std::uint64_t>(a) * b % p_);
  const std::uint32_t s = log_[a] + log_[b];
  return exp_[s >= q_ - 1 ? s - (q_ - 1) : s];
}

Elt FiniteField::inv(Elt a) const {
  if (a == 0) throw PreconditionError("inverse of zero in F_" + std::to_string(q_));
  const std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : (q_ - 1) - l];
}

Elt FiniteField::pow(Elt a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t l = (static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
  return exp_[l];
}

Elt FiniteField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elt>(r);
}

std::string FiniteField::to_string(Elt a) const {
  if (k_ == 1) return std::to_string(a);
  const auto d = digits(a);
  std::ostringstream out;
  bool first = true;
  for (unsigned i = k_; i-- > 0;) {
    if (d[i] == 0) continue;
    if (!first) out << "+";
    first = false;
    if (i == 0) {
      out << d[i];
    } else {
      if (d[i] != 1) out << d[i] << "*";
      out << "a";
      if (i > 1) out << "^" << i;
    }
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace wildsets
