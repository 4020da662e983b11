#include "wildsets/text.hpp"

#include <cctype>
#include <sstream>
#include <variant>

#include "wildsets/errors.hpp"

namespace wildsets {

namespace {

// (A + B*y) / d with d nonzero.
struct Linear {
  Poly A, B, d;
  bool is_zero() const { return A.is_zero() && B.is_zero(); }
};

using Value = std::variant<Linear, FieldElement>;

class Parser {
 public:
  Parser(const FieldPtr& F, const Poly* f, const std::string& s) : F_(F), f_(f), s_(s) {}

  Value parse() {
    Value v = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return v;
  }

  Linear linear(const Value& v) const {
    if (auto* l = std::get_if<Linear>(&v)) return *l;
    const auto& x = std::get<FieldElement>(v);
    Linear r{Poly::constant(F_, x.constant_part()), Poly(F_), Poly::constant(F_, 1)};
    for (const auto& [p, e] : x.base_factors()) {
      for (int k = 0; k < std::abs(e); ++k) {
        if (e > 0) {
          r.A = r.A * p;
          r.B = r.B * p;
        } else {
          r.d = r.d * p;
        }
      }
    }
    for (const auto& [yf, e] : x.y_factors()) {
      for (int k = 0; k < std::abs(e); ++k) {
        if (e > 0) {
          r = mul(r, {yf.a, yf.b, one()});
        } else {
          r = mul(r, {yf.a, -yf.b, one()});
          r.d = r.d * (yf.a * yf.a - yf.b * yf.b * curve_poly());
        }
      }
    }
    return r;
  }

  FieldElement element(const Value& v) const {
    if (auto* x = std::get_if<FieldElement>(&v)) return *x;
    const auto& l = std::get<Linear>(v);
    if (l.is_zero()) fail("the expression is zero");
    FieldElement num = l.B.is_zero() ? FieldElement::from_poly(l.A) : FieldElement::linear_y(l.A, l.B);
    return num / FieldElement::from_poly(l.d);
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " in '" + s_ + "'");
  }

 private:
  Poly one() const { return Poly::constant(F_, 1); }
  const Poly& curve_poly() const {
    if (!f_) fail("y is only available on the elliptic curve");
    return *f_;
  }

  Linear mul(const Linear& x, const Linear& y) const {
    Linear r{x.A * y.A, x.A * y.B + x.B * y.A, x.d * y.d};
    if (!x.B.is_zero() && !y.B.is_zero()) r.A += x.B * y.B * curve_poly();
    return r;
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  bool starts_primary() {
    skip();
    if (i_ >= s_.size()) return false;
    const char c = s_[i_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 't' || c == 'y' || c == 'a' || c == '(';
  }

  Value expr() {
    bool neg = eat('-');
    if (!neg) eat('+');
    Value v = term();
    if (neg) v = negate(v);
    for (;;) {
      if (eat('+')) {
        v = add(v, term(), false);
      } else if (eat('-')) {
        v = add(v, term(), true);
      } else {
        return v;
      }
    }
  }

  Value negate(const Value& v) const {
    if (auto* x = std::get_if<FieldElement>(&v)) return *x * FieldElement::constant(F_, F_->minus_one());
    Linear l = std::get<Linear>(v);
    return Linear{-l.A, -l.B, l.d};
  }

  Value add(const Value& a, const Value& b, bool sub) const {
    const Linear x = linear(a), y = linear(b);
    Linear r{x.A * y.d, x.B * y.d, x.d * y.d};
    if (sub) {
      r.A -= y.A * x.d;
      r.B -= y.B * x.d;
    } else {
      r.A += y.A * x.d;
      r.B += y.B * x.d;
    }
    return r;
  }

  Value term() {
    Value v = power();
    for (;;) {
      if (eat('*')) {
        v = product(v, power(), false);
      } else if (eat('/')) {
        v = product(v, power(), true);
      } else if (starts_primary()) {
        v = product(v, power(), false);
      } else {
        return v;
      }
    }
  }

  Value product(const Value& a, const Value& b, bool div) const {
    auto zero = [](const Value& v) {
      auto* l = std::get_if<Linear>(&v);
      return l && l->is_zero();
    };
    if (zero(b) && div) fail("division by zero");
    if (zero(a) || zero(b)) return Linear{Poly(F_), Poly(F_), one()};
    const FieldElement x = element(a), y = element(b);
    return div ? x / y : x * y;
  }

  Value power() {
    Value base = primary();
    if (!eat('^')) return base;
    bool paren = eat('(');
    bool neg = eat('-');
    skip();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected an integer exponent");
    const long e = std::stol(s_.substr(start, i_ - start));
    if (paren && !eat(')')) fail("expected ')'");
    if (e > 4096) fail("exponent too large");
    auto* l = std::get_if<Linear>(&base);
    if (l && l->is_zero()) {
      if (neg && e > 0) fail("division by zero");
      if (e == 0) return Linear{one(), Poly(F_), one()};
      return base;
    }
    return element(base).pow(static_cast<int>(neg ? -e : e));
  }

  Value primary() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[i_];
    if (c == '(') {
      ++i_;
      Value v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == '-') {
      ++i_;
      return negate(power());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      const std::string digits = s_.substr(start, i_ - start);
      long long v = 0;
      for (char d : digits) v = (v * 10 + (d - '0')) % static_cast<long long>(F_->p());
      return Linear{Poly::constant(F_, F_->from_int(v)), Poly(F_), one()};
    }
    ++i_;
    if (c == 't') return Linear{Poly::variable(F_), Poly(F_), one()};
    if (c == 'y') {
      curve_poly();
      return Linear{Poly(F_), one(), one()};
    }
    if (c == 'a') {
      if (F_->k() == 1) fail("'a' is only defined for non-prime fields");
      return Linear{Poly::constant(F_, F_->adjoined_root()), Poly(F_), one()};
    }
    --i_;
    fail("unexpected '" + std::string(1, c) + "'");
  }

  FieldPtr F_;
  const Poly* f_;
  std::string s_;
  std::size_t i_ = 0;
};

Poly as_poly(const Parser& P, const Value& v) {
  const Linear l = P.linear(v);
  if (!l.B.is_zero()) P.fail("expected a polynomial in t");
  auto [q, r] = divmod(l.A, l.d);
  if (!r.is_zero()) P.fail("expected a polynomial in t");
  return q;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split_top_level(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

Poly monic_irreducible(const FieldPtr& F, const std::string& s) {
  Poly p = parse_poly(F, s);
  if (p.degree() < 1 || !is_irreducible(p)) throw ParseError("'" + s + "' is not an irreducible polynomial");
  return p.monic();
}

}  // namespace

FieldElement parse_element(const Curve& X, const std::string& s) {
  Parser P(X.field(), X.is_elliptic() ? &X.f() : nullptr, s);
  return P.element(P.parse());
}

Poly parse_poly(const FieldPtr& F, const std::string& s) {
  Parser P(F, nullptr, s);
  return as_poly(P, P.parse());
}

Elt parse_scalar(const FieldPtr& F, const std::string& s) {
  const Poly p = parse_poly(F, s);
  if (p.degree() > 0) throw ParseError("expected a field element, got '" + s + "'");
  return p.coeff(0);
}

std::string format_scalar(const FiniteField& F, Elt c) { return F.to_string(c); }

std::string format_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  const FiniteField& F = p.F();
  std::ostringstream out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Elt c = p.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    if (!first) out << " + ";
    first = false;
    std::string cs = F.to_string(c);
    if (F.k() > 1 && cs.find('+') != std::string::npos && i > 0) cs = "(" + cs + ")";
    if (i == 0) {
      out << cs;
    } else {
      if (c != 1) out << cs << "*";
      out << "t";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

std::string format_element(const FieldElement& x) {
  const FiniteField& F = *x.field();
  std::vector<std::string> parts;
  if (x.constant_part() != 1 || x.is_constant()) {
    std::string c = F.to_string(x.constant_part());
    parts.push_back(c.find('+') != std::string::npos ? "(" + c + ")" : c);
  }
  for (const auto& [p, e] : x.base_factors()) parts.push_back("(" + format_poly(p) + ")^" + std::to_string(e));
  for (const auto& [f, e] : x.y_factors()) {
    std::string s = f.b.is_one() ? "y" : "(" + format_poly(f.b) + ")*y";
    if (!f.a.is_zero()) s += " + " + format_poly(f.a);
    parts.push_back("(" + s + ")^" + std::to_string(e));
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " * " : "") + parts[i];
  return out;
}

Place parse_place(const Curve& X, const std::string& raw) {
  const std::string s = trim(raw);
  if (s == "inf") return X.infinity();
  const FieldPtr& F = X.field();
  if (s.size() > 2 && s.front() == '(' && s.back() == ')' && s.find(';') != std::string::npos) {
    const auto parts = split_top_level(s.substr(1, s.size() - 2), ';');
    if (!X.is_elliptic()) throw ParseError("curve place syntax used on the projective line: '" + s + "'");
    if (parts.size() < 2 || parts.size() > 3) throw ParseError("expected (base; kind[; branch]) in '" + s + "'");
    const Poly base = monic_irreducible(F, parts[0]);
    PlaceKind kind;
    if (parts[1] == "split") kind = PlaceKind::Split;
    else if (parts[1] == "inert") kind = PlaceKind::Inert;
    else if (parts[1] == "ramified") kind = PlaceKind::Ramified;
    else throw ParseError("unknown place kind '" + parts[1] + "'");
    Poly branch = parts.size() == 3 ? parse_poly(F, parts[2]) : Poly();
    if (kind == PlaceKind::Split) {
      if (parts.size() != 3) throw ParseError("split places need a branch: '" + s + "'");
      ResidueField R(base);
      branch = R.reduce(branch);
    } else if (parts.size() == 3) {
      throw ParseError("only split places carry a branch: '" + s + "'");
    }
    const Place P = Place::curve(base, kind, branch);
    try {
      X.validate(P);
    } catch (const PreconditionError& e) {
      throw ParseError(std::string(e.what()) + ": '" + s + "'");
    }
    return P;
  }
  const Poly base = monic_irreducible(F, s);
  const auto above = X.places_above(base);
  if (above.size() != 1) throw ParseError("'" + s + "' splits on the curve; name a branch with (base; split; r)");
  return above.front();
}

std::string format_place(const Place& p) {
  if (p.is_infinite()) return "inf";
  if (!p.on_curve()) return format_poly(p.base());
  std::string s = "(" + format_poly(p.base()) + "; " + to_string(p.kind());
  if (p.kind() == PlaceKind::Split) s += "; " + format_poly(p.branch());
  return s + ")";
}

std::vector<Place> parse_place_list(const Curve& X, const std::string& s) {
  std::vector<Place> out;
  if (trim(s).empty()) return out;
  for (const auto& part : split_top_level(s, ',')) {
    if (part.empty()) throw ParseError("empty entry in place list '" + s + "'");
    out.push_back(parse_place(X, part));
  }
  return out;
}

std::string format_place_list(const std::vector<Place>& S) {
  std::string out;
  for (std::size_t i = 0; i < S.size(); ++i) out += (i ? ", " : "") + format_place(S[i]);
  return out;
}

CurvePtr make_curve(const FieldPtr& F, const std::string& curve) {
  const std::string s = trim(curve);
  if (s.empty()) return Curve::projective_line(F);
  Poly f;
  if (s.find(',') != std::string::npos) {
    std::vector<Elt> c;
    for (const auto& part : split_top_level(s, ',')) c.push_back(parse_scalar(F, part));
    f = Poly(F, c);
  } else {
    f = parse_poly(F, s);
  }
  if (f.degree() != 3) throw ParseError("the curve polynomial must be a cubic in t");
  try {
    return Curve::elliptic(f);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("invalid curve: ") + e.what());
  }
}

}  // namespace wildsets
