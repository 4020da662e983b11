#pragma once

#include <string>
#include <vector>

#include "wildsets/curve.hpp"

namespace wildsets {

/// Expressions in t, y (curve only) and a (the generator of F_q over F_p)
/// with + - * / ^, parentheses, integer literals reduced mod p and integer
/// (possibly negative) exponents. Throws ParseError on malformed input.
FieldElement parse_element(const Curve& X, const std::string& s);
Poly parse_poly(const FieldPtr& F, const std::string& s);
Elt parse_scalar(const FieldPtr& F, const std::string& s);

std::string format_scalar(const FiniteField& F, Elt c);
std::string format_poly(const Poly& p);
/// Factored form, e.g. "2 * (t)^1 * (t + 4)^1 * (y + t)^-1".
std::string format_element(const FieldElement& x);

/// "inf", a monic irreducible in t, or "(base; kind; branch)" on the curve.
/// On the curve a bare base names the unique place above it (inert or
/// ramified).
Place parse_place(const Curve& X, const std::string& s);
std::string format_place(const Place& p);
/// Comma-separated places; commas inside parentheses do not split.
std::vector<Place> parse_place_list(const Curve& X, const std::string& s);
std::string format_place_list(const std::vector<Place>& S);

/// Curve from an optional description: empty for P^1, otherwise a cubic in t
/// or its comma-separated coefficients, low to high.
CurvePtr make_curve(const FieldPtr& F, const std::string& curve);

}  // namespace wildsets
