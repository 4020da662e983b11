#pragma once

#include <compare>
#include <map>
#include <string>

#include "wildsets/poly.hpp"

namespace wildsets {

/// Rational: a place of F_q(t). The other kinds are places of the elliptic
/// function field lying over a place of F_q(t).
enum class PlaceKind { Rational, Split, Inert, Ramified };

const char* to_string(PlaceKind k);

/// A closed point. `base` is the monic irreducible below the place (empty at
/// infinity); `branch` is, for split places, the residue r of y (a polynomial
/// of degree < deg base with r^2 = f mod base).
class Place {
 public:
  Place() = default;
  static Place rational(Poly p);
  static Place rational_infinity();
  static Place curve(Poly base, PlaceKind kind, Poly branch = Poly());
  static Place curve_infinity();

  bool is_infinite() const { return inf_; }
  bool on_curve() const { return kind_ != PlaceKind::Rational; }
  PlaceKind kind() const { return kind_; }
  const Poly& base() const { return base_; }
  const Poly& branch() const { return branch_; }
  unsigned base_degree() const { return inf_ ? 1u : static_cast<unsigned>(base_.degree()); }
  unsigned degree() const { return kind_ == PlaceKind::Inert ? 2 * base_degree() : base_degree(); }

  /// Ordered by degree, then finite before infinite, then base polynomial,
  /// kind and branch.
  friend std::strong_ordering operator<=>(const Place& a, const Place& b);
  friend bool operator==(const Place& a, const Place& b) { return (a <=> b) == 0; }

 private:
  bool inf_ = false;
  PlaceKind kind_ = PlaceKind::Rational;
  Poly base_, branch_;
};

/// A finite formal sum of places.
struct Divisor {
  std::map<Place, int> coeffs;

  void add(const Place& p, int n);
  int coeff(const Place& p) const;
  long degree() const;
  bool is_zero() const { return coeffs.empty(); }
  Divisor operator+(const Divisor& o) const;
  Divisor operator-(const Divisor& o) const;
  Divisor scaled(int k) const;
  friend bool operator==(const Divisor& a, const Divisor& b) { return a.coeffs == b.coeffs; }
};

}  // namespace wildsets
