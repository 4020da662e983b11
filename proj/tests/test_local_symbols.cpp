#include "doctest.h"
#include "test_helpers.hpp"
#include "wildsets/errors.hpp"
#include "wildsets/local_symbols.hpp"

using namespace wildsets;
using wt::P;

namespace {

// Tame symbol straight from its definition as the character of a residue.
int oracle_symbol(const Curve& X, const FieldElement& x, const FieldElement& y, const Place& p) {
  const int a = X.ord(x, p), b = X.ord(y, p);
  FieldElement z = x.pow(b) * y.pow(-a);
  if ((static_cast<long>(a) * b) % 2) z *= FieldElement::constant(X.field(), X.field()->minus_one());
  return X.residue_context(p).quad_char(X.residue(z, p));
}

const LocalClass kAll[4] = {LocalClass::One, LocalClass::U, LocalClass::Pi, LocalClass::UPi};

std::vector<LocalMap> all_isomorphisms(const Place& s, const Place& t) {
  std::vector<LocalMap> out;
  for (LocalClass a : kAll)
    for (LocalClass b : kAll) {
      LocalMap m{s, t, a, b, std::nullopt};
      if (m.is_isomorphism()) out.push_back(m);
    }
  return out;
}

bool preserves_symbols(const LocalMap& m, int chi_s, int chi_t) {
  for (LocalClass a : kAll)
    for (LocalClass b : kAll)
      if (hilbert_symbol(a, b, chi_s) != hilbert_symbol(m.apply(a), m.apply(b), chi_t)) return false;
  return true;
}

}  // namespace

TEST_CASE("local square classes: examples") {
  auto F = FiniteField::make(5);
  auto X = Curve::projective_line(F);
  const Poly t = X->t();
  const auto lam = FieldElement::constant(F, F->from_int(2)) * FieldElement::from_poly((t - P(F, {1})) * (t - P(F, {1})));
  CHECK(local_square_class(*X, lam, Place::rational(t)) == LocalClass::U);
  CHECK(local_square_class(*X, FieldElement::from_poly(t), Place::rational(t)) == LocalClass::Pi);
  CHECK(minus_one_char(*X, Place::rational(t)) == 1);

  auto F3 = FiniteField::make(3);
  auto X3 = Curve::projective_line(F3);
  X3->for_each_place(2, [&](const Place& p) {
    CHECK(minus_one_char(*X3, p) == (p.degree() % 2 ? -1 : 1));
    return true;
  });
  CHECK(local_class_from_string("u*pi") == LocalClass::UPi);
  CHECK_THROWS_AS(local_class_from_string("v"), ParseError);
}

TEST_CASE("Hilbert symbol: examples") {
  auto F = FiniteField::make(5);
  auto X = Curve::projective_line(F);
  const auto t = FieldElement::from_poly(X->t());
  const Place p0 = Place::rational(X->t());
  CHECK(hilbert_symbol(*X, t, t, p0) == 1);
  CHECK(hilbert_symbol(*X, t, FieldElement::constant(F, F->from_int(2)), p0) == -1);
  const auto r = reciprocity_product(*X, t, FieldElement::constant(F, F->from_int(2)));
  CHECK(r.product == 1);
  CHECK(r.factors.size() == 2);
}

TEST_CASE("Hilbert symbol properties on P1 and the curve") {
  std::mt19937_64 rng(2024);
  std::vector<CurvePtr> curves;
  for (std::uint32_t q : {3u, 5u, 9u}) curves.push_back(Curve::projective_line(FiniteField::make(q)));
  auto F5 = FiniteField::make(5);
  curves.push_back(Curve::elliptic(P(F5, {0, 4, 0, 1})));
  for (const auto& X : curves) {
    const auto places = wt::places_up_to(*X, 2);
    for (int it = 0; it < 25; ++it) {
      const auto x = wt::random_element(*X, rng), y = wt::random_element(*X, rng), z = wt::random_element(*X, rng);
      CHECK(reciprocity_product(*X, x, y).product == 1);
      const auto minus_x = x * FieldElement::constant(X->field(), X->field()->minus_one());
      for (const auto& p : places) {
        const int s = hilbert_symbol(*X, x, y, p);
        CHECK(s == oracle_symbol(*X, x, y, p));
        CHECK(s == hilbert_symbol(*X, y, x, p));
        CHECK(hilbert_symbol(*X, x * z, y, p) == s * hilbert_symbol(*X, z, y, p));
        CHECK(hilbert_symbol(*X, x, minus_x, p) == 1);
        CHECK(s == hilbert_symbol(local_square_class(*X, x, p), local_square_class(*X, y, p), minus_one_char(*X, p)));
        CHECK(local_square_class(*X, x * y, p) == local_square_class(*X, x, p) * local_square_class(*X, y, p));
      }
    }
  }
}

TEST_CASE("local maps") {
  auto F = FiniteField::make(5);
  auto X = Curve::projective_line(F);
  const Place a = Place::rational(X->t()), b = Place::rational(X->t() - P(F, {1}));
  const auto isos = all_isomorphisms(a, b);
  CHECK(isos.size() == 6);
  for (const auto& m : isos) {
    CHECK(compose(m, m.inverse()).image_u == LocalClass::U);
    CHECK(compose(m, m.inverse()).image_pi == LocalClass::Pi);
    CHECK(compose(m.inverse(), m).image_pi == LocalClass::Pi);
    CHECK(preserves_symbols(m, 1, 1));
    // With chi(-1) = -1 only maps fixing u preserve symbols; those are tame.
    CHECK(preserves_symbols(m, -1, -1) == (m.image_u == LocalClass::U));
    CHECK_FALSE(preserves_symbols(m, 1, -1));
  }
  const auto m = LocalMap::from_pairs(a, b, LocalClass::UPi, LocalClass::Pi, LocalClass::Pi, LocalClass::U);
  CHECK(m.apply(LocalClass::UPi) == LocalClass::Pi);
  CHECK(m.apply(LocalClass::Pi) == LocalClass::U);
  CHECK(m.image_u == LocalClass::UPi);
  CHECK(m.is_wild());
  CHECK_THROWS_AS(LocalMap::from_pairs(a, b, LocalClass::U, LocalClass::U, LocalClass::U, LocalClass::Pi),
                  PreconditionError);
  LocalMap bad{a, b, LocalClass::U, LocalClass::Pi, LocalClass::U};
  CHECK_FALSE(bad.is_homomorphism());
  CHECK_FALSE(bad.is_isomorphism());
}
