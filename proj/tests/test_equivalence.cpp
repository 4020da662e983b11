#include <set>

#include "doctest.h"
#include "test_helpers.hpp"
#include "wildsets/certificate_json.hpp"
#include "wildsets/constructions.hpp"
#include "wildsets/errors.hpp"
#include "wildsets/text.hpp"

using namespace wildsets;
using wt::P;

namespace {

struct F5Line {
  FieldPtr F = FiniteField::make(5);
  CurvePtr X = Curve::projective_line(F);
  Place p0 = Place::rational(X->t());
  Place p1 = Place::rational(X->t() - P(F, {1}));
  Place q2 = Place::rational(P(F, {2, 0, 1}));
  Place q3 = Place::rational(P(F, {3, 0, 1}));
  FieldElement two = FieldElement::constant(F, F->from_int(2));
  FieldElement mu = FieldElement::from_poly(X->t() * (X->t() - P(F, {1})));
};

// The pair certificate over {(t), (t-1)} swapping 2 and t(t-1).
Certificate swap_pair(const F5Line& L) {
  Certificate c;
  c.kind = CertKind::Pre;
  c.X = L.X;
  c.S = c.T = {L.p0, L.p1};
  c.basis = {L.two, L.mu};
  c.images = {L.mu, L.two};
  for (const auto& p : c.S) {
    const LocalClass a = local_square_class(*L.X, L.two, p), b = local_square_class(*L.X, L.mu, p);
    c.local_maps.push_back(LocalMap::from_pairs(p, p, a, b, b, a));
  }
  return c;
}

bool has_check_failure(const VerificationReport& R, const std::string& prefix) {
  for (const auto& c : R.checks)
    if (!c.ok && c.name.rfind(prefix, 0) == 0) return true;
  return false;
}

}  // namespace

TEST_CASE("pre-equivalence verification: examples") {
  F5Line L;
  const auto pe = swap_pair(L);
  const auto R = verify_pre_equivalence(pe);
  CHECK(R.ok());
  CHECK(R.wild.size() == 2);

  Certificate id;
  id.kind = CertKind::Pre;
  id.X = L.X;
  id.S = id.T = {L.p0, L.p1};
  id.basis = id.images = {L.two, L.mu};
  id.local_maps = {LocalMap::identity(L.p0), LocalMap::identity(L.p1)};
  CHECK(verify_pre_equivalence(id).ok());
  CHECK(verify_pre_equivalence(id).wild.empty());

  auto bad = pe;
  bad.local_maps[0] = LocalMap::identity(L.p0);
  const auto B = verify_pre_equivalence(bad);
  CHECK_FALSE(B.ok());
  CHECK(has_check_failure(B, "PE4"));
}

TEST_CASE("extension and small equivalence verification: examples") {
  F5Line L;
  const auto se = extend_pre_equivalence(swap_pair(L));
  CHECK(se.S.size() == 2);
  CHECK(verify_small_equivalence(se).ok());
  CHECK(hilbert_symbol(*L.X, L.two, L.mu, L.p0) == -1);
  CHECK(wild_points(se).size() == 2);

  const auto id = identity_small(L.X, {L.p0});
  const auto R = verify_small_equivalence(id);
  CHECK(R.ok());
  CHECK(R.wild.empty());

  auto bad = se;
  bad.local_maps[0].image_upi = LocalClass::U;
  CHECK(has_check_failure(verify_small_equivalence(bad), "SE3"));

  // Singleton on (t^2+2): one auxiliary place of degree 1.
  Certificate single;
  single.kind = CertKind::Pre;
  single.X = L.X;
  single.S = single.T = {L.q2};
  single.basis = single.images = {FieldElement::from_poly(L.q2.base())};
  single.local_maps = {{L.q2, L.q2, LocalClass::UPi, LocalClass::Pi, std::nullopt}};
  const auto ext = extend_pre_equivalence(single);
  REQUIRE(ext.S.size() == 2);
  CHECK(ext.S[1].degree() == 1);
  CHECK(ext.S[1] == L.p0);
  CHECK(wild_points(ext) == std::vector<Place>{L.q2});

  Certificate mismatched;
  mismatched.kind = CertKind::Pre;
  mismatched.X = L.X;
  mismatched.S = {L.q2};
  mismatched.T = {L.p0};
  mismatched.basis = {FieldElement::from_poly(L.q2.base())};
  mismatched.images = {FieldElement::from_poly(L.X->t())};
  mismatched.local_maps = {{L.q2, L.p0, LocalClass::U, LocalClass::Pi, std::nullopt}};
  CHECK_THROWS_AS(extend_pre_equivalence(mismatched), PreconditionError);
}

TEST_CASE("necessary condition: examples") {
  F5Line L;
  CHECK_FALSE(check_necessary_condition(*L.X, {L.p0}));
  CHECK(check_necessary_condition(*L.X, {L.p0, L.p1}));
  CHECK(check_necessary_condition(*L.X, {L.q2, L.q3}));
}

TEST_CASE("inverse, composition and enlargement") {
  F5Line L;
  const auto c1 = construct_rank0(L.X, {L.q2});
  const auto c2 = construct_rank0(L.X, {L.q3});
  CHECK(verify(inverse(c1)).ok());
  auto [a, b] = align_for_composition(c1, c2);
  CHECK(verify(a).ok());
  CHECK(verify(b).ok());
  CHECK(wild_points(a) == std::vector<Place>{L.q2});
  const auto c = compose(a, b);
  const auto w = wild_points(c);
  CHECK(std::set<Place>(w.begin(), w.end()) == std::set<Place>{L.q2, L.q3});

  auto [a2, id2] = align_for_composition(c1, identity_small(L.X, c1.T));
  CHECK(wild_points(compose(a2, id2)) == std::vector<Place>{L.q2});

  auto [x, y] = align_for_composition(c1, inverse(c1));
  CHECK_THROWS_AS(compose(x, y), PreconditionError);
  CHECK_THROWS_AS(compose(c1, c2), PreconditionError);

  const auto e = enlarge(c1, Place::rational(L.X->t() - P(L.F, {3})));
  CHECK(verify(e).ok());
  CHECK(wild_points(e) == std::vector<Place>{L.q2});
  CHECK(check_rank_preservation(e).ok);
}

TEST_CASE("certificate JSON round trip") {
  F5Line L;
  const auto c = construct_rank1_pair(L.X, L.p0, L.p1);
  const std::string text = write_certificate(c);
  const auto back = read_certificate(text);
  CHECK(write_certificate(back) == text);
  CHECK(verify(back).ok());
  CHECK_THROWS_AS(read_certificate("{"), ParseError);
  CHECK_THROWS_AS(read_certificate("{\"q\": 5}"), ParseError);

  auto F = FiniteField::make(5);
  auto E = Curve::elliptic(P(F, {0, 4, 0, 1}));
  std::vector<Place> S;
  for (const auto& p : wt::places_up_to(*E, 1)) {
    S.push_back(p);
    if (pic_two_rank_direct(*E, S) == 0) break;
  }
  const auto ce = identity_small(E, S);
  CHECK(verify(ce).ok());
  const auto be = read_certificate(write_certificate(ce));
  CHECK(verify(be).ok());
  CHECK(write_certificate(be) == write_certificate(ce));
}

TEST_CASE("text grammar") {
  F5Line L;
  const auto x = parse_element(*L.X, "2*t*(t+4)/(t^2+2)^-1");
  CHECK(format_element(x) == "2 * (t)^1 * (t + 4)^1 * (t^2 + 2)^1");
  CHECK(parse_element(*L.X, format_element(x)) == x);
  CHECK(L.X->is_square(parse_element(*L.X, "t^2 - 2*t + 1") / parse_element(*L.X, "(t-1)^2")));
  CHECK(parse_place(*L.X, "t-1") == L.p1);
  CHECK(parse_place(*L.X, "inf") == L.X->infinity());
  CHECK_THROWS_AS(parse_place(*L.X, "t^2-1"), ParseError);
  CHECK_THROWS_AS(parse_element(*L.X, "t +"), ParseError);
  CHECK_THROWS_AS(parse_element(*L.X, "y"), ParseError);
  CHECK_THROWS_AS(parse_element(*L.X, "t - t"), ParseError);
  CHECK(parse_place_list(*L.X, "t, t-1").size() == 2);

  auto F9 = FiniteField::make(9);
  auto X9 = Curve::projective_line(F9);
  const auto z = parse_element(*X9, "(a+1)*t + a");
  CHECK(parse_element(*X9, format_element(z)) == z);

  auto E = make_curve(L.F, "t^3 - t");
  CHECK(E->is_elliptic());
  CHECK(make_curve(L.F, "0,4,0,1")->f() == E->f());
  const auto w = parse_element(*E, "(y + t)^-1 * t");
  CHECK(parse_element(*E, format_element(w)) == w);
  const auto s = parse_element(*E, "(y + t)*(y - t)");
  CHECK(E->is_square(s / parse_element(*E, "t^3 - t - t^2")));
  const Place pr = parse_place(*E, "t");
  CHECK(pr.kind() == PlaceKind::Ramified);
  CHECK(parse_place(*E, format_place(pr)) == pr);
  for (const auto& p : wt::places_up_to(*E, 2)) CHECK(parse_place(*E, format_place(p)) == p);
  CHECK_THROWS_AS(make_curve(L.F, "t^2"), ParseError);
}
