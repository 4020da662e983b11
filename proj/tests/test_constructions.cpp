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

std::set<Place> as_set(const std::vector<Place>& v) { return {v.begin(), v.end()}; }

void check_certificate(const Certificate& c, const std::vector<Place>& want) {
  const auto R = verify(c);
  REQUIRE(R.ok());
  CHECK(as_set(R.wild) == as_set(want));
  CHECK(check_necessary_condition(*c.X, R.wild));
  CHECK(check_rank_preservation(c).ok);
  // Wildness does not depend on the uniformizer chosen at either end.
  const Curve& X = *c.X;
  const auto mo = FieldElement::constant(X.field(), X.field()->minus_one());
  for (std::size_t i = 0; i < c.S.size(); ++i) {
    const auto& m = c.local_maps[i];
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t < 2; ++t) {
        // Change of uniformizer pi -> u*pi on either side, written in the new coordinates.
        auto to_new = [](LocalClass x, int flip) { return flip && has_pi(x) ? x * LocalClass::U : x; };
        const LocalClass pi_old = s ? LocalClass::UPi : LocalClass::Pi;
        LocalMap n{m.source, m.target, to_new(m.apply(LocalClass::U), t), to_new(m.apply(pi_old), t), std::nullopt};
        CHECK(n.is_wild() == m.is_wild());
      }
    CHECK(m.apply(local_square_class(X, mo, c.S[i])) == local_square_class(X, mo, c.T[i]));
  }
}

struct F5 {
  FieldPtr F = FiniteField::make(5);
  CurvePtr X = Curve::projective_line(F);
  std::vector<Place> L(const std::string& s) const { return parse_place_list(*X, s); }
};

}  // namespace

TEST_CASE("rank 0 constructions") {
  F5 f;
  check_certificate(construct_rank0(f.X, f.L("t^2+2")), f.L("t^2+2"));
  check_certificate(construct_rank0(f.X, f.L("t^2+2, t^2+3")), f.L("t^2+2, t^2+3"));
  check_certificate(construct_rank0(f.X, f.L("t^2+2, t^2+3, t^2+t+1")), f.L("t^2+2, t^2+3, t^2+t+1"));
  CHECK_THROWS_AS(construct_rank0(f.X, f.L("t^2+2, t")), Refusal);
}

TEST_CASE("rank 1 pairs") {
  F5 f;
  const auto S = f.L("t, t-1");
  const auto c = construct_rank1_pair(f.X, S[0], S[1]);
  check_certificate(c, S);
  CHECK(as_set({c.T[0], c.T[1]}) == as_set(S));
  CHECK(c.S.size() == 2);
  CHECK(c.basis.size() == 2);

  const auto S1 = f.L("t, t^2+2");
  const auto c1 = construct_rank1_pair(f.X, S1[0], S1[1]);
  check_certificate(c1, S1);
  CHECK(c1.image_of({S1[0]})[0] == S1[1]);
  CHECK(c1.image_of({S1[1]})[0] == S1[0]);

  auto F3 = FiniteField::make(3);
  auto X3 = Curve::projective_line(F3);
  const auto S3 = parse_place_list(*X3, "t, t-1");
  CHECK_THROWS_AS(construct_rank1_pair(X3, S3[0], S3[1]), Refusal);
  const auto S4 = f.L("t^2+2, t^2+3");
  CHECK_THROWS_AS(construct_rank1_pair(f.X, S4[0], S4[1]), Refusal);
}

TEST_CASE("rank 1 triples") {
  F5 f;
  const auto S = f.L("t, t-1, t-2");
  Notes notes;
  const auto c = construct_rank1_triple(f.X, S[0], S[1], S[2], {}, &notes);
  check_certificate(c, S);
  bool low = false;
  for (const auto& p : c.T)
    if (std::find(S.begin(), S.end(), p) == S.end() && p.degree() <= 6) low = true;
  CHECK(low);
  CHECK(notes.size() == 1);

  const auto D = f.L("t, t-1, t^2+2");
  check_certificate(construct_rank1_triple(f.X, D[0], D[1], D[2]), D);
  const auto Z = f.L("t^2+2, t^2+3, t^2+t+1");
  CHECK_THROWS_AS(construct_rank1_triple(f.X, Z[0], Z[1], Z[2]), Refusal);
}

TEST_CASE("rank 1 induction") {
  F5 f;
  const auto S = f.L("t, t-1, t-2, t-3");
  check_certificate(construct_rank1(f.X, S), S);
  check_certificate(construct_rank1(f.X, f.L("t, t-1, t^2+2, t^2+3, t-2")), f.L("t, t-1, t^2+2, t^2+3, t-2"));
  CHECK_THROWS_AS(construct_rank1(f.X, f.L("t")), Refusal);
  check_certificate(construct_rank1(f.X, f.L("t^2+2, t^2+3")), f.L("t^2+2, t^2+3"));
}

TEST_CASE("general construction on the Legendre curve") {
  auto F = FiniteField::make(5);
  auto E = make_curve(F, "t^3 - t");
  CHECK(E->group().order() == 8);
  CHECK(E->pic0_two_rank() == 2);
  const auto Pl = parse_place_list(*E, "t, t-1");
  const auto Q = parse_place_list(*E, "t^2+2, t^2+3");
  for (const auto& q : Q) CHECK(q.degree() == 4);
  CHECK(smile(*E, Q[0], Q[1]));
  Notes notes;
  const auto c = construct_general(E, Pl, Q, {}, &notes);
  std::vector<Place> S = Pl;
  S.insert(S.end(), Q.begin(), Q.end());
  check_certificate(c, S);
  CHECK(g_rank(*E, S).rank == 2);
  CHECK(S.size() == 2 * g_rank(*E, S).rank);
  REQUIRE_FALSE(notes.empty());

  CHECK_THROWS_AS(construct_general(E, Pl, {Q[0]}), Refusal);
  CHECK_THROWS_AS(construct_general(E, {Pl[0], Pl[0]}, Q), PreconditionError);
}

TEST_CASE("constructions are deterministic") {
  F5 f;
  const auto S = f.L("t, t-1, t-2");
  const auto a = write_certificate(construct_rank1(f.X, S));
  const auto b = write_certificate(construct_rank1(f.X, S));
  CHECK(a == b);
}

TEST_CASE("random rank 0 and rank 1 sets") {
  std::mt19937_64 rng(4242);
  for (std::uint32_t q : {5u, 13u, 9u}) {
    auto F = FiniteField::make(q);
    auto X = Curve::projective_line(F);
    const auto pool = wt::places_up_to(*X, 2);
    std::vector<Place> even, odd;
    for (const auto& p : pool) (p.degree() % 2 ? odd : even).push_back(p);
    for (int it = 0; it < 3; ++it) {
      std::set<Place> s;
      const std::size_t n = 1 + rng() % 3;
      while (s.size() < n) s.insert(even[rng() % even.size()]);
      std::vector<Place> S(s.begin(), s.end());
      check_certificate(construct_rank0(X, S), S);
      const std::size_t k = 2 + rng() % 2;
      while (s.size() < n + k) s.insert(odd[rng() % odd.size()]);
      std::vector<Place> S1(s.begin(), s.end());
      if (g_rank(*X, S1).rank == 1) check_certificate(construct_rank1(X, S1), S1);
    }
  }
}
