// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "test_helpers.hpp"
#include "wildsets/certificate_json.hpp"
#include "wildsets/constructions.hpp"
#include "wildsets/errors.hpp"
#include "wildsets/text.hpp"

using namespace wildsets;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (ok) detail.str("");
    if (ok) detail << "first failure: " << why;
    ok = false;
  }
};

// Every verified certificate produced below, for the necessary-condition gate.
std::vector<Certificate> corpus;

std::set<Place> as_set(const std::vector<Place>& v) { return {v.begin(), v.end()}; }

std::vector<std::vector<Place>> subsets_up_to(const std::vector<Place>& pool, std::size_t k) {
  std::vector<std::vector<Place>> out;
  std::vector<Place> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() == k) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      cur.push_back(pool[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

CurvePtr line(unsigned q) { return Curve::projective_line(FiniteField::make(q)); }
CurvePtr legendre() { return make_curve(FiniteField::make(5), "t^3 - t"); }

// 1. Reciprocity.
Outcome criterion1(std::mt19937_64& rng) {
  Outcome o;
  const auto t0 = Clock::now();
  unsigned total = 0;
  auto run = [&](const CurvePtr& X, unsigned n, const std::string& name) {
    for (unsigned i = 0; i < n && o.ok; ++i, ++total) {
      const auto a = wt::random_element(*X, rng), b = wt::random_element(*X, rng);
      if (reciprocity_product(*X, a, b).product != 1)
        o.fail(name + ": (" + format_element(a) + ", " + format_element(b) + ")");
    }
  };
  for (unsigned q : {3u, 5u, 9u}) run(line(q), 1000, "P^1/F_" + std::to_string(q));
  run(legendre(), 300, "y^2 = t^3 - t / F_5");
  const double dt = seconds_since(t0);
  if (dt >= 10) o.fail("runtime " + fmt_seconds(dt));
  if (o.ok) o.detail << total << " pairs with product +1 in " << fmt_seconds(dt);
  return o;
}

struct RankSets {
  std::vector<std::pair<CurvePtr, std::vector<Place>>> sets;
};

RankSets rank_sets(std::mt19937_64& rng) {
  RankSets R;
  for (unsigned q : {3u, 5u}) {
    const auto X = line(q);
    for (auto& S : subsets_up_to(wt::places_up_to(*X, 3), 4)) R.sets.emplace_back(X, std::move(S));
  }
  for (const auto& X : {legendre(), make_curve(FiniteField::make(5), "t^3 + t + 1")}) {
    const auto pool = wt::places_up_to(*X, 2);
    for (int i = 0; i < 30; ++i) {
      auto v = pool;
      std::shuffle(v.begin(), v.end(), rng);
      v.resize(1 + rng() % 4);
      R.sets.emplace_back(X, v);
    }
  }
  return R;
}

// 2. Rank formula vs direct computation of rk Pic(X\S).
Outcome criterion2(const RankSets& R) {
  Outcome o;
  const auto t0 = Clock::now();
  for (const auto& [X, S] : R.sets) {
    const auto r = check_pic_rank_formula(*X, S);
    if (!r.agree) {
      o.fail("S = {" + format_place_list(S) + "}: formula " + std::to_string(r.formula) + ", direct " +
             std::to_string(r.direct));
      break;
    }
  }
  if (o.ok) o.detail << R.sets.size() << " sets agree (" << fmt_seconds(seconds_since(t0)) << ")";
  return o;
}

// 3. Independence in Pic X / 2 Pic X iff Sing(X\S) = Sing(X), both directions.
Outcome criterion3(const RankSets& R) {
  Outcome o;
  const auto t0 = Clock::now();
  unsigned indep = 0, dep = 0;
  for (const auto& [X, S] : R.sets) {
    const auto r = check_lin_dep_lemma(X, S);
    if (!r.agree) {
      o.fail("S = {" + format_place_list(S) + "}");
      break;
    }
    (r.independent ? indep : dep) += 1;
  }
  if (o.ok)
    o.detail << R.sets.size() << " sets agree (" << indep << " independent, " << dep << " dependent; "
             << fmt_seconds(seconds_since(t0)) << ")";
  return o;
}

bool certificate_ok(const Certificate& c, const std::vector<Place>& want, Outcome& o, const std::string& name) {
  const auto back = read_certificate(write_certificate(c));
  const auto R = verify(back);
  if (!R.ok()) {
    o.fail(name + ": " + R.failure()->name);
    return false;
  }
  if (as_set(R.wild) != as_set(want)) {
    o.fail(name + ": wild set {" + format_place_list(R.wild) + "}");
    return false;
  }
  corpus.push_back(back);
  return true;
}

// 4. Construction round trips over F_5.
Outcome criterion4() {
  Outcome o;
  const auto X = line(5);
  const auto L = [&](const char* s) { return parse_place_list(*X, s); };
  const auto t0 = Clock::now();
  try {
    certificate_ok(construct_rank0(X, L("t^2+2")), L("t^2+2"), o, "rank0 {t^2+2}");
    certificate_ok(construct_rank0(X, L("t^2+2, t^2+3")), L("t^2+2, t^2+3"), o, "rank0 {t^2+2, t^2+3}");
    const auto pair = L("t, t-1");
    const auto cp = construct_rank1_pair(X, pair[0], pair[1]);
    if (certificate_ok(cp, pair, o, "pair") && as_set(cp.image_of(pair)) != as_set(pair))
      o.fail("pair: T does not stabilize {t, t-1}");
    const auto tri = L("t, t-1, t-2");
    Notes notes;
    const auto ct = construct_rank1_triple(X, tri[0], tri[1], tri[2], {}, &notes);
    certificate_ok(ct, tri, o, "triple");
    unsigned p4deg = 0;
    for (const auto& n : notes) {
      const auto at = n.find("degree ");
      if (at != std::string::npos) p4deg = static_cast<unsigned>(std::stoul(n.substr(at + 7)));
    }
    if (p4deg == 0 || p4deg > 6) o.fail("triple: auxiliary p4 degree not reported or > 6");
    certificate_ok(construct_rank1(X, L("t, t-1, t-2, t-3")), L("t, t-1, t-2, t-3"), o, "rank1 on four places");
    const double dt = seconds_since(t0);
    if (dt >= 30) o.fail("runtime " + fmt_seconds(dt));
    if (o.ok) o.detail << "5 certificates verified after JSON round trip, p4 of degree " << p4deg << ", "
                       << fmt_seconds(dt);
  } catch (const Error& e) {
    o.fail(e.what());
  }
  return o;
}

// 5. Flagship rank-2 instance on y^2 = t^3 - t over F_5.
Outcome criterion5() {
  Outcome o;
  const auto X = legendre();
  // Point count and 2-torsion by enumeration over F_5 with integer arithmetic.
  unsigned points = 1, roots = 0;
  for (int x = 0; x < 5; ++x) {
    const int f = ((x * x * x - x) % 5 + 5) % 5;
    for (int y = 0; y < 5; ++y) points += (y * y % 5 == f);
    roots += (f == 0);
  }
  const unsigned two_rank = roots == 3 ? 2 : roots == 1 ? 1 : 0;
  if (points != 8 || two_rank != 2 || X->group().order() != 8 || X->pic0_two_rank() != 2)
    o.fail("group order / 2-rank mismatch");
  const auto t0 = Clock::now();
  try {
    const auto P = parse_place_list(*X, "t, t-1"), Q = parse_place_list(*X, "t^2+2, t^2+3");
    Notes notes;
    const auto c = construct_general(X, P, Q, {}, &notes);
    std::vector<Place> W = P;
    W.insert(W.end(), Q.begin(), Q.end());
    if (certificate_ok(c, W, o, "flagship")) {
      const unsigned G = g_rank(*X, W).rank;
      if (W.size() != 4 || G != 2) o.fail("|W| = " + std::to_string(W.size()) + ", rk G = " + std::to_string(G));
      const double dt = seconds_since(t0);
      if (dt >= 60) o.fail("runtime " + fmt_seconds(dt));
      if (o.ok)
        o.detail << "|E(F_5)| = 8, 2-rank 2; wild set of size 4 with rk G = 2 (bound attained), " << fmt_seconds(dt);
    }
  } catch (const Error& e) {
    o.fail(e.what());
  }
  return o;
}

// 6. Necessary condition over the whole corpus, and refusal of {(t)} over F_5.
Outcome criterion6(std::mt19937_64& rng) {
  Outcome o;
  // Extra random certificates over several fields.
  for (unsigned q : {5u, 9u, 13u}) {
    const auto X = line(q);
    const auto pool = wt::places_up_to(*X, 2);
    for (int i = 0; i < 6; ++i) {
      auto v = pool;
      std::shuffle(v.begin(), v.end(), rng);
      v.resize(2 + rng() % 3);
      if (g_rank(*X, v).rank > 1) continue;
      try {
        certificate_ok(construct_rank1(X, v), v, o, "random rank1");
      } catch (const Refusal&) {
      }
    }
  }
  unsigned checked = 0;
  for (const auto& c : corpus) {
    const auto W = wild_points(c);
    if (!check_necessary_condition(*c.X, W)) o.fail("certificate with wild set {" + format_place_list(W) + "}");
    ++checked;
  }
  const auto X = line(5);
  bool refused = false;
  try {
    construct_rank1(X, parse_place_list(*X, "t"));
  } catch (const Refusal&) {
    refused = true;
  }
  if (!refused) o.fail("{(t)} over F_5 was not refused");
  if (o.ok) o.detail << checked << " verified certificates satisfy |W| >= 2 rk G; {(t)} refused";
  return o;
}

bool has_failed_check(const VerificationReport& R, const std::string& prefix) {
  for (const auto& c : R.checks)
    if (!c.ok && c.name.rfind(prefix, 0) == 0) return true;
  return false;
}

// 7. Negative controls.
Outcome criterion7() {
  Outcome o;
  const auto X3 = line(3);
  const auto S3 = parse_place_list(*X3, "t, t-1");
  try {
    construct_rank1_pair(X3, S3[0], S3[1]);
    o.fail("-1 non-square at degree-1 places of F_3 was not refused");
  } catch (const Refusal&) {
  }

  const auto X = line(5);
  const auto S = parse_place_list(*X, "t, t-1");
  auto small = construct_rank1_pair(X, S[0], S[1]);
  small.local_maps[0] = LocalMap::identity(S[0]);
  small.local_maps[0].target = small.T[0];
  if (!has_failed_check(verify(small), "SE4")) o.fail("corrupted small equivalence passed SE4");

  Certificate pe;
  pe.kind = CertKind::Pre;
  pe.X = X;
  pe.S = pe.T = S;
  const auto two = FieldElement::constant(X->field(), X->field()->from_int(2));
  const auto mu = FieldElement::from_poly(S[0].base()) * FieldElement::from_poly(S[1].base());
  pe.basis = {two, mu};
  pe.images = {mu, two};
  for (const auto& p : S) {
    const LocalClass a = local_square_class(*X, two, p), b = local_square_class(*X, mu, p);
    pe.local_maps.push_back(LocalMap::from_pairs(p, p, a, b, b, a));
  }
  if (!verify(pe).ok()) o.fail("control pre-equivalence does not verify");
  pe.local_maps[1] = LocalMap::identity(S[1]);
  if (!has_failed_check(verify(pe), "PE4")) o.fail("corrupted pre-equivalence passed PE4");

  auto expect_not_principal = [&](const Curve& C, const Divisor& D, const std::string& name) {
    try {
      C.function_with_principal_divisor(D);
      o.fail(name + " accepted");
    } catch (const NotPrincipal&) {
    }
  };
  Divisor D;
  D.add(S[0], 1);
  expect_not_principal(*X, D, "degree-1 divisor on P^1");
  const auto E = legendre();
  Divisor DE;
  DE.add(parse_place(*E, "(t; ramified)"), 1);
  DE.add(E->infinity(), -1);
  expect_not_principal(*E, DE, "(0,0) - O on the Legendre curve");
  if (o.ok) o.detail << "F_3 refusal, SE4 and PE4 corruptions rejected, non-principal divisors rejected";
  return o;
}

// Hand-rolled arithmetic on y^2 = x^3 + a x + b over F_p for the doubling oracle.
struct ModCurve {
  long p, a, b;
  struct Pt {
    bool inf = true;
    long x = 0, y = 0;
    bool operator==(const Pt&) const = default;
  };
  long md(long v) const { return ((v % p) + p) % p; }
  long inv(long v) const {
    long r = 1, e = p - 2, base = md(v);
    for (; e; e >>= 1, base = base * base % p)
      if (e & 1) r = r * base % p;
    return r;
  }
  Pt add(const Pt& P, const Pt& Q) const {
    if (P.inf) return Q;
    if (Q.inf) return P;
    long l;
    if (P.x == Q.x) {
      if (md(P.y + Q.y) == 0) return {};
      l = md((3 * P.x * P.x + a) * inv(2 * P.y));
    } else {
      l = md((Q.y - P.y) * inv(Q.x - P.x));
    }
    const long x = md(l * l - P.x - Q.x);
    return {false, x, md(l * (P.x - x) - P.y)};
  }
  std::vector<Pt> points() const {
    std::vector<Pt> v{Pt{}};
    for (long x = 0; x < p; ++x)
      for (long y = 0; y < p; ++y)
        if (md(y * y - (x * x * x + a * x + b)) == 0) v.push_back({false, x, y});
    return v;
  }
};

// 8. Oracle equivalences.
Outcome criterion8(std::mt19937_64& rng) {
  Outcome o;
  unsigned nchar = 0;
  for (unsigned q : {3u, 5u, 7u, 9u}) {
    const auto F = FiniteField::make(q);
    std::set<Elt> squares;
    for (Elt x = 1; x < q; ++x) squares.insert(F->mul(x, x));
    for (Elt x = 1; x < q; ++x, ++nchar)
      if ((F->quad_char(x) == 1) != squares.count(x)) o.fail("quad_char over F_" + std::to_string(q));
  }

  unsigned ndiv = 0;
  for (auto [p, a, b] : {std::tuple<long, long, long>{5, -1, 0}, {5, 1, 1}, {7, 2, 3}}) {
    const ModCurve M{p, a, b};
    const auto pts = M.points();
    std::set<std::pair<long, long>> doubles;  // x, y; (-1, -1) for O
    for (const auto& P : pts) {
      const auto D = M.add(P, P);
      doubles.insert(D.inf ? std::pair{-1L, -1L} : std::pair{D.x, D.y});
    }
    const auto F = FiniteField::make(static_cast<unsigned>(p));
    const auto X = Curve::elliptic(wt::P(F, {b, a, 0, 1}));
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i; j < pts.size(); ++j, ++ndiv) {
        const auto S = M.add(pts[i], pts[j]);
        const bool oracle = doubles.count(S.inf ? std::pair{-1L, -1L} : std::pair{S.x, S.y});
        Divisor D;
        for (const auto* P : {&pts[i], &pts[j]}) {
          const Place pl = P->inf ? X->infinity()
                                  : X->point_place(Point::affine(F->from_int(P->x), F->from_int(P->y)));
          D.add(pl, 1);
        }
        D.add(X->infinity(), -2);
        if (X->two_divisible(D) != oracle || two_divisible_brute_force(*X, D) != oracle)
          o.fail("two_divisible on y^2 = x^3 + " + std::to_string(a) + "x + " + std::to_string(b) + " mod " +
                 std::to_string(p));
      }
  }

  unsigned npairs = 0;
  for (unsigned q : {5u, 9u}) {
    std::vector<CurvePtr> curves{line(q)};
    if (q == 5) curves.push_back(legendre());
    unsigned here = 0;
    for (const auto& X : curves) {
      std::vector<Place> div;
      X->for_each_place(4, [&](const Place& p) {
        Divisor D;
        D.add(p, 1);
        if (X->two_divisible(D)) div.push_back(p);
        return div.size() < 12;
      });
      std::shuffle(div.begin(), div.end(), rng);
      for (std::size_t i = 0; i < div.size(); ++i)
        for (std::size_t j = i + 1; j < div.size() && here < 30; ++j, ++here)
          if (smile(*X, div[i], div[j]) != smile(*X, div[j], div[i]))
            o.fail("smile asymmetric on " + format_place(div[i]) + ", " + format_place(div[j]));
    }
    if (here < 20) o.fail("fewer than 20 2-divisible pairs over F_" + std::to_string(q));
    npairs += here;
  }
  if (o.ok)
    o.detail << nchar << " characters, " << ndiv << " divisor classes on three curves, " << npairs
             << " smile pairs";
  return o;
}

}  // namespace

int main() {
  std::mt19937_64 rng(20240601);
  const auto R = rank_sets(rng);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"reciprocity", [&] { return criterion1(rng); }},
      {"rank formula", [&] { return criterion2(R); }},
      {"independence criterion", [&] { return criterion3(R); }},
      {"construction round trips", [] { return criterion4(); }},
      {"flagship rank-2 instance", [] { return criterion5(); }},
      {"necessary-condition gate", [&] { return criterion6(rng); }},
      {"negative controls", [] { return criterion7(); }},
      {"oracle equivalences", [&] { return criterion8(rng); }},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.ok;
    std::cout << "criterion " << i + 1 << " " << (o.ok ? "PASS" : "FAIL") << " " << criteria[i].first << ": "
              << o.detail.str() << std::endl;
  }
  return all ? 0 : 1;
}
