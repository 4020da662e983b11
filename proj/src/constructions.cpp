#include "wildsets/constructions.hpp"

#include <algorithm>
#include <set>

#include "wildsets/errors.hpp"
#include "wildsets/text.hpp"

namespace wildsets {

namespace {

bool two_div(const Curve& X, const Place& p) {
  Divisor D;
  D.add(p, 1);
  return X.two_divisible(D);
}

void require_minus_one_square(const Curve& X, const std::vector<Place>& S) {
  for (const auto& p : S)
    if (minus_one_char(X, p) != 1) throw Refusal("-1 is not a local square at " + format_place(p));
}

std::vector<Place> join(std::vector<Place> a, const std::vector<Place>& b) {
  for (const auto& p : b)
    if (std::find(a.begin(), a.end(), p) == a.end()) a.push_back(p);
  return a;
}

void note(Notes* notes, const std::string& s) {
  if (notes) notes->push_back(s);
}

// Tame enlargement by each place. The class in Pic X / 2 Pic X of each new
// image is determined by the certificate, so no preference is imposed.
Certificate enlarge_by(Certificate c, const std::vector<Place>& places) {
  for (const auto& r : places) c = enlarge(c, r);
  return c;
}

Certificate then(const Certificate& c1, const Certificate& c2) {
  auto [a, b] = align_for_composition(c1, c2);
  return compose(a, b);
}

Certificate construct_by_rank(const CurvePtr& X, const std::vector<Place>& S, const std::vector<Place>& avoid,
                              Notes* notes) {
  const unsigned g = g_rank(*X, S).rank;
  if (g == 0) return construct_rank0(X, S, avoid);
  if (g == 1 && S.size() >= 2) return construct_rank1(X, S, avoid, notes);
  throw InternalError("image set {" + format_place_list(S) + "} has rank " + std::to_string(g));
}

void check_result(const Certificate& c, const std::vector<Place>& want) {
  const auto R = verify_small_equivalence(c);
  if (!R.ok()) throw InternalError("constructed certificate fails " + R.failure()->name);
  if (std::set<Place>(R.wild.begin(), R.wild.end()) != std::set<Place>(want.begin(), want.end()))
    throw InternalError("constructed certificate has wild set {" + format_place_list(R.wild) + "}");
}

Certificate rank0_single(const CurvePtr& X, const Place& q, const std::vector<Place>& avoid) {
  Divisor D;
  D.add(q, 1);
  const FieldElement lam = X->two_divisibility_witness(D).square_class_rep();
  const LocalClass c = local_square_class(*X, lam, q);
  Certificate pe;
  pe.kind = CertKind::Pre;
  pe.X = X;
  pe.S = pe.T = {q};
  pe.basis = pe.images = {lam};
  if (c == LocalClass::Pi) pe.local_maps = {{q, q, LocalClass::UPi, LocalClass::Pi, std::nullopt}};
  else if (c == LocalClass::UPi) pe.local_maps = {{q, q, LocalClass::Pi, LocalClass::U, std::nullopt}};
  else throw InternalError("witness has even order at its place");
  pe.claimed_wild = std::vector<Place>{q};
  return extend_pre_equivalence(pe, avoid);
}

// An element of Sing(X) that is a non-square unit at p.
FieldElement nonsquare_at(const Curve& X, const Place& p) {
  const auto base = X.sing_complete_basis();
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << base.size()); ++m) {
    FieldElement x = FieldElement::one(X.field());
    for (std::size_t i = 0; i < base.size(); ++i)
      if ((m >> i) & 1u) x *= base[i];
    if (local_square_class(X, x, p) == LocalClass::U) return x.square_class_rep();
  }
  throw InternalError("Sing(X) is a local square at " + format_place(p));
}

const LocalClass kWild[4][2] = {{LocalClass::Pi, LocalClass::U},
                                {LocalClass::Pi, LocalClass::UPi},
                                {LocalClass::UPi, LocalClass::U},
                                {LocalClass::UPi, LocalClass::Pi}};

}  // namespace

Certificate construct_rank0(const CurvePtr& X, const std::vector<Place>& S, const std::vector<Place>& avoid) {
  check_place_set(*X, S);
  for (const auto& p : S) {
    if (!two_div(*X, p)) throw Refusal("class of " + format_place(p) + " is not 2-divisible");
    if (minus_one_char(*X, p) != 1) throw InternalError("-1 is not a square at a 2-divisible place");
  }
  const auto all = join(avoid, S);
  Certificate c1 = rank0_single(X, S[0], all);
  if (S.size() > 1) {
    const std::vector<Place> rest(S.begin() + 1, S.end());
    c1 = enlarge_by(c1, rest);
    const auto imgs = c1.image_of(rest);
    c1 = then(c1, construct_by_rank(X, imgs, join(all, imgs), nullptr));
  }
  check_result(c1, S);
  return c1;
}

Certificate construct_rank1_pair(const CurvePtr& X, const Place& p, const Place& q, const std::vector<Place>& avoid) {
  check_place_set(*X, {p, q});
  const unsigned g = g_rank(*X, {p, q}).rank;
  if (g != 1) throw Refusal("rk G of the pair is " + std::to_string(g) + ", not 1");
  require_minus_one_square(*X, {p, q});
  const bool dp = two_div(*X, p), dq = two_div(*X, q);
  const Place a = dp ? q : p, b = dp ? p : q;
  const FieldElement lam = nonsquare_at(*X, a);
  Certificate pe;
  pe.kind = CertKind::Pre;
  pe.X = X;
  pe.claimed_wild = std::vector<Place>{a, b};
  if (dp || dq) {
    Divisor D;
    D.add(b, 1);
    FieldElement mu = X->two_divisibility_witness(D);
    if (!is_local_square(*X, mu, a)) mu *= lam;
    mu = mu.square_class_rep();
    if (!is_local_square(*X, lam, b)) throw InternalError("Sing(X) is not square at a 2-divisible place");
    const LocalClass cm = local_square_class(*X, mu, b);
    pe.S = {a, b};
    pe.T = {b, a};
    pe.basis = {lam, mu};
    pe.images = {mu, lam};
    pe.local_maps = {LocalMap::from_pairs(a, b, LocalClass::U, cm, LocalClass::Pi, LocalClass::U),
                     LocalMap::from_pairs(b, a, LocalClass::U, LocalClass::Pi, cm, LocalClass::U)};
  } else {
    Divisor D;
    D.add(p, 1);
    D.add(q, 1);
    const FieldElement mu = X->two_divisibility_witness(D).square_class_rep();
    pe.S = pe.T = {p, q};
    pe.basis = {lam, mu};
    pe.images = {mu, lam};
    for (const auto& x : pe.S) {
      const LocalClass cl = local_square_class(*X, lam, x), cm = local_square_class(*X, mu, x);
      pe.local_maps.push_back(LocalMap::from_pairs(x, x, cl, cm, cm, cl));
    }
  }
  Certificate c = extend_pre_equivalence(pe, join(avoid, {p, q}));
  check_result(c, {p, q});
  return c;
}

Certificate construct_rank1_triple(const CurvePtr& X, const Place& p1, const Place& p2, const Place& p3,
                                   const std::vector<Place>& avoid, Notes* notes) {
  const std::vector<Place> S{p1, p2, p3};
  check_place_set(*X, S);
  const unsigned g = g_rank(*X, S).rank;
  if (g != 1) throw Refusal("rk G of the triple is " + std::to_string(g) + ", not 1");
  require_minus_one_square(*X, S);
  const auto all = join(avoid, S);

  for (std::size_t d = 0; d < 3; ++d) {
    if (!two_div(*X, S[d])) continue;
    std::vector<Place> others;
    for (std::size_t i = 0; i < 3; ++i)
      if (i != d) others.push_back(S[i]);
    Certificate c = enlarge_by(construct_rank0(X, {S[d]}, all), others);
    const auto imgs = c.image_of(others);
    c = then(c, construct_by_rank(X, imgs, join(all, imgs), notes));
    check_result(c, S);
    return c;
  }

  const auto src = quotient_basis(X, S);
  std::vector<BitVec> I;
  for (const auto& x : src.gens) I.push_back(local_vector(*X, x, S));
  std::optional<Certificate> pe;
  X->for_each_place(degree_cap(), [&](const Place& p4) {
    if (p4 == p1 || p4 == p2 || std::find(all.begin(), all.end(), p4) != all.end() || !two_div(*X, p4)) return true;
    const std::vector<Place> T{p1, p2, p4};
    const auto dst = quotient_basis(X, T);
    std::vector<BitVec> J;
    for (const auto& x : dst.gens) J.push_back(local_vector(*X, x, T));
    for (int k = 0; k < 64; ++k) {
      std::vector<LocalMap> maps;
      for (std::size_t i = 0; i < 3; ++i) {
        const auto& w = kWild[(k >> (2 * i)) & 3];
        maps.push_back({S[i], T[i], w[0], w[1], std::nullopt});
      }
      std::vector<FieldElement> images;
      for (const auto& x : src.gens) {
        std::vector<LocalClass> cls;
        for (std::size_t i = 0; i < 3; ++i) cls.push_back(maps[i].apply(local_square_class(*X, x, S[i])));
        BitVec w(6);
        for (std::size_t i = 0; i < 3; ++i) {
          w.set(2 * i, has_u(cls[i]));
          w.set(2 * i + 1, has_pi(cls[i]));
        }
        auto y = f2_combination(J, 6, w);
        if (!y) break;
        images.push_back(combine(dst.gens, *y, X->field()));
      }
      if (images.size() != src.gens.size()) continue;
      Certificate c;
      c.kind = CertKind::Pre;
      c.X = X;
      c.S = S;
      c.T = T;
      c.basis = src.gens;
      c.images = images;
      c.local_maps = maps;
      c.claimed_wild = S;
      if (!verify_pre_equivalence(c).ok()) continue;
      note(notes, "triple " + format_place_list(S) + ": auxiliary point " + format_place(p4) + " of degree " + std::to_string(p4.degree()));
      pe = std::move(c);
      return false;
    }
    return true;
  });
  if (!pe) throw SearchExhausted("no auxiliary point for the triple up to the degree cap");
  Certificate c = extend_pre_equivalence(*pe, join(all, pe->T));
  check_result(c, S);
  return c;
}

Certificate construct_rank1(const CurvePtr& X, const std::vector<Place>& S, const std::vector<Place>& avoid,
                            Notes* notes) {
  check_place_set(*X, S);
  const unsigned g = g_rank(*X, S).rank;
  if (g == 0) return construct_rank0(X, S, avoid);
  if (g > 1) throw Refusal("rk G is " + std::to_string(g) + ", more than 1");
  if (S.size() < 2) throw Refusal("necessary condition fails: |S| = 1 < 2 rk G = 2");
  require_minus_one_square(*X, S);
  if (S.size() == 2) return construct_rank1_pair(X, S[0], S[1], avoid);
  if (S.size() == 3) return construct_rank1_triple(X, S[0], S[1], S[2], avoid, notes);
  const auto all = join(avoid, S);
  std::size_t i1 = 0;
  while (two_div(*X, S[i1])) ++i1;
  const std::size_t i2 = i1 == 0 ? 1 : 0;
  std::vector<Place> rest;
  for (std::size_t i = 0; i < S.size(); ++i)
    if (i != i1 && i != i2) rest.push_back(S[i]);
  Certificate c = enlarge_by(construct_rank1_pair(X, S[i1], S[i2], all), rest);
  const auto imgs = c.image_of(rest);
  c = then(c, construct_by_rank(X, imgs, join(all, imgs), notes));
  check_result(c, S);
  return c;
}

Certificate construct_general(const CurvePtr& X, const std::vector<Place>& P, const std::vector<Place>& Q,
                              const std::vector<Place>& avoid, Notes* notes) {
  const std::size_t m = P.size(), n = Q.size();
  if (m == 0) throw Refusal("the independent set P is empty");
  if (m > n) throw Refusal("|P| = " + std::to_string(m) + " exceeds |Q| = " + std::to_string(n));
  const auto S = join(P, Q);
  if (S.size() != m + n) throw PreconditionError("P and Q overlap or repeat a place");
  check_place_set(*X, S);
  if (g_rank(*X, P).rank != m) throw Refusal("classes of P are not independent in Pic X / 2 Pic X");
  for (const auto& q : Q)
    if (!two_div(*X, q)) throw Refusal("class of " + format_place(q) + " is not 2-divisible");
  require_minus_one_square(*X, P);
  for (const auto& q : Q)
    if (minus_one_char(*X, q) != 1) throw InternalError("-1 is not a square at a 2-divisible place");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && !smile(*X, Q[i], Q[j]))
        throw Refusal("smile fails for " + format_place(Q[i]) + " and " + format_place(Q[j]));
  if (m == 1) return construct_rank1(X, S, avoid, notes);

  const auto all = join(avoid, S);
  Certificate c = construct_general(X, {P.begin(), P.end() - 1}, {Q.begin(), Q.begin() + static_cast<long>(m) - 1},
                                    all, notes);
  std::vector<Place> rest{P[m - 1], Q[m - 1]};
  rest.insert(rest.end(), Q.begin() + static_cast<long>(m), Q.end());
  c = enlarge_by(c, rest);
  const auto imgs = c.image_of(rest);
  const std::vector<Place> pair{imgs[0], imgs[1]};
  const unsigned gp = g_rank(*X, pair).rank;
  note(notes, "rank of the image pair {" + format_place_list(pair) + "}: " + std::to_string(gp));
  if (gp > 1) throw InternalError("image pair has rank " + std::to_string(gp));
  if (!two_div(*X, imgs[1])) throw InternalError("image of a 2-divisible place is not 2-divisible");
  const auto all2 = join(all, imgs);
  Certificate c2 = construct_by_rank(X, pair, all2, notes);
  if (n > m) {
    const std::vector<Place> tail(imgs.begin() + 2, imgs.end());
    c2 = enlarge_by(c2, tail);
    const auto tail2 = c2.image_of(tail);
    c2 = then(c2, construct_by_rank(X, tail2, join(all2, tail2), notes));
  }
  c = then(c, c2);
  check_result(c, S);
  return c;
}

}  // namespace wildsets
