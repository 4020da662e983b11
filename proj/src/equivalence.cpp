#include "wildsets/equivalence.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "wildsets/errors.hpp"
#include "wildsets/text.hpp"

namespace wildsets {

std::optional<std::size_t> Certificate::index_of(const Place& p) const {
  for (std::size_t i = 0; i < S.size(); ++i)
    if (S[i] == p) return i;
  return std::nullopt;
}

std::vector<Place> Certificate::image_of(const std::vector<Place>& places) const {
  std::vector<Place> out;
  for (const auto& p : places) {
    auto i = index_of(p);
    if (!i) throw PreconditionError("place " + format_place(p) + " is not in the domain");
    out.push_back(T[*i]);
  }
  return out;
}

std::vector<Place> Certificate::preimage_of(const std::vector<Place>& places) const {
  std::vector<Place> out;
  for (const auto& p : places) {
    auto it = std::find(T.begin(), T.end(), p);
    if (it == T.end()) throw PreconditionError("place " + format_place(p) + " is not in the image");
    out.push_back(S[static_cast<std::size_t>(it - T.begin())]);
  }
  return out;
}

bool VerificationReport::ok() const { return failure() == nullptr; }

const Check* VerificationReport::failure() const {
  for (const auto& c : checks)
    if (!c.ok) return &c;
  return nullptr;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.ok ? "ok   " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  out << "wild set: {" << format_place_list(wild) << "}\n";
  out << (ok() ? "verified" : "NOT verified") << "\n";
  return out.str();
}

namespace {

FieldElement minus_one(const Curve& X) { return FieldElement::constant(X.field(), X.field()->minus_one()); }

std::vector<BitVec> local_vectors(const Curve& X, const std::vector<FieldElement>& xs, const std::vector<Place>& P) {
  std::vector<BitVec> out;
  for (const auto& x : xs) out.push_back(local_vector(X, x, P));
  return out;
}

std::size_t rank_of(const std::vector<BitVec>& vecs, std::size_t dim) {
  if (vecs.empty()) return 0;
  return f2_rank(BitMatrix::from_rows(dim, vecs));
}

bool distinct(const std::vector<Place>& P) { return std::set<Place>(P.begin(), P.end()).size() == P.size(); }

bool preserves_token_symbols(const LocalMap& m, int chi_s, int chi_t) {
  const LocalClass all[4] = {LocalClass::One, LocalClass::U, LocalClass::Pi, LocalClass::UPi};
  for (LocalClass a : all)
    for (LocalClass b : all)
      if (hilbert_symbol(a, b, chi_s) != hilbert_symbol(m.apply(a), m.apply(b), chi_t)) return false;
  return true;
}

struct Recorder {
  VerificationReport& R;
  void operator()(const std::string& name, bool ok, const std::string& detail = "") {
    R.checks.push_back({name, ok, detail});
  }
};

// Checks shared by both certificate kinds. Returns false when the data is too
// malformed to continue.
bool common_checks(const Certificate& c, Recorder& add, const std::string& tag) {
  std::string why;
  if (!c.X) why = "no curve";
  else if (c.S.empty()) why = "empty domain";
  else if (c.T.size() != c.S.size()) why = "S and T differ in length";
  else if (c.local_maps.size() != c.S.size()) why = "one local map per place of S is required";
  else if (c.images.size() != c.basis.size()) why = "basis and images differ in length";
  else if (!distinct(c.S)) why = "repeated place in S";
  if (why.empty()) {
    try {
      for (const auto& p : c.S) c.X->validate(p);
      for (const auto& p : c.T) c.X->validate(p);
    } catch (const Error& e) {
      why = e.what();
    }
  }
  if (why.empty())
    for (std::size_t i = 0; i < c.S.size(); ++i)
      if (!(c.local_maps[i].source == c.S[i]) || !(c.local_maps[i].target == c.T[i]))
        why = "local map " + std::to_string(i) + " does not go from S to T";
  add("well-formed", why.empty(), why);
  if (!why.empty()) return false;
  add(tag + "1 (T injective)", distinct(c.T));
  bool mem = true;
  std::string d;
  for (std::size_t k = 0; k < c.basis.size(); ++k) {
    if (!in_sing(*c.X, c.basis[k], c.S)) mem = false, d = "basis element " + std::to_string(k);
    if (!in_sing(*c.X, c.images[k], c.T)) mem = false, d = "image " + std::to_string(k);
  }
  add("basis and images in Sing", mem, mem ? "" : d + " has odd order outside the removed set");
  return true;
}

void map_checks(const Certificate& c, Recorder& add, const std::string& tag) {
  const Curve& X = *c.X;
  bool iso = true;
  for (const auto& m : c.local_maps) iso = iso && m.is_isomorphism();
  add(tag + "3 (local maps are isomorphisms)", iso);

  bool diagram = true;
  std::string d;
  for (std::size_t k = 0; k < c.basis.size() && diagram; ++k)
    for (std::size_t i = 0; i < c.S.size(); ++i) {
      const LocalClass a = c.local_maps[i].apply(local_square_class(X, c.basis[k], c.S[i]));
      const LocalClass b = local_square_class(X, c.images[k], c.T[i]);
      if (a != b) {
        diagram = false;
        d = "basis element " + std::to_string(k) + " at " + format_place(c.S[i]) + ": local map gives " +
            to_string(a) + ", image has " + to_string(b);
        break;
      }
    }
  add(tag + "4 (local and global maps agree)", diagram, d);

  bool sym = true, m1 = true;
  const auto mo = minus_one(X);
  for (std::size_t i = 0; i < c.S.size(); ++i) {
    const int cs = minus_one_char(X, c.S[i]), ct = minus_one_char(X, c.T[i]);
    if (!preserves_token_symbols(c.local_maps[i], cs, ct)) sym = false;
    if (c.local_maps[i].apply(local_square_class(X, mo, c.S[i])) != local_square_class(X, mo, c.T[i])) m1 = false;
  }
  add("local maps preserve Hilbert symbols", sym);
  add("local maps send -1 to -1", m1);
}

void wild_checks(const Certificate& c, VerificationReport& R, Recorder& add) {
  R.wild = wild_points_unchecked(c);
  if (c.claimed_wild) {
    const std::set<Place> a(R.wild.begin(), R.wild.end()), b(c.claimed_wild->begin(), c.claimed_wild->end());
    add("claimed wild set", a == b, a == b ? "" : "computed {" + format_place_list(R.wild) + "}");
  }
  if (!R.wild.empty()) {
    const unsigned g = g_rank(*c.X, R.wild).rank;
    add("necessary condition |W| >= 2 rk G", R.wild.size() >= 2 * g,
        "|W| = " + std::to_string(R.wild.size()) + ", rk G = " + std::to_string(g));
  }
}

}  // namespace

VerificationReport verify_small_equivalence(const Certificate& c) {
  VerificationReport R;
  Recorder add{R};
  if (c.kind != CertKind::Small) {
    add("kind", false, "not a small equivalence");
    return R;
  }
  if (!common_checks(c, add, "SE")) return R;
  const Curve& X = *c.X;
  const unsigned ps = pic_two_rank_direct(X, c.S), pt = pic_two_rank_direct(X, c.T);
  add("rk Pic(X\\S) = 0 on both sides", ps == 0 && pt == 0,
      "source " + std::to_string(ps) + ", target " + std::to_string(pt));
  if (ps != 0 || pt != 0) return R;

  const std::size_t n = c.S.size(), dim = sing_space(c.X, c.S).rank();
  const auto I = local_vectors(X, c.basis, c.S), J = local_vectors(X, c.images, c.T);
  const bool se2 = c.basis.size() == dim && rank_of(I, 2 * n) == dim && rank_of(J, 2 * n) == dim &&
                   sing_space(c.X, c.T).rank() == dim;
  add("SE2 (t is an isomorphism of Sing)", se2,
      "rk Sing = " + std::to_string(dim) + ", basis size " + std::to_string(c.basis.size()));
  map_checks(c, add, "SE");

  bool spot = true;
  std::string d;
  for (std::size_t k = 0; k < c.basis.size() && spot; ++k)
    for (std::size_t l = k; l < c.basis.size() && spot; ++l)
      for (std::size_t i = 0; i < n; ++i)
        if (hilbert_symbol(X, c.basis[k], c.basis[l], c.S[i]) !=
            hilbert_symbol(X, c.images[k], c.images[l], c.T[i])) {
          spot = false;
          d = "pair (" + std::to_string(k) + ", " + std::to_string(l) + ") at " + format_place(c.S[i]);
          break;
        }
  add("Hilbert symbols preserved on basis pairs", spot, d);

  bool global = false;
  if (se2) {
    const auto mo = minus_one(X);
    if (auto x = f2_combination(I, 2 * n, local_vector(X, mo, c.S)))
      global = X.is_square(combine(c.basis, *x, X.field()) * mo) && X.is_square(combine(c.images, *x, X.field()) * mo);
  }
  add("t(-1) = -1", global);
  wild_checks(c, R, add);
  return R;
}

VerificationReport verify_pre_equivalence(const Certificate& c) {
  VerificationReport R;
  Recorder add{R};
  if (c.kind != CertKind::Pre) {
    add("kind", false, "not a pre-equivalence");
    return R;
  }
  if (!common_checks(c, add, "PE")) return R;
  const Curve& X = *c.X;
  const std::size_t n = c.S.size();
  const auto singS = sing_space(c.X, c.S), singT = sing_space(c.X, c.T);
  const std::size_t rI = rank_of(local_vectors(X, singS.gens, c.S), 2 * n);
  const std::size_t rJ = rank_of(local_vectors(X, singT.gens, c.T), 2 * n);
  const auto I = local_vectors(X, c.basis, c.S), J = local_vectors(X, c.images, c.T);
  const bool pe2 = rI == rJ && c.basis.size() == rI && rank_of(I, 2 * n) == rI && rank_of(J, 2 * n) == rJ;
  add("PE2 (isomorphism of Sing/Delta)", pe2,
      "quotient ranks " + std::to_string(rI) + " and " + std::to_string(rJ) + ", basis size " +
          std::to_string(c.basis.size()));

  bool inj = true;
  for (const auto* side : {&c.S, &c.T}) {
    const auto delta = delta_space(c.X, *side);
    for (const auto& x : delta.gens)
      for (const auto& p : *side) inj = inj && is_local_square(X, x, p);
    const std::size_t r = side == &c.S ? rI : rJ;
    inj = inj && (side == &c.S ? singS : singT).rank() == r + delta.rank();
  }
  add("local map on Sing has kernel Delta", inj);
  map_checks(c, add, "PE");

  bool global = false;
  if (pe2) {
    const auto mo = minus_one(X);
    if (auto x = f2_combination(I, 2 * n, local_vector(X, mo, c.S)))
      global = local_vector(X, combine(c.images, *x, X.field()), c.T) == local_vector(X, mo, c.T);
  }
  add("t(-1) = -1 modulo Delta", global);
  wild_checks(c, R, add);
  return R;
}

VerificationReport verify(const Certificate& c) {
  return c.kind == CertKind::Pre ? verify_pre_equivalence(c) : verify_small_equivalence(c);
}

std::vector<Place> wild_points_unchecked(const Certificate& c) {
  std::vector<Place> out;
  for (std::size_t i = 0; i < c.S.size() && i < c.local_maps.size(); ++i)
    if (c.local_maps[i].is_wild()) out.push_back(c.S[i]);
  return out;
}

std::vector<Place> wild_points(const Certificate& c) {
  const auto R = verify(c);
  if (!R.ok()) throw PreconditionError("certificate does not verify: " + R.failure()->name);
  return R.wild;
}

Certificate identity_small(const CurvePtr& X, const std::vector<Place>& S) {
  Certificate c;
  c.kind = CertKind::Small;
  c.X = X;
  c.S = c.T = S;
  c.basis = c.images = sing_space(X, S).gens;
  for (const auto& p : S) c.local_maps.push_back(LocalMap::identity(p));
  c.claimed_wild = std::vector<Place>{};
  return c;
}

Certificate inverse(const Certificate& c) {
  Certificate r;
  r.kind = c.kind;
  r.X = c.X;
  r.S = c.T;
  r.T = c.S;
  r.basis = c.images;
  r.images = c.basis;
  for (const auto& m : c.local_maps) r.local_maps.push_back(m.inverse());
  r.claimed_wild = c.image_of(wild_points_unchecked(c));
  return r;
}

Certificate compose(const Certificate& c1, const Certificate& c2) {
  if (c1.kind != CertKind::Small || c2.kind != CertKind::Small)
    throw PreconditionError("only small equivalences compose");
  if (std::set<Place>(c1.T.begin(), c1.T.end()) != std::set<Place>(c2.S.begin(), c2.S.end()))
    throw PreconditionError("domain of the second certificate differs from the image of the first");
  const auto w1 = wild_points_unchecked(c1);
  const auto w2 = c1.preimage_of(wild_points_unchecked(c2));
  for (const auto& p : w2)
    if (std::find(w1.begin(), w1.end(), p) != w1.end())
      throw PreconditionError("wild sets are not disjoint at " + format_place(p));

  const Curve& X = *c1.X;
  Certificate r;
  r.kind = CertKind::Small;
  r.X = c1.X;
  r.S = c1.S;
  for (std::size_t i = 0; i < c1.S.size(); ++i) {
    const std::size_t j = *c2.index_of(c1.T[i]);
    r.T.push_back(c2.T[j]);
    r.local_maps.push_back(compose(c1.local_maps[i], c2.local_maps[j]));
  }
  const std::size_t n = c2.S.size();
  const auto vecs = local_vectors(X, c2.basis, c2.S);
  r.basis = c1.basis;
  for (const auto& y : c1.images) {
    auto x = f2_combination(vecs, 2 * n, local_vector(X, y, c2.S));
    if (!x || !X.is_square(y / combine(c2.basis, *x, X.field())))
      throw InternalError("image is not in the span of the second basis");
    r.images.push_back(combine(c2.images, *x, X.field()));
  }
  std::vector<Place> wild;
  for (const auto& p : r.S)
    if (std::find(w1.begin(), w1.end(), p) != w1.end() || std::find(w2.begin(), w2.end(), p) != w2.end())
      wild.push_back(p);
  r.claimed_wild = wild;
  const auto R = verify_small_equivalence(r);
  if (!R.ok()) throw InternalError("composition failed verification: " + R.failure()->name);
  return r;
}

namespace {

// A function with odd order at r, even order outside S + {r}; needs rk Pic(X\S) = 0.
FieldElement odd_at(const Curve& X, const std::vector<Place>& S, const Place& r) {
  std::vector<BitVec> vecs;
  for (const auto& p : S) vecs.push_back(X.pic2_vector(p));
  auto v = f2_combination(vecs, X.pic_two_rank(), X.pic2_vector(r));
  if (!v) throw PreconditionError("class of " + format_place(r) + " is not in the span of the removed set");
  Divisor D;
  D.add(r, 1);
  for (std::size_t i = 0; i < S.size(); ++i)
    if (v->get(i)) D.add(S[i], 1);
  return X.two_divisibility_witness(D).square_class_rep();
}

BitVec concat_classes(const std::vector<LocalClass>& cls) {
  BitVec v(2 * cls.size());
  for (std::size_t i = 0; i < cls.size(); ++i) {
    v.set(2 * i, has_u(cls[i]));
    v.set(2 * i + 1, has_pi(cls[i]));
  }
  return v;
}

}  // namespace

Certificate enlarge(const Certificate& c, const Place& r, const PlacePredicate& accept) {
  if (c.kind != CertKind::Small) throw PreconditionError("only small equivalences can be enlarged");
  const Curve& X = *c.X;
  X.validate(r);
  if (c.index_of(r)) throw PreconditionError(format_place(r) + " is already in the domain");
  const std::size_t n = c.S.size();
  const FieldElement rho = odd_at(X, c.S, r);
  std::vector<LocalClass> want;
  for (std::size_t i = 0; i < n; ++i) want.push_back(c.local_maps[i].apply(local_square_class(X, rho, c.S[i])));
  const BitVec target = concat_classes(want);
  std::vector<bool> ubits;
  for (const auto& b : c.basis) ubits.push_back(!is_local_square(X, b, r));
  const auto J = local_vectors(X, c.images, c.T);
  const LocalClass cr = local_square_class(X, rho, r);

  std::optional<Certificate> found;
  auto attempt = [&](const Place& r2) {
    if (std::find(c.T.begin(), c.T.end(), r2) != c.T.end()) return true;
    if (accept && !accept(r2)) return true;
    for (std::size_t k = 0; k < c.images.size(); ++k)
      if (has_u(local_square_class(X, c.images[k], r2)) != ubits[k]) return true;
    const FieldElement rho2 = odd_at(X, c.T, r2);
    auto x = f2_combination(J, 2 * n, target ^ local_vector(X, rho2, c.T));
    if (!x) return true;
    Certificate e = c;
    e.S.push_back(r);
    e.T.push_back(r2);
    e.basis.push_back(rho);
    e.images.push_back((rho2 * combine(c.images, *x, X.field())).square_class_rep());
    const LocalClass cr2 = local_square_class(X, e.images.back(), r2);
    e.local_maps.push_back(LocalMap::from_pairs(r, r2, LocalClass::U, LocalClass::U, cr, cr2));
    e.claimed_wild = wild_points_unchecked(c);
    if (!verify_small_equivalence(e).ok()) return true;
    found = std::move(e);
    return false;
  };
  if (attempt(r)) X.for_each_place(degree_cap(), [&](const Place& p) { return p == r || attempt(p); });
  if (!found) throw SearchExhausted("no image for " + format_place(r) + " up to the degree cap");
  return *found;
}

std::pair<Certificate, Certificate> align_for_composition(const Certificate& c1, const Certificate& c2) {
  Certificate a = c2;
  for (const auto& p : c1.T)
    if (!a.index_of(p)) a = enlarge(a, p);
  Certificate b = inverse(c1);
  for (const auto& p : c2.S)
    if (!b.index_of(p)) b = enlarge(b, p);
  return {inverse(b), a};
}

namespace {

// A basis of Delta(X\S) that starts with -1 whenever -1 lies in it.
std::vector<FieldElement> delta_basis(const CurvePtr& X, const std::vector<Place>& S) {
  const auto gens = delta_space(X, S).gens;
  const auto mo = minus_one(*X);
  bool contains = !X->is_square(mo);
  for (const auto& p : S) contains = contains && is_local_square(*X, mo, p);
  if (!contains) return gens;
  std::vector<FieldElement> out{mo};
  for (const auto& g : gens) {
    if (out.size() == gens.size()) break;
    out.push_back(g);
    if (!independent_mod_squares(*X, out)) out.pop_back();
  }
  return out;
}

// Places outside `skip` whose u-bits against `lams` are the unit vectors,
// optionally with a prescribed character of -1.
std::vector<Place> dual_places(const Curve& X, const std::vector<FieldElement>& lams, const std::set<Place>& skip,
                               const std::vector<int>& chi) {
  const std::size_t m = lams.size();
  std::vector<std::optional<Place>> found(m);
  std::size_t missing = m;
  if (m == 0) return {};
  X.for_each_place(degree_cap(), [&](const Place& p) {
    if (skip.count(p)) return true;
    int hot = -1;
    for (std::size_t i = 0; i < m; ++i) {
      if (!is_local_square(X, lams[i], p)) {
        if (hot >= 0) return true;
        hot = static_cast<int>(i);
      }
    }
    if (hot < 0 || found[static_cast<std::size_t>(hot)]) return true;
    if (!chi.empty() && minus_one_char(X, p) != chi[static_cast<std::size_t>(hot)]) return true;
    found[static_cast<std::size_t>(hot)] = p;
    return --missing > 0;
  });
  if (missing > 0) throw SearchExhausted("auxiliary places not found up to the degree cap");
  std::vector<Place> out;
  for (const auto& p : found) out.push_back(*p);
  return out;
}

void square_at(std::vector<FieldElement>& mus, const std::vector<FieldElement>& lams, const std::vector<Place>& qs,
               const Curve& X) {
  for (auto& mu : mus) {
    for (std::size_t i = 0; i < qs.size(); ++i)
      if (!is_local_square(X, mu, qs[i])) mu *= lams[i];
    mu = mu.square_class_rep();
  }
}

}  // namespace

Certificate extend_pre_equivalence(const Certificate& pe, const std::vector<Place>& avoid) {
  const auto R = verify_pre_equivalence(pe);
  if (!R.ok()) throw PreconditionError("pre-equivalence does not verify: " + R.failure()->name);
  const Curve& X = *pe.X;
  const unsigned gs = g_rank(X, pe.S).rank, gt = g_rank(X, pe.T).rank;
  if (gs != gt)
    throw PreconditionError("rk G differs on source and target (" + std::to_string(gs) + " vs " +
                            std::to_string(gt) + ")");
  const auto lams = delta_basis(pe.X, pe.S), lams2 = delta_basis(pe.X, pe.T);
  if (lams.size() != lams2.size()) throw InternalError("Delta ranks differ on source and target");

  std::set<Place> skip(pe.S.begin(), pe.S.end());
  skip.insert(avoid.begin(), avoid.end());
  const auto qs = dual_places(X, lams, skip, {});
  std::vector<int> chi;
  for (const auto& q : qs) chi.push_back(minus_one_char(X, q));
  std::set<Place> skip2(pe.T.begin(), pe.T.end());
  skip2.insert(avoid.begin(), avoid.end());
  const auto qs2 = dual_places(X, lams2, skip2, chi);

  auto mus = pe.basis, mus2 = pe.images;
  square_at(mus, lams, qs, X);
  square_at(mus2, lams2, qs2, X);

  Certificate c;
  c.kind = CertKind::Small;
  c.X = pe.X;
  c.S = pe.S;
  c.T = pe.T;
  c.local_maps = pe.local_maps;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    c.S.push_back(qs[i]);
    c.T.push_back(qs2[i]);
    c.local_maps.push_back({qs[i], qs2[i], LocalClass::U, LocalClass::Pi, std::nullopt});
  }
  c.basis = lams;
  c.basis.insert(c.basis.end(), mus.begin(), mus.end());
  c.images = lams2;
  c.images.insert(c.images.end(), mus2.begin(), mus2.end());
  c.claimed_wild = R.wild;
  const auto V = verify_small_equivalence(c);
  if (!V.ok()) throw InternalError("extension failed verification: " + V.failure()->name + " " + V.failure()->detail);
  return c;
}

bool check_necessary_condition(const Curve& X, const std::vector<Place>& S) {
  if (S.empty()) return true;
  return S.size() >= 2 * g_rank(X, S).rank;
}

RankPreservationReport check_rank_preservation(const Certificate& c) {
  RankPreservationReport r;
  r.g_source = g_rank(*c.X, c.S).rank;
  r.g_target = g_rank(*c.X, c.T).rank;
  r.sing_images = true;
  for (std::size_t k = 0; k < c.basis.size(); ++k)
    r.sing_images = r.sing_images && in_sing(*c.X, c.basis[k], c.S) && in_sing(*c.X, c.images[k], c.T);
  r.delta_ranks = delta_space(c.X, c.S).rank() == delta_space(c.X, c.T).rank();
  r.ok = r.g_source == r.g_target && r.sing_images && r.delta_ranks;
  return r;
}

}  // namespace wildsets
