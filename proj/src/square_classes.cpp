#include "wildsets/square_classes.hpp"

#include <cstdlib>
#include <numeric>
#include <set>
#include <unordered_set>

#include "wildsets/errors.hpp"

namespace wildsets {

unsigned degree_cap() {
  if (const char* s = std::getenv("WILDSETS_DEGREE_CAP")) {
    const int v = std::atoi(s);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 6;
}

BitVec local_vector(const Curve& X, const FieldElement& x, const std::vector<Place>& places) {
  BitVec v(2 * places.size());
  for (std::size_t i = 0; i < places.size(); ++i) {
    const LocalClass c = local_square_class(X, x, places[i]);
    v.set(2 * i, has_u(c));
    v.set(2 * i + 1, has_pi(c));
  }
  return v;
}

std::vector<LocalClass> local_classes(const Curve& X, const FieldElement& x, const std::vector<Place>& places) {
  std::vector<LocalClass> out;
  for (const auto& p : places) out.push_back(local_square_class(X, x, p));
  return out;
}

void check_place_set(const Curve& X, const std::vector<Place>& S) {
  if (S.empty()) throw PreconditionError("empty set of places");
  std::set<Place> seen;
  for (const auto& p : S) {
    X.validate(p);
    if (!seen.insert(p).second) throw PreconditionError("repeated place");
  }
}

bool in_sing(const Curve& X, const FieldElement& x, const std::vector<Place>& S) {
  const std::set<Place> removed(S.begin(), S.end());
  for (const auto& p : X.candidate_support(x))
    if (!removed.count(p) && X.ord(x, p) % 2 != 0) return false;
  return true;
}

FieldElement combine(const std::vector<FieldElement>& xs, const BitVec& c, const FieldPtr& F) {
  FieldElement r = FieldElement::one(F);
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (c.get(i)) r *= xs[i];
  return r.square_class_rep();
}

namespace {

std::vector<BitVec> pic2_vectors(const Curve& X, const std::vector<Place>& S) {
  std::vector<BitVec> out;
  for (const auto& p : S) out.push_back(X.pic2_vector(p));
  return out;
}

// Kernel of the map F_2^n -> F_2^dim given by the columns vecs.
std::vector<BitVec> column_kernel(const std::vector<BitVec>& vecs, std::size_t dim) {
  if (vecs.empty()) return {};
  return f2_nullspace(BitMatrix::from_rows(dim, vecs).transpose());
}

Divisor pattern_divisor(const std::vector<Place>& S, const BitVec& v) {
  Divisor D;
  for (std::size_t i = 0; i < S.size(); ++i)
    if (v.get(i)) D.add(S[i], 1);
  return D;
}

// Pic X = Z + E via D -> (deg D, class of D - deg D * inf). Pic(X\S) is the
// quotient by the classes of S, and reduces to (Z/M + E) / H with M = g|E|,
// g the gcd of the degrees in S.
class PicModel {
 public:
  PicModel(const Curve& X, long modulus) : M_(modulus) {
    if (X.is_elliptic()) {
      E_ = &X.group();
      n_ = E_->order();
      table_.resize(n_ * n_);
      const auto& pts = E_->points();
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) table_[i * n_ + j] = E_->index_of(E_->add(pts[i], pts[j]));
    }
  }

  std::size_t size() const { return static_cast<std::size_t>(M_) * n_; }
  std::size_t encode(long k, const Point& P) const {
    const long r = ((k % M_) + M_) % M_;
    return static_cast<std::size_t>(r) * n_ + (E_ ? E_->index_of(P) : 0);
  }
  std::size_t add(std::size_t a, std::size_t b) const {
    const std::size_t k = (a / n_ + b / n_) % static_cast<std::size_t>(M_);
    const std::size_t e = E_ ? table_[(a % n_) * n_ + b % n_] : 0;
    return k * n_ + e;
  }
  std::size_t of_place(const Curve& X, const Place& p) const {
    return encode(static_cast<long>(p.degree()), X.is_elliptic() ? X.point_class(p) : Point::infinity());
  }
  std::size_t of_divisor(const Curve& X, const Divisor& D) const {
    std::size_t acc = 0;
    for (const auto& [p, n] : D.coeffs) {
      std::size_t c = of_place(X, p);
      const long k = ((n % static_cast<long>(size())) + static_cast<long>(size())) % static_cast<long>(size());
      for (long i = 0; i < k; ++i) acc = add(acc, c);
    }
    return acc;
  }
  std::vector<std::size_t> doubles() const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < size(); ++a) out.push_back(add(a, a));
    return out;
  }
  std::vector<char> closure(const std::vector<std::size_t>& gens) const {
    std::vector<char> in(size(), 0);
    std::vector<std::size_t> stack{0};
    in[0] = 1;
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t g : gens) {
        const std::size_t b = add(a, g);
        if (!in[b]) {
          in[b] = 1;
          stack.push_back(b);
        }
      }
    }
    return in;
  }

 private:
  long M_;
  const EllipticGroup* E_ = nullptr;
  std::size_t n_ = 1;
  std::vector<std::size_t> table_;
};

long group_order(const Curve& X) { return X.is_elliptic() ? static_cast<long>(X.group().order()) : 1; }

unsigned log2_exact(std::size_t n) {
  unsigned r = 0;
  while ((std::size_t{1} << r) < n) ++r;
  if ((std::size_t{1} << r) != n) throw InternalError("quotient of Pic by its doubles is not 2-elementary");
  return r;
}

std::vector<std::size_t> dedup(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

SquareClassSpace sing_space(const CurvePtr& X, const std::vector<Place>& S) {
  check_place_set(*X, S);
  SquareClassSpace sp{X, S, X->sing_complete_basis()};
  const std::size_t dim = X->pic_two_rank();
  for (const auto& v : column_kernel(pic2_vectors(*X, S), dim))
    sp.gens.push_back(X->two_divisibility_witness(pattern_divisor(S, v)).square_class_rep());
  return sp;
}

SquareClassSpace delta_space(const CurvePtr& X, const std::vector<Place>& S) {
  const SquareClassSpace sing = sing_space(X, S);
  std::vector<BitVec> vecs;
  for (const auto& g : sing.gens) vecs.push_back(local_vector(*X, g, S));
  SquareClassSpace sp{X, S, {}};
  for (const auto& c : column_kernel(vecs, 2 * S.size())) sp.gens.push_back(combine(sing.gens, c, X->field()));
  return sp;
}

SquareClassSpace quotient_basis(const CurvePtr& X, const std::vector<Place>& S) {
  const SquareClassSpace sing = sing_space(X, S);
  std::vector<BitVec> vecs;
  for (const auto& g : sing.gens) vecs.push_back(local_vector(*X, g, S));
  SquareClassSpace sp{X, S, {}};
  for (std::size_t i : f2_independent_subset(vecs, 2 * S.size())) sp.gens.push_back(sing.gens[i]);
  return sp;
}

bool independent_mod_squares(const Curve& X, const std::vector<FieldElement>& xs, std::vector<Place> places) {
  if (xs.empty()) return true;
  std::set<Place> used(places.begin(), places.end());
  const unsigned cap = degree_cap();
  for (unsigned d = 0;; ++d) {
    if (d > 0) {
      X.for_each_place_of_degree(d, [&](const Place& p) {
        if (used.insert(p).second) places.push_back(p);
        return true;
      });
    }
    std::vector<BitVec> vecs;
    for (const auto& x : xs) vecs.push_back(local_vector(X, x, places));
    const auto kernel = column_kernel(vecs, 2 * places.size());
    if (kernel.empty()) return true;
    if (kernel.size() <= 10) {
      for (std::uint64_t m = 1; m < (std::uint64_t{1} << kernel.size()); ++m) {
        BitVec c(xs.size());
        for (std::size_t i = 0; i < kernel.size(); ++i)
          if ((m >> i) & 1u) c ^= kernel[i];
        if (X.is_square(combine(xs, c, X.field()))) return false;
      }
    }
    if (d >= cap) throw SearchExhausted("no separating set of places up to the degree cap");
  }
}

GYRank g_rank(const Curve& X, const std::vector<Place>& S) {
  check_place_set(X, S);
  const auto vecs = pic2_vectors(X, S);
  GYRank r;
  for (std::size_t i : f2_independent_subset(vecs, X.pic_two_rank())) r.independent.push_back(S[i]);
  r.rank = static_cast<unsigned>(r.independent.size());
  return r;
}

unsigned pic_two_rank_direct(const Curve& X, const std::vector<Place>& S) {
  check_place_set(X, S);
  long g = 0;
  for (const auto& p : S) g = std::gcd(g, static_cast<long>(p.degree()));
  const PicModel A(X, g * group_order(X));
  std::vector<std::size_t> gens = A.doubles();
  for (const auto& p : S) gens.push_back(A.of_place(X, p));
  const auto sub = A.closure(dedup(gens));
  const auto count = static_cast<std::size_t>(std::count(sub.begin(), sub.end(), 1));
  return log2_exact(A.size() / count);
}

unsigned pic_two_rank_formula(const Curve& X, const std::vector<Place>& S) {
  return X.pic_two_rank() - g_rank(X, S).rank;
}

bool two_divisible_brute_force(const Curve& X, const Divisor& D) {
  if (D.degree() % 2 != 0) return false;
  if (!X.is_elliptic()) return true;
  const auto& E = X.group();
  Point sum = Point::infinity();
  for (const auto& [p, n] : D.coeffs) sum = E.add(sum, E.mul(X.point_class(p), n));
  for (const auto& P : E.points())
    if (E.add(P, P) == sum) return true;
  return false;
}

LinDepReport check_lin_dep_lemma(const CurvePtr& X, const std::vector<Place>& S) {
  check_place_set(*X, S);
  if (S.size() > 16) throw PreconditionError("too many places for the exhaustive check");
  LinDepReport r;
  r.independent = g_rank(*X, S).rank == S.size();
  r.sing_rank_complete = static_cast<unsigned>(X->sing_complete_basis().size());
  r.sing_rank_constructed = static_cast<unsigned>(sing_space(X, S).rank());
  std::size_t admissible = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << S.size()); ++m) {
    BitVec v(S.size());
    for (std::size_t i = 0; i < S.size(); ++i) v.set(i, (m >> i) & 1u);
    const Divisor D = pattern_divisor(S, v);
    if (!two_divisible_brute_force(*X, D)) continue;
    const auto w = X->two_divisibility_witness(D);
    for (std::size_t i = 0; i < S.size(); ++i)
      if ((X->ord(w, S[i]) % 2 != 0) != v.get(i)) throw InternalError("witness has the wrong parity on S");
    if (!in_sing(*X, w, S)) throw InternalError("witness has odd order outside S");
    ++admissible;
  }
  r.sing_rank_direct = r.sing_rank_complete + log2_exact(admissible);
  r.sing_equal = r.sing_rank_direct == r.sing_rank_complete;
  r.agree = (r.independent == r.sing_equal) && r.sing_rank_constructed == r.sing_rank_direct;
  return r;
}

PicFormulaReport check_pic_rank_formula(const Curve& X, const std::vector<Place>& S) {
  PicFormulaReport r;
  r.formula = pic_two_rank_formula(X, S);
  r.direct = pic_two_rank_direct(X, S);
  r.agree = r.formula == r.direct;
  return r;
}

OddTransferReport check_odd_degree_transfer(const Curve& X, const Place& p, const Divisor& D) {
  X.validate(p);
  if (p.degree() % 2 == 0) throw PreconditionError("the place must have odd degree");
  if (D.coeff(p) != 0) throw PreconditionError("the divisor must avoid the place");
  OddTransferReport r;
  r.left = two_divisible_brute_force(X, D);
  const PicModel A(X, static_cast<long>(p.degree()) * group_order(X));
  std::vector<std::size_t> gens = A.doubles();
  gens.push_back(A.of_place(X, p));
  const auto sub = A.closure(dedup(gens));
  r.right = D.degree() % 2 == 0 && sub[A.of_divisor(X, D)];
  r.agree = r.left == r.right;
  return r;
}

bool smile(const Curve& X, const Place& q1, const Place& q2) {
  X.validate(q1);
  X.validate(q2);
  if (q1 == q2) throw PreconditionError("smile needs two distinct places");
  Divisor d1, d2;
  d1.add(q1, 1);
  d2.add(q2, 1);
  if (!X.two_divisible(d1) || !X.two_divisible(d2)) throw PreconditionError("class of the place is not 2-divisible");
  const FieldElement lam = X.two_divisibility_witness(d1);
  const auto base = X.sing_complete_basis();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << base.size()); ++m) {
    FieldElement x = lam;
    for (std::size_t i = 0; i < base.size(); ++i)
      if ((m >> i) & 1u) x *= base[i];
    if (!is_local_square(X, x, q2)) return false;
  }
  return true;
}

}  // namespace wildsets
