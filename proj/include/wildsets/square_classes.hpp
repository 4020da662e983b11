#pragma once

#include <vector>

#include "wildsets/curve.hpp"
#include "wildsets/local_symbols.hpp"

namespace wildsets {

/// Default cap on the degree of places visited by searches; overridden by
/// the WILDSETS_DEGREE_CAP environment variable.
unsigned degree_cap();

/// Square classes with explicit generators: Sing(X\S), Delta(X\S) or a
/// complement of Delta in Sing.
struct SquareClassSpace {
  CurvePtr X;
  std::vector<Place> S;
  std::vector<FieldElement> gens;
  std::size_t rank() const { return gens.size(); }
};

/// Local classes at the given places, two bits per place (u, pi).
BitVec local_vector(const Curve& X, const FieldElement& x, const std::vector<Place>& places);
std::vector<LocalClass> local_classes(const Curve& X, const FieldElement& x, const std::vector<Place>& places);

/// Throws PreconditionError on an empty list, repeated or foreign places.
void check_place_set(const Curve& X, const std::vector<Place>& S);
/// x has even order at every place outside S.
bool in_sing(const Curve& X, const FieldElement& x, const std::vector<Place>& S);
/// Product of xs[i] over the set bits of c, reduced to its square-class representative.
FieldElement combine(const std::vector<FieldElement>& xs, const BitVec& c, const FieldPtr& F);

SquareClassSpace sing_space(const CurvePtr& X, const std::vector<Place>& S);
SquareClassSpace delta_space(const CurvePtr& X, const std::vector<Place>& S);
/// Elements of Sing(X\S) whose local vectors at S form a basis of the image
/// of Sing(X\S); their classes form a basis of Sing/Delta.
SquareClassSpace quotient_basis(const CurvePtr& X, const std::vector<Place>& S);

/// Checks independence modulo squares: local fingerprints at `places` and
/// then at further places in the global order; a candidate relation is
/// confirmed with the exact square test.
bool independent_mod_squares(const Curve& X, const std::vector<FieldElement>& xs, std::vector<Place> places = {});

struct GYRank {
  unsigned rank = 0;
  std::vector<Place> independent;
};
GYRank g_rank(const Curve& X, const std::vector<Place>& S);

/// 2-rank of Pic(X\S), computed by enumerating (Z/M + E(F_q)) / <classes of S>.
unsigned pic_two_rank_direct(const Curve& X, const std::vector<Place>& S);
unsigned pic_two_rank_formula(const Curve& X, const std::vector<Place>& S);

struct LinDepReport {
  bool independent = false;       // classes of S independent in Pic X / 2
  unsigned sing_rank_direct = 0;  // rk Sing(X\S) by enumerating parity patterns
  unsigned sing_rank_constructed = 0;
  unsigned sing_rank_complete = 0;  // rk Sing(X)
  bool sing_equal = false;
  bool agree = false;
};
LinDepReport check_lin_dep_lemma(const CurvePtr& X, const std::vector<Place>& S);

struct PicFormulaReport {
  unsigned formula = 0, direct = 0;
  bool agree = false;
};
PicFormulaReport check_pic_rank_formula(const Curve& X, const std::vector<Place>& S);

struct OddTransferReport {
  bool left = false;   // [D] in 2 Pic X
  bool right = false;  // [D] in 2 Pic(X\{p}) and deg D even
  bool agree = false;
};
OddTransferReport check_odd_degree_transfer(const Curve& X, const Place& p, const Divisor& D);

/// [D] in 2 Pic X decided from the enumerated group (deg even and the class
/// lies in the image of doubling).
bool two_divisible_brute_force(const Curve& X, const Divisor& D);

/// q1 smile q2: every class of Sing(X\{q1}) outside Sing(X) is a local square
/// at q2. Both classes must be 2-divisible.
bool smile(const Curve& X, const Place& q1, const Place& q2);

}  // namespace wildsets
