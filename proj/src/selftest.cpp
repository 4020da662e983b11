#include "wildsets/selftest.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "wildsets/certificate_json.hpp"
#include "wildsets/constructions.hpp"
#include "wildsets/errors.hpp"
#include "wildsets/text.hpp"

namespace wildsets {
namespace {

Poly random_poly(const FieldPtr& F, std::mt19937_64& rng, int max_deg) {
  for (;;) {
    std::vector<Elt> c(rng() % static_cast<unsigned>(max_deg + 1) + 1);
    for (auto& x : c) x = static_cast<Elt>(rng() % F->q());
    Poly p(F, c);
    if (!p.is_zero()) return p;
  }
}

FieldElement random_element(const Curve& X, std::mt19937_64& rng) {
  const FieldPtr& F = X.field();
  FieldElement x = FieldElement::from_poly(random_poly(F, rng, 3)) / FieldElement::from_poly(random_poly(F, rng, 2));
  if (X.is_elliptic() && rng() % 2) x *= FieldElement::linear_y(random_poly(F, rng, 2), random_poly(F, rng, 1));
  return x;
}

std::vector<Place> places_up_to(const Curve& X, unsigned d) {
  std::vector<Place> out;
  X.for_each_place(d, [&](const Place& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::vector<Place> random_subset(const std::vector<Place>& pool, std::mt19937_64& rng, std::size_t max_size) {
  std::vector<Place> v = pool;
  std::shuffle(v.begin(), v.end(), rng);
  v.resize(1 + rng() % std::min(max_size, v.size()));
  return v;
}

struct Curves {
  std::vector<CurvePtr> all;
  Curves() {
    for (unsigned q : {3u, 5u, 9u}) all.push_back(Curve::projective_line(FiniteField::make(q)));
    all.push_back(make_curve(FiniteField::make(5), "t^3 - t"));
  }
};

SelftestResult reciprocity(const Curves& C, std::mt19937_64& rng, unsigned n) {
  unsigned bad = 0, total = 0;
  for (const auto& X : C.all)
    for (unsigned i = 0; i < n; ++i, ++total)
      if (reciprocity_product(*X, random_element(*X, rng), random_element(*X, rng)).product != 1) ++bad;
  return {"reciprocity", bad == 0, std::to_string(total) + " pairs, " + std::to_string(bad) + " violations"};
}

SelftestResult rank_formula(const Curves& C, std::mt19937_64& rng, unsigned n) {
  unsigned bad = 0, total = 0;
  for (const auto& X : C.all) {
    const auto pool = places_up_to(*X, 2);
    for (unsigned i = 0; i < n / 4 + 1; ++i, ++total) {
      const auto S = random_subset(pool, rng, 3);
      if (!check_pic_rank_formula(*X, S).agree || !check_lin_dep_lemma(X, S).agree) ++bad;
    }
  }
  return {"rank formula and independence criterion", bad == 0,
          std::to_string(total) + " sets, " + std::to_string(bad) + " disagreements"};
}

SelftestResult smile_symmetry(const Curves& C) {
  unsigned bad = 0, pairs = 0;
  for (const auto& X : C.all) {
    std::vector<Place> div;
    X->for_each_place(3, [&](const Place& p) {
      Divisor D;
      D.add(p, 1);
      if (X->two_divisible(D)) div.push_back(p);
      return div.size() < 5;
    });
    for (std::size_t i = 0; i < div.size(); ++i)
      for (std::size_t j = i + 1; j < div.size(); ++j, ++pairs)
        if (smile(*X, div[i], div[j]) != smile(*X, div[j], div[i])) ++bad;
  }
  return {"smile symmetry", bad == 0, std::to_string(pairs) + " pairs, " + std::to_string(bad) + " asymmetric"};
}

SelftestResult round_trips() {
  const auto X = Curve::projective_line(FiniteField::make(5));
  const auto L = [&](const char* s) { return parse_place_list(*X, s); };
  std::vector<std::pair<std::string, Certificate>> certs;
  std::ostringstream failures;
  try {
    certs.emplace_back("rank 0", construct_rank0(X, L("t^2+2")));
    certs.emplace_back("rank 1", construct_rank1(X, L("t, t-1")));
    certs.emplace_back("rank 1", construct_rank1(X, L("t, t-1, t-2")));
  } catch (const Error& e) {
    return {"construction round trips", false, e.what()};
  }
  for (const auto& [name, c] : certs) {
    const auto back = read_certificate(write_certificate(c));
    const auto R = verify(back);
    if (!R.ok() || !check_necessary_condition(*back.X, R.wild)) failures << name << " ";
  }
  const std::string f = failures.str();
  return {"construction round trips", f.empty(),
          f.empty() ? std::to_string(certs.size()) + " certificates verified after JSON round trip" : "failed: " + f};
}

}  // namespace

std::vector<SelftestResult> run_selftest(std::uint64_t seed, unsigned samples) {
  std::mt19937_64 rng(seed);
  const Curves C;
  return {reciprocity(C, rng, samples), rank_formula(C, rng, samples), smile_symmetry(C), round_trips()};
}

}  // namespace wildsets
