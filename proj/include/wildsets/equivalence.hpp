#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wildsets/square_classes.hpp"

namespace wildsets {

enum class CertKind { Pre, Small };

/// Finite data of a pre-equivalence or a small equivalence. T[i] is the
/// image of S[i] and local_maps[i] goes from S[i] to T[i]. For a
/// pre-equivalence `basis` is a basis of Sing(X\S) modulo Delta(X\S); for a
/// small equivalence it is a basis of Sing(X\S).
struct Certificate {
  CertKind kind = CertKind::Small;
  CurvePtr X;
  std::vector<Place> S, T;
  std::vector<FieldElement> basis, images;
  std::vector<LocalMap> local_maps;
  std::optional<std::vector<Place>> claimed_wild;

  std::optional<std::size_t> index_of(const Place& p) const;
  /// T applied to places of S.
  std::vector<Place> image_of(const std::vector<Place>& places) const;
  std::vector<Place> preimage_of(const std::vector<Place>& places) const;
};

struct Check {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct VerificationReport {
  std::vector<Check> checks;
  std::vector<Place> wild;
  bool ok() const;
  const Check* failure() const;
  std::string to_text() const;
};

VerificationReport verify_pre_equivalence(const Certificate& c);
VerificationReport verify_small_equivalence(const Certificate& c);
VerificationReport verify(const Certificate& c);

/// Wild points of a certificate from its local maps; the certificate must verify.
std::vector<Place> wild_points(const Certificate& c);
std::vector<Place> wild_points_unchecked(const Certificate& c);

/// The identity small equivalence on S; S must satisfy rk Pic(X\S) = 0.
Certificate identity_small(const CurvePtr& X, const std::vector<Place>& S);
Certificate inverse(const Certificate& c);
/// (T2 o T1, t2 o t1); c2's domain must equal c1's image as a set and the
/// wild sets must be disjoint after pulling back. The result is re-verified.
Certificate compose(const Certificate& c1, const Certificate& c2);

using PlacePredicate = std::function<bool(const Place&)>;
/// Adds the tame point r to a small equivalence, choosing its image outside
/// T (r itself when possible) subject to `accept`.
Certificate enlarge(const Certificate& c, const Place& r, const PlacePredicate& accept = nullptr);
/// Enlarges both certificates so that c2's domain equals c1's image.
std::pair<Certificate, Certificate> align_for_composition(const Certificate& c1, const Certificate& c2);

/// Completes a pre-equivalence to a small equivalence by adjoining tame
/// auxiliary places, none of which lies in `avoid`.
Certificate extend_pre_equivalence(const Certificate& pe, const std::vector<Place>& avoid = {});

/// |S| >= 2 rk G_{X\S}.
bool check_necessary_condition(const Curve& X, const std::vector<Place>& S);

struct RankPreservationReport {
  unsigned g_source = 0, g_target = 0;
  bool sing_images = false;
  bool delta_ranks = false;
  bool ok = false;
};
RankPreservationReport check_rank_preservation(const Certificate& c);

}  // namespace wildsets
