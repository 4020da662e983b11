#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wildsets/curve.hpp"

namespace wildsets {

/// Element of the local square-class group {1, u, pi, u*pi} at a place,
/// relative to the curve's fixed primary unit and uniformizer there.
/// Bit 0 is the u-exponent, bit 1 the pi-exponent; the group law is xor.
enum class LocalClass : std::uint8_t { One = 0, U = 1, Pi = 2, UPi = 3 };

inline LocalClass operator*(LocalClass a, LocalClass b) {
  return static_cast<LocalClass>(static_cast<unsigned>(a) ^ static_cast<unsigned>(b));
}
inline bool has_u(LocalClass c) { return static_cast<unsigned>(c) & 1u; }
inline bool has_pi(LocalClass c) { return static_cast<unsigned>(c) & 2u; }
const char* to_string(LocalClass c);
/// Accepts "1", "u", "pi", "upi" (also "u*pi", "pi*u").
LocalClass local_class_from_string(const std::string& s);

LocalClass local_square_class(const Curve& X, const FieldElement& x, const Place& p);
bool is_local_square(const Curve& X, const FieldElement& x, const Place& p);
/// chi(-1) in the residue field of p.
int minus_one_char(const Curve& X, const Place& p);

/// Tame symbol (x, y)_p = chi(residue of (-1)^(ab) x^b / y^a), a = ord x, b = ord y.
int hilbert_symbol(const Curve& X, const FieldElement& x, const FieldElement& y, const Place& p);
/// The same symbol evaluated on local classes.
int hilbert_symbol(LocalClass a, LocalClass b, int chi_minus_one);

struct ReciprocityReport {
  std::vector<std::pair<Place, int>> factors;  // places where either element is not a unit
  int product = 1;
};
ReciprocityReport reciprocity_product(const Curve& X, const FieldElement& x, const FieldElement& y);

/// A homomorphism of local square-class groups recorded by the images of u
/// and pi. `image_upi` is only present for hand-written certificates and lets
/// the verifier reject maps that are not homomorphisms.
struct LocalMap {
  Place source, target;
  LocalClass image_u = LocalClass::U;
  LocalClass image_pi = LocalClass::Pi;
  std::optional<LocalClass> image_upi;

  static LocalMap identity(const Place& p) { return {p, p, LocalClass::U, LocalClass::Pi, std::nullopt}; }
  /// The unique homomorphism sending a -> fa and b -> fb, for independent a, b.
  static LocalMap from_pairs(const Place& s, const Place& t, LocalClass a, LocalClass fa, LocalClass b,
                             LocalClass fb);

  LocalClass apply(LocalClass c) const;
  bool is_homomorphism() const;
  bool is_isomorphism() const;
  /// Wild iff an even class is sent to an odd one.
  bool is_wild() const { return has_pi(image_u); }
  LocalMap inverse() const;
};

/// second after first; first.target must equal second.source.
LocalMap compose(const LocalMap& first, const LocalMap& second);

}  // namespace wildsets
