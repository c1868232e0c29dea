#pragma once

#include <array>
#include <string>

#include "kummerlab/numring.hpp"

namespace kummerlab {

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
class WeierstrassModel {
 public:
  // Empty placeholder over Z; not a curve.
  WeierstrassModel() = default;
  // Throws std::invalid_argument when the discriminant vanishes.
  WeierstrassModel(NumberRing R, Element a1, Element a2, Element a3, Element a4, Element a6);

  const NumberRing& ring() const { return ring_; }
  const Element& a1() const { return a_[0]; }
  const Element& a2() const { return a_[1]; }
  const Element& a3() const { return a_[2]; }
  const Element& a4() const { return a_[3]; }
  const Element& a6() const { return a_[4]; }
  // a1, a2, a3, a4, a6 in that order
  const std::array<Element, 5>& coefficients() const { return a_; }

  bool is_integral() const;
  bool is_integral_at(const LocalPrime& P) const;

  bool operator==(const WeierstrassModel& o) const { return ring_ == o.ring_ && a_ == o.a_; }

 private:
  NumberRing ring_;
  std::array<Element, 5> a_;
};

struct WeierstrassInvariants {
  Element b2, b4, b6, b8, c4, c6, discriminant;
  // j = j_numerator / discriminant, kept as the pair (c4^3, Delta)
  Element j_numerator;
};

WeierstrassInvariants invariants(const WeierstrassModel& E);

// Same identities with no nonzero-discriminant requirement.
WeierstrassInvariants invariants_of(const std::array<Element, 5>& a);

struct KeyIdentity {
  Element value;  // b2*a4 + b6
  // 4*(a2*a4 + a6), a1^2*a4, a3^2
  Element four_part, a1_part, a3_part;
};

// b2*a4 + b6, checked against 4(a2a4 + a6) + a1^2 a4 + a3^2.
KeyIdentity key_identity(const WeierstrassModel& E);

struct CoordinateChange {
  Element u, r, s, t;
  static CoordinateChange identity(const NumberRing& R);
};

// Change (u1,r1,s1,t1) followed by (u2,r2,s2,t2).
CoordinateChange compose(const CoordinateChange& first, const CoordinateChange& second);

// x = u^2 x' + r, y = u^3 y' + s u^2 x' + t. Result must be integral.
WeierstrassModel transform(const WeierstrassModel& E, const CoordinateChange& ch);
// Same, but only P-integrality of the result is required.
WeierstrassModel transform_at(const WeierstrassModel& E, const CoordinateChange& ch, const LocalPrime& P);
// No integrality check at all.
WeierstrassModel transform_unchecked(const WeierstrassModel& E, const CoordinateChange& ch);

std::string to_string(const WeierstrassModel& E);

}  // namespace kummerlab
