#include "kummerlab/weierstrass.hpp"

#include <stdexcept>

namespace kummerlab {

WeierstrassModel::WeierstrassModel(NumberRing R, Element a1, Element a2, Element a3, Element a4, Element a6)
    : ring_(R), a_{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)} {
  for (const auto& a : a_)
    if (!(a.ring() == ring_)) throw std::invalid_argument("coefficient lies in a different ring");
  if (invariants_of(a_).discriminant.is_zero())
    throw std::invalid_argument("discriminant Delta vanishes: the cubic is singular");
}

bool WeierstrassModel::is_integral() const {
  for (const auto& a : a_)
    if (!a.is_integral()) return false;
  return true;
}

bool WeierstrassModel::is_integral_at(const LocalPrime& P) const {
  for (const auto& a : a_)
    if (valuation(a, P) < 0) return false;
  return true;
}

WeierstrassInvariants invariants_of(const std::array<Element, 5>& a) {
  const Element &a1 = a[0], &a2 = a[1], &a3 = a[2], &a4 = a[3], &a6 = a[4];
  WeierstrassInvariants I;
  I.b2 = a1 * a1 + 4 * a2;
  I.b4 = 2 * a4 + a1 * a3;
  I.b6 = a3 * a3 + 4 * a6;
  I.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  I.c4 = I.b2 * I.b2 - 24 * I.b4;
  I.c6 = -(I.b2 * I.b2 * I.b2) + 36 * I.b2 * I.b4 - 216 * I.b6;
  I.discriminant = -(I.b2 * I.b2 * I.b8) - 8 * I.b4 * I.b4 * I.b4 - 27 * I.b6 * I.b6 + 9 * I.b2 * I.b4 * I.b6;
  I.j_numerator = I.c4 * I.c4 * I.c4;
  // self-check of the classical relations
  if (!(4 * I.b8 == I.b2 * I.b6 - I.b4 * I.b4))
    throw std::logic_error("invariant relation 4 b8 = b2 b6 - b4^2 failed");
  if (!(I.j_numerator - I.c6 * I.c6 == 1728 * I.discriminant))
    throw std::logic_error("invariant relation c4^3 - c6^2 = 1728 Delta failed");
  return I;
}

WeierstrassInvariants invariants(const WeierstrassModel& E) { return invariants_of(E.coefficients()); }

KeyIdentity key_identity(const WeierstrassModel& E) {
  const WeierstrassInvariants I = invariants(E);
  KeyIdentity k;
  k.value = I.b2 * E.a4() + I.b6;
  k.four_part = 4 * (E.a2() * E.a4() + E.a6());
  k.a1_part = E.a1() * E.a1() * E.a4();
  k.a3_part = E.a3() * E.a3();
  if (!(k.value == k.four_part + k.a1_part + k.a3_part))
    throw std::logic_error("b2 a4 + b6 decomposition failed");
  return k;
}

CoordinateChange CoordinateChange::identity(const NumberRing& R) {
  return {Element(R, 1), Element(R), Element(R), Element(R)};
}

CoordinateChange compose(const CoordinateChange& a, const CoordinateChange& b) {
  CoordinateChange c;
  c.u = a.u * b.u;
  c.r = a.r + a.u * a.u * b.r;
  c.s = a.s + a.u * b.s;
  c.t = a.t + a.u * a.u * a.s * b.r + a.u * a.u * a.u * b.t;
  return c;
}

WeierstrassModel transform_unchecked(const WeierstrassModel& E, const CoordinateChange& ch) {
  const Element &a1 = E.a1(), &a2 = E.a2(), &a3 = E.a3(), &a4 = E.a4(), &a6 = E.a6();
  const Element &u = ch.u, &r = ch.r, &s = ch.s, &t = ch.t;
  if (u.is_zero()) throw std::invalid_argument("coordinate change with u = 0");
  Element n1 = a1 + 2 * s;
  Element n2 = a2 - s * a1 + 3 * r - s * s;
  Element n3 = a3 + r * a1 + 2 * t;
  Element n4 = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t;
  Element n6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
  Element u2 = u * u;
  Element u3 = u2 * u;
  Element u4 = u2 * u2;
  return WeierstrassModel(E.ring(), n1 / u, n2 / u2, n3 / u3, n4 / u4, n6 / (u3 * u3));
}

WeierstrassModel transform(const WeierstrassModel& E, const CoordinateChange& ch) {
  WeierstrassModel out = transform_unchecked(E, ch);
  if (!out.is_integral()) throw std::domain_error("coordinate change produced non-integral coefficients");
  return out;
}

WeierstrassModel transform_at(const WeierstrassModel& E, const CoordinateChange& ch, const LocalPrime& P) {
  WeierstrassModel out = transform_unchecked(E, ch);
  if (!out.is_integral_at(P))
    throw std::domain_error("coordinate change produced coefficients that are not integral at " + P.label());
  return out;
}

std::string to_string(const WeierstrassModel& E) {
  static const char* names[5] = {"a1", "a2", "a3", "a4", "a6"};
  std::string s = "[";
  for (size_t i = 0; i < 5; ++i) s += std::string(i ? ", " : "") + names[i] + "=" + E.coefficients()[i].to_string();
  return s + "]";
}

}  // namespace kummerlab
