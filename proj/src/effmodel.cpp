#include "kummerlab/effmodel.hpp"

#include <algorithm>
#include <stdexcept>

#include "kummerlab/localtate.hpp"

namespace kummerlab {

std::string to_string(FiberType t) {
  switch (t) {
    case FiberType::ConstantZ2: return "Z/2";
    case FiberType::Mu2: return "mu2";
    case FiberType::Alpha2: return "alpha2";
  }
  return "?";
}

FiberType parse_fiber_type(const std::string& s) {
  if (s == "Z/2" || s == "z2" || s == "constant") return FiberType::ConstantZ2;
  if (s == "mu2") return FiberType::Mu2;
  if (s == "alpha2") return FiberType::Alpha2;
  throw std::invalid_argument("unknown fiber type '" + s + "' (expected z2, mu2, alpha2)");
}

namespace {

void require_minimal(const WeierstrassModel& E, const LocalPrime& P) {
  if (!E.is_integral_at(P)) throw std::domain_error("model is not integral at " + P.label());
  if (!is_minimal_at(E, P)) throw std::domain_error("model is not minimal at " + P.label());
}

}  // namespace

EffectiveModelFiber effective_model_fiber(const WeierstrassModel& E, const LocalPrime& P) {
  require_minimal(E, P);
  const NumberRing& R = E.ring();
  const Element two(R, 2);
  const long d = std::min({valuation(two, P), valuation(E.a1(), P), valuation(E.a3(), P)});
  EffectiveModelFiber G;
  G.prime = P;
  G.d = d;
  G.two_d = divide_by_uniformizer(two, P, d);
  G.a1_d = divide_by_uniformizer(E.a1(), P, d);
  G.a3_d = divide_by_uniformizer(E.a3(), P, d);
  if (d == 0) {
    G.type = FiberType::ConstantZ2;
  } else if (valuation(G.two_d, P) == 0) {
    G.type = FiberType::Mu2;
  } else {
    G.type = FiberType::Alpha2;
  }
  G.tate_oort_a = P.uniformizer().pow(static_cast<unsigned>(d));
  G.tate_oort_b = G.two_d;
  return G;
}

FixedSchemeFiber fixed_scheme_fiber(const WeierstrassModel& E, const LocalPrime& P) {
  const EffectiveModelFiber G = effective_model_fiber(E, P);
  const ResidueField& k = P.residue_field();
  FixedSchemeFiber F;
  F.two_d = reduce(G.two_d, P);
  F.a1_d = reduce(G.a1_d, P);
  F.a3_d = reduce(G.a3_d, P);
  const auto a1 = reduce(E.a1(), P), a2 = reduce(E.a2(), P), a3 = reduce(E.a3(), P), a4 = reduce(E.a4(), P),
             a6 = reduce(E.a6(), P);

  auto count = [&](const KPoly& f) {
    if (k.characteristic() == 2) return gf4096::distinct_roots(k, f);
    return kpoly::distinct_geometric_roots(k, f);
  };

  if (!k.is_zero(F.two_d)) {
    // y = alpha x + beta on the line
    const auto alpha = k.neg(k.div(F.a1_d, F.two_d));
    const auto beta = k.neg(k.div(F.a3_d, F.two_d));
    const auto two = k.from_int(2);
    KPoly f(4);
    f[3] = k.neg(k.one());
    f[2] = k.sub(k.add(k.mul(alpha, alpha), k.mul(a1, alpha)), a2);
    f[1] = k.sub(k.add(k.add(k.mul(two, k.mul(alpha, beta)), k.mul(a1, beta)), k.mul(a3, alpha)), a4);
    f[0] = k.sub(k.add(k.mul(beta, beta), k.mul(a3, beta)), a6);
    F.shape = FixedSchemeFiber::Shape::LineAvoidsOrigin;
    F.polynomial = f;
    F.origin_length = 1;
    F.affine_points = count(f);
  } else if (!k.is_zero(F.a1_d)) {
    const auto x0 = k.neg(k.div(F.a3_d, F.a1_d));
    const auto fx0 = k.add(k.mul(k.add(k.mul(k.add(x0, a2), x0), a4), x0), a6);
    KPoly f{k.neg(fx0), k.add(k.mul(a1, x0), a3), k.one()};
    F.shape = FixedSchemeFiber::Shape::VerticalLine;
    F.polynomial = f;
    F.origin_length = 2;
    F.affine_points = count(f);
  } else {
    F.shape = FixedSchemeFiber::Shape::OriginOnly;
    F.origin_length = 4;
    F.affine_points = 0;
  }
  F.points = 1 + F.affine_points;
  F.components = F.points;
  F.total_length = F.origin_length + (F.polynomial.empty() ? 0 : kpoly::degree(k, F.polynomial));
  if (F.total_length != 4) throw std::logic_error("fixed-scheme fibre does not have length 4");
  return F;
}

bool tate_oort_same_orbit(const Element& a, const Element& b, const Element& a2, const Element& b2,
                          const LocalPrime& P) {
  if (a.is_zero() || a2.is_zero()) throw std::invalid_argument("Tate-Oort parameter a must be nonzero");
  return valuation(a, P) == valuation(a2, P) && a * b == a2 * b2;
}

bool tate_oort_isomorphic(const EffectiveModelFiber& G, const EffectiveModelFiber& H) {
  if (!(G.prime == H.prime)) throw std::invalid_argument("effective models at different primes");
  return tate_oort_same_orbit(G.tate_oort_a, G.tate_oort_b, H.tate_oort_a, H.tate_oort_b, G.prime);
}

}  // namespace kummerlab
