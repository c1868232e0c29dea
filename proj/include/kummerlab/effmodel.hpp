#pragma once

#include <string>

#include "kummerlab/weierstrass.hpp"

namespace kummerlab {

enum class FiberType { ConstantZ2, Mu2, Alpha2 };
std::string to_string(FiberType t);
FiberType parse_fiber_type(const std::string& s);

struct EffectiveModelFiber {
  LocalPrime prime;
  long d = 0;  // v(2, a1, a3)
  Element two_d, a1_d, a3_d;
  FiberType type = FiberType::ConstantZ2;
  // Tate-Oort parameters, normalized to (pi^d, 2_d)
  Element tate_oort_a, tate_oort_b;
};

// Model must be minimal at P.
EffectiveModelFiber effective_model_fiber(const WeierstrassModel& E, const LocalPrime& P);

struct FixedSchemeFiber {
  enum class Shape {
    LineAvoidsOrigin,   // 2_d is a unit: origin plus a cubic in x
    VerticalLine,       // 2_d = 0, a1_d a unit: origin of length 2 plus a quadratic in y
    OriginOnly          // 2_d = a1_d = 0: the origin with length 4
  };
  ResidueField::Elem two_d, a1_d, a3_d;  // the line, reduced
  Shape shape = Shape::OriginOnly;
  KPoly polynomial;  // cuts out the affine part (empty for OriginOnly)
  int origin_length = 4;
  int affine_points = 0;  // distinct geometric points
  int points = 1;         // including the origin
  int components = 1;     // a finite scheme: one component per point
  int total_length = 4;

  bool geometrically_disconnected() const { return components >= 2; }
  bool etale() const { return points == 4; }
};

FixedSchemeFiber fixed_scheme_fiber(const WeierstrassModel& E, const LocalPrime& P);

// Same unit orbit: lambda (a, b) = (lambda a, lambda^{-1} b).
bool tate_oort_same_orbit(const Element& a, const Element& b, const Element& a2, const Element& b2,
                          const LocalPrime& P);
bool tate_oort_isomorphic(const EffectiveModelFiber& G, const EffectiveModelFiber& H);

}  // namespace kummerlab
