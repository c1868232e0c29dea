#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kummerlab {

// Residue fields F_p and F_{p^2}. An element is a + b*t, where t is a
// root of t^2 - trace*t + norm (irreducible mod p). For f = 1, b is always 0.
class ResidueField {
 public:
  struct Elem {
    int64_t a = 0;
    int64_t b = 0;
    bool operator==(const Elem&) const = default;
  };

  static ResidueField prime(int64_t p);
  static ResidueField quadratic(int64_t p, int64_t trace, int64_t norm);

  int64_t characteristic() const { return p_; }
  int degree() const { return f_; }
  // Number of elements, saturating at INT64_MAX.
  int64_t order() const;

  Elem zero() const { return {}; }
  Elem one() const { return {1, 0}; }
  Elem from_int(int64_t n) const;
  Elem generator() const;  // t (only meaningful when f = 2)

  bool is_zero(const Elem& x) const { return x.a == 0 && x.b == 0; }
  Elem add(const Elem& x, const Elem& y) const;
  Elem sub(const Elem& x, const Elem& y) const;
  Elem neg(const Elem& x) const;
  Elem mul(const Elem& x, const Elem& y) const;
  Elem pow(Elem x, uint64_t n) const;
  Elem inv(const Elem& x) const;  // throws on zero
  Elem div(const Elem& x, const Elem& y) const { return mul(x, inv(y)); }

  // Inverse Frobenius: the unique y with y^p = x.
  Elem pth_root(const Elem& x) const;
  // A square root when one exists in the field (char 2 always succeeds).
  bool sqrt(const Elem& x, Elem& out) const;

  // All elements; only for small fields (throws above 2^20 elements).
  std::vector<Elem> elements() const;

  std::string to_string(const Elem& x) const;

  int64_t trace_coeff() const { return trace_; }
  int64_t norm_coeff() const { return norm_; }

  bool operator==(const ResidueField&) const = default;

 private:
  int64_t p_ = 2;
  int f_ = 1;
  int64_t trace_ = 0;
  int64_t norm_ = 0;

  int64_t red(int64_t v) const;
  int64_t mulmod(int64_t x, int64_t y) const;
};

// Dense polynomials over a residue field, low degree first.
using KPoly = std::vector<ResidueField::Elem>;

namespace kpoly {

void trim(const ResidueField& k, KPoly& f);
int degree(const ResidueField& k, const KPoly& f);  // -1 for zero
ResidueField::Elem eval(const ResidueField& k, const KPoly& f, const ResidueField::Elem& x);
KPoly derivative(const ResidueField& k, const KPoly& f);
KPoly mod(const ResidueField& k, KPoly f, const KPoly& g);
KPoly gcd(const ResidueField& k, KPoly f, KPoly g);  // monic
// Coefficients of f(T + c).
KPoly shift(const ResidueField& k, const KPoly& f, const ResidueField::Elem& c);

// For a polynomial of degree 2 or 3 with a repeated root, returns it.
// Repeated roots of low-degree polynomials over a perfect field are rational.
bool repeated_root(const ResidueField& k, const KPoly& f, ResidueField::Elem& root);

// Multiplicity of root c in f.
int multiplicity(const ResidueField& k, const KPoly& f, const ResidueField::Elem& c);

// Number of distinct roots over the algebraic closure, deg f <= 3,
// computed algebraically (repeated-root analysis).
int distinct_geometric_roots(const ResidueField& k, const KPoly& f);

// Roots in k by exhaustive search (small fields only).
std::vector<ResidueField::Elem> roots_by_search(const ResidueField& k, const KPoly& f);

}  // namespace kpoly

// GF(2^12) with the primitive polynomial x^12 + x^6 + x^4 + x + 1. Every
// cubic or quadratic over F_2 or F_4 splits here.
namespace gf4096 {

uint16_t mul(uint16_t x, uint16_t y);
uint16_t pow(uint16_t x, unsigned n);
// Image of the residue element of F_2 or F_4 (t^2 = t + 1) in GF(2^12).
uint16_t embed(const ResidueField& k, const ResidueField::Elem& x);
// Distinct roots in GF(2^12) of a polynomial over F_2 or F_4, by search.
int distinct_roots(const ResidueField& k, const KPoly& f);

}  // namespace gf4096

}  // namespace kummerlab
