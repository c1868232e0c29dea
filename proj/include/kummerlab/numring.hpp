#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "kummerlab/finite_field.hpp"

namespace kummerlab {

// Valuations are longs; the zero element has this one.
constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

// Z, the maximal order of Q(sqrt m), or Z[w][c]/(c^3 - a) with v_2(a) = 1.
// The quadratic generator t is (1+sqrt m)/2 for m = 1 mod 4 and sqrt m
// otherwise; the tower is built on m = -3, so t = w with w^2 = w - 1.
class NumberRing {
 public:
  enum class Kind { Rational, Quadratic, Tower };

  static NumberRing rational();
  static NumberRing quadratic(long m);
  static NumberRing tower(long a);

  Kind kind() const { return kind_; }
  long m() const { return m_; }
  long tower_a() const { return a_; }
  int degree() const;
  // t is a root of T^2 - trace*T + norm
  long theta_trace() const;
  long theta_norm() const;
  bool theta_is_half() const;  // m = 1 mod 4
  // Z[w] for the tower, Z for the others.
  NumberRing base() const;
  std::string name() const;
  // Variable name used when printing elements ("i", "w", "t").
  std::string theta_symbol() const;

  bool operator==(const NumberRing&) const = default;

 private:
  Kind kind_ = Kind::Rational;
  long m_ = 0;
  long a_ = 0;
};

bool is_squarefree(long n);

// An element of the fraction field: integral coordinates over a positive
// integer denominator, kept in lowest terms. Coordinates are in the basis
// {1} / {1, t} / {1, w, c, wc, c^2, wc^2}.
class Element {
 public:
  Element() = default;
  explicit Element(NumberRing R);
  Element(NumberRing R, long n);
  Element(NumberRing R, const mpz_class& n);
  Element(NumberRing R, std::vector<mpz_class> coeffs, mpz_class den = 1);

  // x + y t in a quadratic ring (or Z[w])
  static Element quadratic(const NumberRing& R, const mpz_class& x, const mpz_class& y);

  const NumberRing& ring() const { return ring_; }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  const mpz_class& denominator() const { return den_; }

  bool is_zero() const;
  bool is_integral() const { return den_ == 1; }
  // True when this is an ordinary integer.
  bool is_rational_integer() const;

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Element& o);
  Element& operator/=(const Element& o);  // throws std::domain_error on zero
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Element& b) { return a *= b; }
  friend Element operator/(Element a, const Element& b) { return a /= b; }
  Element operator*(long n) const;
  Element pow(unsigned n) const;

  bool operator==(const Element& o) const;

  // Integral part only: the numerator as an element with denominator 1.
  Element numerator() const;
  // y * adjugate(y) = N(y), a rational integer (for integral y).
  Element adjugate() const;
  // Image under the ring automorphism fixing the base (tower: c -> (w-1)c;
  // quadratic: conjugation).
  Element conjugate() const;

  std::string to_string() const;

 private:
  NumberRing ring_;
  std::vector<mpz_class> c_{mpz_class(0)};
  mpz_class den_ = 1;

  void normalize();
  void check_same_ring(const Element& o) const;
};

Element operator*(long n, const Element& x);

// Norm to the base: Z for quadratic rings, Z[w] for the tower, identity on Z.
Element norm(const Element& x);
// Absolute norm to Q.
mpq_class absolute_norm(const Element& x);

enum class Splitting { Split, Inert, Ramified };

class LocalPrime {
 public:
  const NumberRing& ring() const { return ring_; }
  long p() const { return p_; }
  Splitting splitting() const { return splitting_; }
  int which() const { return which_; }  // 1 or 2 for split primes, 0 otherwise
  const Element& uniformizer() const { return pi_; }
  int e() const { return e_; }
  int f() const { return f_; }
  const ResidueField& residue_field() const { return k_; }
  // Image of t in the residue field as an integer (split and ramified).
  long residue_root() const { return root_; }
  std::string label() const;

  bool operator==(const LocalPrime& o) const {
    return ring_ == o.ring_ && p_ == o.p_ && splitting_ == o.splitting_ && which_ == o.which_;
  }

 private:
  friend std::vector<LocalPrime> primes_over(const NumberRing& R, long p);
  NumberRing ring_;
  long p_ = 2;
  Splitting splitting_ = Splitting::Inert;
  int which_ = 0;
  Element pi_;
  int e_ = 1;
  int f_ = 1;
  ResidueField k_ = ResidueField::prime(2);
  long root_ = 0;
};

std::vector<LocalPrime> primes_over(const NumberRing& R, long p);
std::vector<LocalPrime> primes_over_two(const NumberRing& R);

long valuation(const mpz_class& n, long p);  // v_p on Z, kInfiniteValuation for 0
long valuation(const Element& x, const LocalPrime& P);
// Split-prime valuation with explicit starting Hensel precision (in p-adic
// digits); precision doubles until the value is determined.
long split_valuation(const Element& x, const LocalPrime& P, unsigned start_digits);
// Root of the generator's minimal polynomial mod p^digits selected by P.
mpz_class hensel_root(const LocalPrime& P, unsigned digits);

// Reduction of a P-integral element to the residue field.
ResidueField::Elem reduce(const Element& x, const LocalPrime& P);
// Canonical lift of a residue element.
Element lift(const ResidueField::Elem& x, const LocalPrime& P);

// x / pi^k as a field element.
Element divide_by_uniformizer(const Element& x, const LocalPrime& P, long k = 1);

struct FundamentalDiscriminantInfo {
  long value = 0;
  int epsilon = 1;  // sign attached to the 2-part
  int nu = 0;       // exponent of 2: 0, 2, or 3
  std::vector<long> odd_primes;
};

std::optional<FundamentalDiscriminantInfo> fundamental_discriminant(long d);
bool is_fundamental_discriminant(long d);

struct PureCubicDiscriminant {
  long f = 0;
  long d_K = 0;
};
PureCubicDiscriminant pure_cubic_discriminant(long m);
bool s3_theorem_applies(long m);

// Factorization of |n| by trial division: (prime, exponent) pairs.
std::vector<std::pair<long, long>> factor_integer(mpz_class n);

}  // namespace kummerlab
