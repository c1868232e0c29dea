#include "kummerlab/numring.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace kummerlab {

namespace {

long mod4(long m) { return ((m % 4) + 4) % 4; }

// Z[w] arithmetic on coordinate pairs, w^2 = w - 1.
struct ZOmega {
  mpz_class x, y;
};

ZOmega zw_mul(const ZOmega& a, const ZOmega& b) {
  mpz_class yy = a.y * b.y;
  return {a.x * b.x - yy, a.x * b.y + a.y * b.x + yy};
}

ZOmega zw_add(const ZOmega& a, const ZOmega& b) { return {a.x + b.x, a.y + b.y}; }

ZOmega zw_conj(const ZOmega& a) { return {a.x + a.y, -a.y}; }

using Tri = std::array<ZOmega, 3>;

Tri tower_mul(const Tri& u, const Tri& v, long a) {
  std::array<ZOmega, 5> z;
  for (auto& e : z) e = {0, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) z[static_cast<size_t>(i + j)] = zw_add(z[static_cast<size_t>(i + j)], zw_mul(u[static_cast<size_t>(i)], v[static_cast<size_t>(j)]));
  mpz_class A = a;
  return {ZOmega{z[0].x + A * z[3].x, z[0].y + A * z[3].y},
          ZOmega{z[1].x + A * z[4].x, z[1].y + A * z[4].y}, z[2]};
}

Tri to_tri(const std::vector<mpz_class>& c) {
  return {ZOmega{c[0], c[1]}, ZOmega{c[2], c[3]}, ZOmega{c[4], c[5]}};
}

std::vector<mpz_class> from_tri(const Tri& t) {
  return {t[0].x, t[0].y, t[1].x, t[1].y, t[2].x, t[2].y};
}

// sigma: c -> zeta c, zeta = w - 1 (a primitive cube root of unity)
Tri tower_sigma(const Tri& t) {
  const ZOmega zeta{-1, 1};
  const ZOmega zeta2{0, -1};
  return {t[0], zw_mul(t[1], zeta), zw_mul(t[2], zeta2)};
}

mpz_class pow_mpz(long p, unsigned long k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), k);
  return r;
}

}  // namespace

bool is_squarefree(long n) {
  if (n == 0) return false;
  unsigned long v = static_cast<unsigned long>(n < 0 ? -n : n);
  for (unsigned long d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      v /= d;
      if (v % d == 0) return false;
    }
  }
  return true;
}

NumberRing NumberRing::rational() { return NumberRing(); }

NumberRing NumberRing::quadratic(long m) {
  if (m == 0 || m == 1) throw std::invalid_argument("m must differ from 0 and 1");
  if (!is_squarefree(m)) throw std::invalid_argument("m = " + std::to_string(m) + " is not squarefree");
  NumberRing R;
  R.kind_ = Kind::Quadratic;
  R.m_ = m;
  return R;
}

NumberRing NumberRing::tower(long a) {
  if (valuation(mpz_class(a), 2) != 1)
    throw std::invalid_argument("tower parameter a must have 2-adic valuation 1 (c^3 - a Eisenstein at 2)");
  NumberRing R;
  R.kind_ = Kind::Tower;
  R.m_ = -3;
  R.a_ = a;
  return R;
}

int NumberRing::degree() const {
  switch (kind_) {
    case Kind::Rational: return 1;
    case Kind::Quadratic: return 2;
    case Kind::Tower: return 6;
  }
  return 0;
}

bool NumberRing::theta_is_half() const { return kind_ != Kind::Rational && mod4(m_) == 1; }

long NumberRing::theta_trace() const { return theta_is_half() ? 1 : 0; }

long NumberRing::theta_norm() const { return theta_is_half() ? (1 - m_) / 4 : -m_; }

NumberRing NumberRing::base() const {
  if (kind_ == Kind::Tower) return quadratic(-3);
  return rational();
}

std::string NumberRing::name() const {
  switch (kind_) {
    case Kind::Rational: return "Z";
    case Kind::Quadratic: return "O(Q(sqrt(" + std::to_string(m_) + ")))";
    case Kind::Tower: return "Z[w][c]/(c^3-" + std::to_string(a_) + ")";
  }
  return "?";
}

std::string NumberRing::theta_symbol() const {
  if (kind_ == Kind::Tower || m_ == -3) return "w";
  if (m_ == -1) return "i";
  if (!theta_is_half()) return "sqrt(" + std::to_string(m_) + ")";
  return "t";
}

// ---------------------------------------------------------------- Element

Element::Element(NumberRing R) : ring_(R), c_(static_cast<size_t>(R.degree()), 0) {}

Element::Element(NumberRing R, long n) : Element(R) { c_[0] = n; }

Element::Element(NumberRing R, const mpz_class& n) : Element(R) { c_[0] = n; }

Element::Element(NumberRing R, std::vector<mpz_class> coeffs, mpz_class den)
    : ring_(R), c_(std::move(coeffs)), den_(std::move(den)) {
  if (c_.size() != static_cast<size_t>(R.degree()))
    throw std::invalid_argument("coordinate count does not match ring degree");
  if (den_ == 0) throw std::domain_error("zero denominator");
  normalize();
}

Element Element::quadratic(const NumberRing& R, const mpz_class& x, const mpz_class& y) {
  if (R.kind() != NumberRing::Kind::Quadratic) throw std::invalid_argument("not a quadratic ring");
  return Element(R, {x, y});
}

void Element::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : c_) c = -c;
  }
  if (den_ == 1) return;
  mpz_class g = den_;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& c : c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

void Element::check_same_ring(const Element& o) const {
  if (!(ring_ == o.ring_)) throw std::invalid_argument("elements of different rings");
}

bool Element::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpz_class& c) { return c == 0; });
}

bool Element::is_rational_integer() const {
  if (den_ != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Element& Element::operator+=(const Element& o) {
  check_same_ring(o);
  if (den_ == o.den_) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  } else {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] * o.den_ + o.c_[i] * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Element& Element::operator-=(const Element& o) { return *this += -o; }

Element& Element::operator*=(const Element& o) {
  check_same_ring(o);
  switch (ring_.kind()) {
    case NumberRing::Kind::Rational:
      c_[0] *= o.c_[0];
      break;
    case NumberRing::Kind::Quadratic: {
      const mpz_class tr = ring_.theta_trace();
      const mpz_class nm = ring_.theta_norm();
      mpz_class yy = c_[1] * o.c_[1];
      mpz_class x = c_[0] * o.c_[0] - yy * nm;
      mpz_class y = c_[0] * o.c_[1] + c_[1] * o.c_[0] + yy * tr;
      c_[0] = x;
      c_[1] = y;
      break;
    }
    case NumberRing::Kind::Tower:
      c_ = from_tri(tower_mul(to_tri(c_), to_tri(o.c_), ring_.tower_a()));
      break;
  }
  den_ *= o.den_;
  normalize();
  return *this;
}

Element Element::numerator() const { return Element(ring_, c_, 1); }

Element Element::conjugate() const {
  switch (ring_.kind()) {
    case NumberRing::Kind::Rational:
      return *this;
    case NumberRing::Kind::Quadratic:
      return Element(ring_, {c_[0] + c_[1] * ring_.theta_trace(), -c_[1]}, den_);
    case NumberRing::Kind::Tower:
      return Element(ring_, from_tri(tower_sigma(to_tri(c_))), den_);
  }
  return *this;
}

Element Element::adjugate() const {
  Element a = numerator();
  switch (ring_.kind()) {
    case NumberRing::Kind::Rational:
      return Element(ring_, 1);
    case NumberRing::Kind::Quadratic:
      return a.conjugate();
    case NumberRing::Kind::Tower: {
      Element s1 = a.conjugate();
      Element s2 = s1.conjugate();
      Element n = a * s1 * s2;
      for (size_t i = 2; i < 6; ++i)
        if (n.c_[i] != 0) throw std::logic_error("tower norm left the base ring");
      ZOmega nc = zw_conj(ZOmega{n.c_[0], n.c_[1]});
      Element ncE(ring_, {nc.x, nc.y, 0, 0, 0, 0});
      return s1 * s2 * ncE;
    }
  }
  return a;
}

Element& Element::operator/=(const Element& o) {
  check_same_ring(o);
  if (o.is_zero()) throw std::domain_error("division by zero");
  Element on = o.numerator();
  Element adj = on.adjugate();
  Element prod = on * adj;  // a rational integer
  if (!prod.is_rational_integer()) throw std::logic_error("adjugate product is not an integer");
  *this *= adj;
  for (auto& c : c_) c *= o.den_;
  den_ *= prod.c_[0];
  normalize();
  return *this;
}

Element Element::operator*(long n) const {
  Element r = *this;
  for (auto& c : r.c_) c *= n;
  r.normalize();
  return r;
}

Element operator*(long n, const Element& x) { return x * n; }

Element Element::pow(unsigned n) const {
  Element r(ring_, 1);
  Element b = *this;
  while (n) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

bool Element::operator==(const Element& o) const {
  return ring_ == o.ring_ && den_ == o.den_ && c_ == o.c_;
}

namespace {

std::string zw_string(const mpz_class& x, const mpz_class& y, const std::string& sym) {
  if (y == 0) return x.get_str();
  std::string ys = y == 1 ? sym : (y == -1 ? "-" + sym : y.get_str() + "*" + sym);
  if (x == 0) return ys;
  return x.get_str() + (y > 0 ? "+" : "") + ys;
}

}  // namespace

std::string Element::to_string() const {
  std::string body;
  switch (ring_.kind()) {
    case NumberRing::Kind::Rational:
      body = c_[0].get_str();
      break;
    case NumberRing::Kind::Quadratic:
      body = zw_string(c_[0], c_[1], ring_.theta_symbol());
      break;
    case NumberRing::Kind::Tower: {
      std::vector<std::string> parts;
      const char* pw[3] = {"", "*c", "*c^2"};
      for (size_t i = 0; i < 3; ++i) {
        if (c_[2 * i] == 0 && c_[2 * i + 1] == 0) continue;
        std::string z = zw_string(c_[2 * i], c_[2 * i + 1], "w");
        if (i > 0) z = "(" + z + ")" + pw[i];
        parts.push_back(z);
      }
      if (parts.empty()) body = "0";
      for (size_t i = 0; i < parts.size(); ++i) body += (i ? " + " : "") + parts[i];
      break;
    }
  }
  if (den_ == 1) return body;
  return "(" + body + ")/" + den_.get_str();
}

Element norm(const Element& x) {
  const NumberRing& R = x.ring();
  switch (R.kind()) {
    case NumberRing::Kind::Rational:
      return x;
    case NumberRing::Kind::Quadratic: {
      Element a = x.numerator();
      Element n = a * a.adjugate();
      return Element(NumberRing::rational(), {n.coeffs()[0]}, x.denominator() * x.denominator());
    }
    case NumberRing::Kind::Tower: {
      Element a = x.numerator();
      Element s1 = a.conjugate();
      Element n = a * s1 * s1.conjugate();
      mpz_class d3 = x.denominator() * x.denominator() * x.denominator();
      return Element(R.base(), {n.coeffs()[0], n.coeffs()[1]}, d3);
    }
  }
  return x;
}

mpq_class absolute_norm(const Element& x) {
  Element n = norm(x);
  if (n.ring().kind() == NumberRing::Kind::Quadratic) n = norm(n);
  mpq_class q(n.coeffs()[0], n.denominator());
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------- primes

std::string LocalPrime::label() const {
  std::string s = std::to_string(p_);
  switch (splitting_) {
    case Splitting::Split: return s + ":split" + std::to_string(which_);
    case Splitting::Inert: return ring_.kind() == NumberRing::Kind::Rational ? s : s + ":inert";
    case Splitting::Ramified: return s + ":ramified";
  }
  return s;
}

namespace {

Element find_ramified_uniformizer(const NumberRing& R, long p, long root) {
  const long tr = R.theta_trace(), nm = R.theta_norm();
  for (long b = 1; b <= 40; ++b) {
    for (long i = 0; i <= 400; ++i) {
      long a = (i % 2 == 1) ? (i + 1) / 2 : -(i / 2);
      mpz_class A = a, B = b;
      mpz_class n = A * A + A * B * tr + B * B * nm;
      if (n == p || n == -p) return Element::quadratic(R, A, B);
    }
  }
  // t - root has norm g(root), exactly divisible by p
  return Element::quadratic(R, -root, 1);
}

}  // namespace

std::vector<LocalPrime> primes_over(const NumberRing& R, long p) {
  if (p < 2 || mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 30) == 0)
    throw std::invalid_argument(std::to_string(p) + " is not a prime");
  std::vector<LocalPrime> out;
  LocalPrime P;
  P.ring_ = R;
  P.p_ = p;
  switch (R.kind()) {
    case NumberRing::Kind::Rational:
      P.splitting_ = Splitting::Inert;
      P.pi_ = Element(R, p);
      P.k_ = ResidueField::prime(p);
      out.push_back(P);
      return out;
    case NumberRing::Kind::Tower:
      if (p != 2) throw std::invalid_argument("tower ring supports only the prime above 2");
      P.splitting_ = Splitting::Ramified;
      P.e_ = 3;
      P.f_ = 2;
      P.pi_ = Element(R, {0, 0, 1, 0, 0, 0});
      P.k_ = ResidueField::quadratic(2, 1, 1);
      out.push_back(P);
      return out;
    case NumberRing::Kind::Quadratic:
      break;
  }
  const long tr = R.theta_trace(), nm = R.theta_norm();
  ResidueField Fp = ResidueField::prime(p);
  std::vector<long> roots;
  bool double_root = false;
  if (p == 2) {
    for (long r = 0; r < 2; ++r)
      if ((r * r - tr * r + nm) % 2 == 0) roots.push_back(r);
    if (roots.size() == 1) double_root = true;
  } else {
    mpz_class D = mpz_class(tr * tr) - 4 * mpz_class(nm);
    mpz_class P_ = p;
    if (D % P_ == 0) {
      double_root = true;
      mpz_class inv2 = (P_ + 1) / 2;
      mpz_class r = (tr * inv2) % P_;
      roots.push_back(r.get_si());
    } else if (mpz_legendre(D.get_mpz_t(), P_.get_mpz_t()) == 1) {
      mpz_class Dm = D % P_;
      if (Dm < 0) Dm += P_;
      ResidueField::Elem s;
      Fp.sqrt(Fp.from_int(Dm.get_si()), s);
      mpz_class inv2 = (P_ + 1) / 2;
      for (int sign : {1, -1}) {
        mpz_class r = ((tr + sign * mpz_class(s.a)) * inv2) % P_;
        if (r < 0) r += P_;
        roots.push_back(r.get_si());
      }
      std::sort(roots.begin(), roots.end());
    }
  }
  if (double_root) {
    P.splitting_ = Splitting::Ramified;
    P.e_ = 2;
    P.f_ = 1;
    P.root_ = roots[0];
    P.k_ = Fp;
    P.pi_ = find_ramified_uniformizer(R, p, roots[0]);
    out.push_back(P);
  } else if (roots.size() == 2) {
    for (int w = 0; w < 2; ++w) {
      P.splitting_ = Splitting::Split;
      P.which_ = w + 1;
      P.e_ = P.f_ = 1;
      P.root_ = roots[static_cast<size_t>(w)];
      P.k_ = Fp;
      P.pi_ = Element(R, p);
      out.push_back(P);
    }
  } else {
    P.splitting_ = Splitting::Inert;
    P.e_ = 1;
    P.f_ = 2;
    P.k_ = ResidueField::quadratic(p, tr, nm);
    P.pi_ = Element(R, p);
    out.push_back(P);
  }
  return out;
}

std::vector<LocalPrime> primes_over_two(const NumberRing& R) { return primes_over(R, 2); }

long valuation(const mpz_class& n, long p) {
  if (n == 0) return kInfiniteValuation;
  mpz_class P = p;
  mpz_class t = n;
  return static_cast<long>(mpz_remove(t.get_mpz_t(), t.get_mpz_t(), P.get_mpz_t()));
}

mpz_class hensel_root(const LocalPrime& P, unsigned digits) {
  if (P.splitting() != Splitting::Split) throw std::invalid_argument("hensel_root needs a split prime");
  const NumberRing& R = P.ring();
  const mpz_class tr = R.theta_trace(), nm = R.theta_norm();
  const mpz_class mod = pow_mpz(P.p(), digits);
  mpz_class r = P.residue_root();
  for (unsigned prec = 1; prec < digits;) {
    prec *= 2;
    mpz_class g = r * r - tr * r + nm;
    mpz_class dg = 2 * r - tr;
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), dg.get_mpz_t(), mod.get_mpz_t()) == 0)
      throw std::logic_error("derivative not invertible at split prime");
    r = (r - g * inv) % mod;
    if (r < 0) r += mod;
  }
  r %= mod;
  if (r < 0) r += mod;
  return r;
}

long split_valuation(const Element& x, const LocalPrime& P, unsigned start_digits) {
  if (x.is_zero()) return kInfiniteValuation;
  const Element a = x.numerator();
  unsigned digits = std::max(1u, start_digits);
  constexpr unsigned kCeiling = 1u << 20;
  while (digits <= kCeiling) {
    mpz_class r = hensel_root(P, digits);
    mpz_class mod = pow_mpz(P.p(), digits);
    mpz_class v = (a.coeffs()[0] + a.coeffs()[1] * r) % mod;
    if (v != 0) return valuation(v, P.p()) - P.e() * valuation(x.denominator(), P.p());
    digits *= 2;
  }
  throw std::runtime_error("split-prime valuation exceeded the Hensel precision ceiling");
}

namespace {

unsigned default_digits(long p) {
  unsigned d = 0;
  mpz_class v = 1;
  while (mpz_sizeinbase(v.get_mpz_t(), 2) <= 64) {
    v *= p;
    ++d;
  }
  return d;
}

long integral_valuation(const Element& a, const LocalPrime& P) {
  const long p = P.p();
  const auto& c = a.coeffs();
  switch (P.ring().kind()) {
    case NumberRing::Kind::Rational:
      return valuation(c[0], p);
    case NumberRing::Kind::Tower: {
      long best = kInfiniteValuation;
      for (long i = 0; i < 3; ++i) {
        long v = std::min(valuation(c[static_cast<size_t>(2 * i)], 2), valuation(c[static_cast<size_t>(2 * i + 1)], 2));
        if (v != kInfiniteValuation) best = std::min(best, 3 * v + i);
      }
      return best;
    }
    case NumberRing::Kind::Quadratic:
      break;
  }
  switch (P.splitting()) {
    case Splitting::Inert:
      return std::min(valuation(c[0], p), valuation(c[1], p));
    case Splitting::Ramified: {
      Element n = a * a.adjugate();
      return valuation(n.coeffs()[0], p);
    }
    case Splitting::Split:
      return split_valuation(a, P, default_digits(p));
  }
  return 0;
}

}  // namespace

long valuation(const Element& x, const LocalPrime& P) {
  if (!(x.ring() == P.ring())) throw std::invalid_argument("element is not in the prime's ring");
  if (x.is_zero()) return kInfiniteValuation;
  return integral_valuation(x.numerator(), P) - P.e() * valuation(x.denominator(), P.p());
}

ResidueField::Elem reduce(const Element& x, const LocalPrime& P) {
  if (!(x.ring() == P.ring())) throw std::invalid_argument("element is not in the prime's ring");
  const ResidueField& k = P.residue_field();
  if (x.is_zero()) return k.zero();
  if (valuation(x, P) < 0) throw std::domain_error("reduction of a non-integral element");
  const long p = P.p();
  mpz_class d = x.denominator();
  mpz_class P_ = p;
  unsigned long s = static_cast<unsigned long>(mpz_remove(d.get_mpz_t(), d.get_mpz_t(), P_.get_mpz_t()));
  mpz_class ps = pow_mpz(p, s);
  std::vector<mpz_class> c = x.coeffs();
  auto modp = [&](const mpz_class& v) {
    mpz_class r = v % P_;
    if (r < 0) r += P_;
    return r.get_si();
  };
  ResidueField::Elem num;
  if (P.ring().kind() == NumberRing::Kind::Quadratic && P.splitting() == Splitting::Split) {
    mpz_class r = hensel_root(P, static_cast<unsigned>(s + 1));
    mpz_class mod = ps * p;
    mpz_class v = (c[0] + c[1] * r) % mod;
    if (v < 0) v += mod;
    if (v % ps != 0) throw std::logic_error("split reduction: numerator not divisible");
    num = k.from_int(modp(v / ps));
  } else {
    for (auto& ci : c) {
      if (ci % ps != 0) throw std::logic_error("reduction: numerator not divisible by p^s");
      mpz_divexact(ci.get_mpz_t(), ci.get_mpz_t(), ps.get_mpz_t());
    }
    switch (P.ring().kind()) {
      case NumberRing::Kind::Rational:
        num = k.from_int(modp(c[0]));
        break;
      case NumberRing::Kind::Tower:
        num = {modp(c[0]), modp(c[1])};
        break;
      case NumberRing::Kind::Quadratic:
        if (P.splitting() == Splitting::Inert) {
          num = {modp(c[0]), modp(c[1])};
        } else {
          num = k.from_int(modp(c[0] + c[1] * P.residue_root()));
        }
        break;
    }
  }
  return k.div(num, k.from_int(modp(d)));
}

Element lift(const ResidueField::Elem& x, const LocalPrime& P) {
  const NumberRing& R = P.ring();
  switch (R.kind()) {
    case NumberRing::Kind::Rational:
      return Element(R, x.a);
    case NumberRing::Kind::Tower:
      return Element(R, {x.a, x.b, 0, 0, 0, 0});
    case NumberRing::Kind::Quadratic:
      if (P.splitting() == Splitting::Inert) return Element::quadratic(R, x.a, x.b);
      return Element(R, x.a);
  }
  return Element(R);
}

Element divide_by_uniformizer(const Element& x, const LocalPrime& P, long k) {
  if (k == 0) return x;
  if (k < 0) return x * P.uniformizer().pow(static_cast<unsigned>(-k));
  return x / P.uniformizer().pow(static_cast<unsigned>(k));
}

// ---------------------------------------------------------------- discriminants

std::optional<FundamentalDiscriminantInfo> fundamental_discriminant(long d) {
  if (d == 0 || d == 1) return std::nullopt;  // 1 would be m = 1
  FundamentalDiscriminantInfo info;
  info.value = d;
  long odd = d;
  long m4 = mod4(d);
  if (m4 == 1) {
    if (!is_squarefree(d)) return std::nullopt;
    info.nu = 0;
  } else if (m4 == 0) {
    long k = d / 4;
    long k4 = mod4(k);
    if ((k4 != 2 && k4 != 3) || !is_squarefree(k)) return std::nullopt;
    if (k4 == 3) {
      info.nu = 2;
      odd = k;
    } else {
      info.nu = 3;
      odd = k / 2;
    }
  } else {
    return std::nullopt;
  }
  long P = odd < 0 ? -odd : odd;
  for (long q = 3, v = P; v > 1; q += 2) {
    if (q * q > v) {
      info.odd_primes.push_back(v);
      break;
    }
    if (v % q == 0) {
      info.odd_primes.push_back(q);
      v /= q;
    }
  }
  // d = epsilon * (-1/P) * 2^nu * P
  int chi = mod4(P) == 1 ? 1 : -1;
  long base = chi * (1L << info.nu) * P;
  info.epsilon = d / base > 0 ? 1 : -1;
  if (info.nu == 2 && info.epsilon != -1) throw std::logic_error("fundamental discriminant sign law violated");
  return info;
}

bool is_fundamental_discriminant(long d) { return fundamental_discriminant(d).has_value(); }

PureCubicDiscriminant pure_cubic_discriminant(long m) {
  long v = m < 0 ? -m : m;
  if (v < 2) throw std::invalid_argument("pure cubic parameter must satisfy |m| >= 2");
  long a = 1, b = 1, rad = 1;
  for (long q = 2; v > 1; ++q) {
    if (q * q > v) q = v;
    int e = 0;
    while (v % q == 0) {
      v /= q;
      ++e;
    }
    if (e % 3 == 1) a *= q;
    if (e % 3 == 2) b *= q;
    if (e % 3 != 0) rad *= q;
  }
  if (a == 1 && b == 1) throw std::invalid_argument(std::to_string(m) + " is a perfect cube");
  PureCubicDiscriminant out;
  long a2 = (a % 9) * (a % 9) % 9, b2 = (b % 9) * (b % 9) % 9;
  out.f = a2 != b2 ? 3 * rad : rad;
  out.d_K = -3 * out.f * out.f;
  return out;
}

bool s3_theorem_applies(long m) { return pure_cubic_discriminant(m).f % 2 == 0; }

std::vector<std::pair<long, long>> factor_integer(mpz_class n) {
  if (n == 0) throw std::invalid_argument("cannot factor zero");
  if (n < 0) n = -n;
  std::vector<std::pair<long, long>> out;
  constexpr long kTrialBound = 10000000;
  long q = 2;
  for (; q <= kTrialBound && mpz_class(q) * q <= n; q += (q == 2 ? 1 : 2)) {
    long e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(q))) {
      n /= q;
      ++e;
    }
    if (e) out.emplace_back(q, e);
  }
  if (n > 1) {
    if (mpz_class(q) * q <= n && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
      throw std::runtime_error("integer too large to factor by trial division");
    if (!n.fits_slong_p()) throw std::runtime_error("prime factor exceeds supported range");
    out.emplace_back(n.get_si(), 1);
  }
  return out;
}

}  // namespace kummerlab
