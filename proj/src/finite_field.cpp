#include "kummerlab/finite_field.hpp"

#include <limits>
#include <stdexcept>

namespace kummerlab {

ResidueField ResidueField::prime(int64_t p) {
  if (p < 2) throw std::invalid_argument("residue characteristic must be >= 2");
  ResidueField k;
  k.p_ = p;
  k.f_ = 1;
  return k;
}

ResidueField ResidueField::quadratic(int64_t p, int64_t trace, int64_t norm) {
  ResidueField k = prime(p);
  k.f_ = 2;
  k.trace_ = k.red(trace);
  k.norm_ = k.red(norm);
  // irreducibility: no root in F_p
  for (int64_t x = 0; x < p && x < (1 << 20); ++x) {
    int64_t v = k.red(k.mulmod(x, x) - k.mulmod(k.trace_, x) + k.norm_);
    if (v == 0) throw std::invalid_argument("modulus of quadratic residue field is reducible");
  }
  return k;
}

int64_t ResidueField::red(int64_t v) const {
  int64_t r = v % p_;
  return r < 0 ? r + p_ : r;
}

int64_t ResidueField::mulmod(int64_t x, int64_t y) const {
  return static_cast<int64_t>((static_cast<__int128>(x) * y) % p_);
}

int64_t ResidueField::order() const {
  if (f_ == 1) return p_;
  if (p_ > 3037000499LL) return std::numeric_limits<int64_t>::max();
  return p_ * p_;
}

ResidueField::Elem ResidueField::from_int(int64_t n) const { return {red(n), 0}; }

ResidueField::Elem ResidueField::generator() const {
  if (f_ == 1) throw std::logic_error("prime field has no quadratic generator");
  return {0, 1};
}

ResidueField::Elem ResidueField::add(const Elem& x, const Elem& y) const {
  int64_t a = x.a + y.a, b = x.b + y.b;
  if (a >= p_) a -= p_;
  if (b >= p_) b -= p_;
  return {a, b};
}

ResidueField::Elem ResidueField::neg(const Elem& x) const {
  return {x.a == 0 ? 0 : p_ - x.a, x.b == 0 ? 0 : p_ - x.b};
}

ResidueField::Elem ResidueField::sub(const Elem& x, const Elem& y) const { return add(x, neg(y)); }

ResidueField::Elem ResidueField::mul(const Elem& x, const Elem& y) const {
  if (f_ == 1) return {mulmod(x.a, y.a), 0};
  // t^2 = trace*t - norm
  int64_t bd = mulmod(x.b, y.b);
  int64_t a = red(mulmod(x.a, y.a) - mulmod(bd, norm_));
  int64_t b = red(mulmod(x.a, y.b) + mulmod(x.b, y.a) + mulmod(bd, trace_));
  return {a, b};
}

ResidueField::Elem ResidueField::pow(Elem x, uint64_t n) const {
  Elem r = one();
  while (n) {
    if (n & 1) r = mul(r, x);
    x = mul(x, x);
    n >>= 1;
  }
  return r;
}

ResidueField::Elem ResidueField::inv(const Elem& x) const {
  if (is_zero(x)) throw std::domain_error("inverse of zero in residue field");
  uint64_t q = static_cast<uint64_t>(p_);
  if (f_ == 2) q *= static_cast<uint64_t>(p_);
  return pow(x, q - 2);
}

ResidueField::Elem ResidueField::pth_root(const Elem& x) const {
  if (f_ == 1) return x;
  return pow(x, static_cast<uint64_t>(p_));
}

bool ResidueField::sqrt(const Elem& x, Elem& out) const {
  if (is_zero(x)) {
    out = zero();
    return true;
  }
  if (p_ == 2) {
    out = pth_root(x);
    return true;
  }
  uint64_t q = static_cast<uint64_t>(p_);
  if (f_ == 2) q *= static_cast<uint64_t>(p_);
  if (!(pow(x, (q - 1) / 2) == one())) return false;
  // Tonelli-Shanks over F_q
  uint64_t Q = q - 1;
  unsigned s = 0;
  while ((Q & 1) == 0) {
    Q >>= 1;
    ++s;
  }
  Elem z = one();
  bool found = false;
  for (int64_t b = 0; b < p_ && !found; ++b) {
    for (int64_t a = 0; a < p_ && !found; ++a) {
      Elem c{a, f_ == 2 ? b : 0};
      if (is_zero(c)) continue;
      if (!(pow(c, (q - 1) / 2) == one())) {
        z = c;
        found = true;
      }
    }
    if (f_ == 1) break;
  }
  if (!found) throw std::logic_error("no quadratic non-residue found");
  unsigned M = s;
  Elem c = pow(z, Q);
  Elem t = pow(x, Q);
  Elem R = pow(x, (Q + 1) / 2);
  while (!(t == one())) {
    unsigned i = 0;
    Elem tt = t;
    while (!(tt == one())) {
      tt = mul(tt, tt);
      ++i;
    }
    Elem b = c;
    for (unsigned j = 0; j + 1 < M - i; ++j) b = mul(b, b);
    M = i;
    c = mul(b, b);
    t = mul(t, c);
    R = mul(R, b);
  }
  out = R;
  return true;
}

std::vector<ResidueField::Elem> ResidueField::elements() const {
  int64_t q = order();
  if (q > (1 << 20)) throw std::length_error("residue field too large to enumerate");
  std::vector<Elem> out;
  out.reserve(static_cast<size_t>(q));
  for (int64_t b = 0; b < (f_ == 2 ? p_ : 1); ++b)
    for (int64_t a = 0; a < p_; ++a) out.push_back({a, b});
  return out;
}

std::string ResidueField::to_string(const Elem& x) const {
  if (f_ == 1 || x.b == 0) return std::to_string(x.a);
  std::string s;
  if (x.a != 0) s = std::to_string(x.a) + "+";
  if (x.b != 1) s += std::to_string(x.b) + "*";
  return s + "t";
}

namespace kpoly {

using Elem = ResidueField::Elem;

void trim(const ResidueField& k, KPoly& f) {
  while (!f.empty() && k.is_zero(f.back())) f.pop_back();
}

int degree(const ResidueField& k, const KPoly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (!k.is_zero(f[static_cast<size_t>(i)])) return i;
  return -1;
}

Elem eval(const ResidueField& k, const KPoly& f, const Elem& x) {
  Elem r = k.zero();
  for (size_t i = f.size(); i-- > 0;) r = k.add(k.mul(r, x), f[i]);
  return r;
}

KPoly derivative(const ResidueField& k, const KPoly& f) {
  KPoly d;
  for (size_t i = 1; i < f.size(); ++i) d.push_back(k.mul(k.from_int(static_cast<int64_t>(i)), f[i]));
  trim(k, d);
  return d;
}

KPoly mod(const ResidueField& k, KPoly f, const KPoly& g) {
  int dg = degree(k, g);
  if (dg < 0) throw std::domain_error("polynomial division by zero");
  Elem lead_inv = k.inv(g[static_cast<size_t>(dg)]);
  trim(k, f);
  while (degree(k, f) >= dg) {
    int df = degree(k, f);
    Elem q = k.mul(f[static_cast<size_t>(df)], lead_inv);
    for (int i = 0; i <= dg; ++i) {
      size_t idx = static_cast<size_t>(df - dg + i);
      f[idx] = k.sub(f[idx], k.mul(q, g[static_cast<size_t>(i)]));
    }
    trim(k, f);
  }
  return f;
}

KPoly gcd(const ResidueField& k, KPoly f, KPoly g) {
  trim(k, f);
  trim(k, g);
  while (!g.empty()) {
    KPoly r = mod(k, f, g);
    f = std::move(g);
    g = std::move(r);
  }
  if (!f.empty()) {
    Elem li = k.inv(f.back());
    for (auto& c : f) c = k.mul(c, li);
  }
  return f;
}

KPoly shift(const ResidueField& k, const KPoly& f, const Elem& c) {
  // Horner with polynomial accumulator
  KPoly acc;
  for (size_t i = f.size(); i-- > 0;) {
    // acc = acc * (T + c) + f[i]
    KPoly next(acc.size() + 1, k.zero());
    for (size_t j = 0; j < acc.size(); ++j) {
      next[j + 1] = k.add(next[j + 1], acc[j]);
      next[j] = k.add(next[j], k.mul(acc[j], c));
    }
    next[0] = k.add(next[0], f[i]);
    acc = std::move(next);
  }
  trim(k, acc);
  return acc;
}

bool repeated_root(const ResidueField& k, const KPoly& f0, Elem& root) {
  KPoly f = f0;
  trim(k, f);
  int d = degree(k, f);
  if (d < 2) return false;
  KPoly df = derivative(k, f);
  if (df.empty()) {
    // f is a polynomial in T^p; for degree <= 3 this means f = a(T^p - c)
    Elem c = k.neg(k.div(f[0], f.back()));
    root = k.pth_root(c);
    return true;
  }
  KPoly g = gcd(k, f, df);
  int dg = degree(k, g);
  if (dg <= 0) return false;
  if (dg == 1) {
    root = k.neg(g[0]);
    return true;
  }
  if (dg == 2) {
    // g = (T - r)^2
    if (k.characteristic() == 2) {
      root = k.pth_root(g[0]);
    } else {
      root = k.neg(k.div(g[1], k.from_int(2)));
    }
    return true;
  }
  throw std::logic_error("repeated_root expects degree at most 3");
}

int multiplicity(const ResidueField& k, const KPoly& f0, const Elem& c) {
  KPoly f = shift(k, f0, c);
  if (f.empty()) throw std::domain_error("multiplicity in the zero polynomial");
  int m = 0;
  while (m < static_cast<int>(f.size()) && k.is_zero(f[static_cast<size_t>(m)])) ++m;
  return m;
}

int distinct_geometric_roots(const ResidueField& k, const KPoly& f0) {
  KPoly f = f0;
  trim(k, f);
  int d = degree(k, f);
  if (d < 0) throw std::domain_error("zero polynomial has no root count");
  if (d > 3) throw std::invalid_argument("distinct_geometric_roots supports degree <= 3");
  if (d <= 1) return d;
  Elem r;
  if (!repeated_root(k, f, r)) return d;
  int mult = multiplicity(k, f, r);
  return d - mult + 1;
}

std::vector<Elem> roots_by_search(const ResidueField& k, const KPoly& f) {
  std::vector<Elem> out;
  for (const auto& x : k.elements())
    if (k.is_zero(eval(k, f, x))) out.push_back(x);
  return out;
}

}  // namespace kpoly

namespace gf4096 {

namespace {
constexpr unsigned kBits = 12;
constexpr uint32_t kModulus = (1u << 12) | (1u << 6) | (1u << 4) | (1u << 1) | 1u;
}  // namespace

uint16_t mul(uint16_t x, uint16_t y) {
  uint32_t acc = 0;
  uint32_t a = x;
  for (unsigned i = 0; i < kBits; ++i)
    if (y & (1u << i)) acc ^= a << i;
  for (int i = 2 * kBits - 2; i >= static_cast<int>(kBits); --i)
    if (acc & (1u << i)) acc ^= kModulus << (i - kBits);
  return static_cast<uint16_t>(acc);
}

uint16_t pow(uint16_t x, unsigned n) {
  uint16_t r = 1;
  while (n) {
    if (n & 1) r = mul(r, x);
    x = mul(x, x);
    n >>= 1;
  }
  return r;
}

uint16_t embed(const ResidueField& k, const ResidueField::Elem& x) {
  if (k.characteristic() != 2) throw std::invalid_argument("GF(4096) embedding needs characteristic 2");
  if (k.degree() == 1) return static_cast<uint16_t>(x.a & 1);
  if (k.trace_coeff() != 1 || k.norm_coeff() != 1)
    throw std::invalid_argument("F_4 must be presented as t^2 = t + 1");
  // element of order 3 is a root of t^2 + t + 1
  static const uint16_t w = pow(2, 4095 / 3);
  return static_cast<uint16_t>((x.a & 1) ^ ((x.b & 1) ? w : 0));
}

int distinct_roots(const ResidueField& k, const KPoly& f) {
  std::vector<uint16_t> g;
  for (const auto& c : f) g.push_back(embed(k, c));
  while (!g.empty() && g.back() == 0) g.pop_back();
  if (g.empty()) throw std::domain_error("zero polynomial has no root count");
  int count = 0;
  for (uint32_t x = 0; x < 4096; ++x) {
    uint16_t v = 0;
    for (size_t i = g.size(); i-- > 0;) v = static_cast<uint16_t>(mul(v, static_cast<uint16_t>(x)) ^ g[i]);
    if (v == 0) ++count;
  }
  return count;
}

}  // namespace gf4096

}  // namespace kummerlab
