#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace kummerlab {

// Coefficient fields for the exact linear algebra: the rationals, and prime
// fields F_p (p odd or 2, elements stored as 0..p-1).
struct Rationals {
  using T = mpq_class;
  long characteristic() const { return 0; }
  T from(long n) const { return T(n); }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T neg(const T& a) const { return -a; }
  T inv(const T& a) const {
    if (a == 0) throw std::domain_error("division by zero");
    return 1 / a;
  }
  bool is_zero(const T& a) const { return a == 0; }
  bool eq(const T& a, const T& b) const { return a == b; }
  std::string str(const T& a) const { return a.get_str(); }
};

struct PrimeField {
  using T = long;
  long p;
  explicit PrimeField(long prime);
  long characteristic() const { return p; }
  T from(long n) const { return ((n % p) + p) % p; }
  T add(T a, T b) const { return (a + b) % p; }
  T sub(T a, T b) const { return (a - b + p) % p; }
  T mul(T a, T b) const { return static_cast<T>((static_cast<__int128>(a) * b) % p); }
  T neg(T a) const { return a == 0 ? 0 : p - a; }
  T inv(T a) const;
  bool is_zero(T a) const { return a == 0; }
  bool eq(T a, T b) const { return a == b; }
  std::string str(T a) const { return std::to_string(a); }
};

template <class K>
struct ExactMatrix {
  using T = typename K::T;
  K field;
  int rows = 0, cols = 0;
  std::vector<T> a;  // row major

  ExactMatrix(K k, int r, int c) : field(k), rows(r), cols(c), a(static_cast<size_t>(r) * c, k.from(0)) {
    if (r < 0 || c < 0 || r > 16 || c > 16) throw std::invalid_argument("matrix dimensions must be at most 16");
  }
  static ExactMatrix identity(K k, int n) {
    ExactMatrix m(k, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = k.from(1);
    return m;
  }
  static ExactMatrix diagonal(K k, const std::vector<T>& d) {
    ExactMatrix m(k, static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
  }
  T& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const T& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  bool square() const { return rows == cols; }
};

template <class K>
using Poly = std::vector<typename K::T>;  // low degree first, trimmed

template <class K>
void trim(const K& k, Poly<K>& f) {
  while (!f.empty() && k.is_zero(f.back())) f.pop_back();
}

template <class K>
ExactMatrix<K> operator*(const ExactMatrix<K>& x, const ExactMatrix<K>& y) {
  if (x.cols != y.rows) throw std::invalid_argument("dimension mismatch");
  const K& k = x.field;
  ExactMatrix<K> z(k, x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < y.cols; ++j) {
      auto s = k.from(0);
      for (int l = 0; l < x.cols; ++l) s = k.add(s, k.mul(x(i, l), y(l, j)));
      z(i, j) = s;
    }
  return z;
}

template <class K>
ExactMatrix<K> scale(const ExactMatrix<K>& x, const typename K::T& c) {
  ExactMatrix<K> z = x;
  for (auto& e : z.a) e = x.field.mul(e, c);
  return z;
}

template <class K>
bool operator==(const ExactMatrix<K>& x, const ExactMatrix<K>& y) {
  if (x.rows != y.rows || x.cols != y.cols) return false;
  for (size_t i = 0; i < x.a.size(); ++i)
    if (!x.field.eq(x.a[i], y.a[i])) return false;
  return true;
}

template <class K>
ExactMatrix<K> kronecker(const ExactMatrix<K>& f, const ExactMatrix<K>& g) {
  if (!f.square() || !g.square()) throw std::invalid_argument("kronecker product of non-square matrices");
  const K& k = f.field;
  if (f.rows * g.rows > 16) throw std::invalid_argument("kronecker product larger than 16x16");
  ExactMatrix<K> z(k, f.rows * g.rows, f.cols * g.cols);
  for (int i = 0; i < f.rows; ++i)
    for (int j = 0; j < f.cols; ++j)
      for (int r = 0; r < g.rows; ++r)
        for (int c = 0; c < g.cols; ++c) z(i * g.rows + r, j * g.cols + c) = k.mul(f(i, j), g(r, c));
  return z;
}

// Berkowitz: division free, works over any commutative ring.  Monic,
// coefficients low degree first, of det(T - M).
template <class K>
Poly<K> charpoly(const ExactMatrix<K>& M) {
  if (!M.square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const K& k = M.field;
  const int n = M.rows;
  // v holds the coefficients of the characteristic polynomial of the leading
  // (r x r) block, high degree first.
  std::vector<typename K::T> v{k.from(1)};
  for (int r = 0; r < n; ++r) {
    // block: A = M[0..r-1][0..r-1], R = M[r][0..r-1], C = M[0..r-1][r], a = M[r][r]
    std::vector<typename K::T> col(r + 2, k.from(0));  // Toeplitz first column
    col[0] = k.from(1);
    col[1] = k.neg(M(r, r));
    std::vector<typename K::T> x(r);
    for (int i = 0; i < r; ++i) x[i] = M(i, r);
    for (int j = 2; j <= r + 1; ++j) {
      // col[j] = -R A^{j-2} C
      auto s = k.from(0);
      for (int i = 0; i < r; ++i) s = k.add(s, k.mul(M(r, i), x[i]));
      col[j] = k.neg(s);
      std::vector<typename K::T> y(r, k.from(0));
      for (int i = 0; i < r; ++i)
        for (int l = 0; l < r; ++l) y[i] = k.add(y[i], k.mul(M(i, l), x[l]));
      x = std::move(y);
    }
    std::vector<typename K::T> w(r + 2, k.from(0));
    for (int i = 0; i < r + 2; ++i)
      for (int j = 0; j <= i && j < static_cast<int>(v.size()); ++j) w[i] = k.add(w[i], k.mul(col[i - j], v[j]));
    v = std::move(w);
  }
  Poly<K> out(v.rbegin(), v.rend());
  return out;
}

template <class K>
typename K::T eval(const K& k, const Poly<K>& f, const typename K::T& x) {
  auto s = k.from(0);
  for (size_t i = f.size(); i-- > 0;) s = k.add(k.mul(s, x), f[i]);
  return s;
}

// Multiplicity of x as a root of f (f nonzero).
template <class K>
int root_multiplicity(const K& k, Poly<K> f, const typename K::T& x) {
  trim(k, f);
  if (f.empty()) throw std::invalid_argument("multiplicity in the zero polynomial");
  int m = 0;
  while (f.size() > 1 && k.is_zero(eval(k, f, x))) {
    // synthetic division by (T - x)
    Poly<K> q(f.size() - 1);
    auto carry = k.from(0);
    for (size_t i = f.size(); i-- > 1;) {
      carry = k.add(f[i], k.mul(carry, x));
      q[i - 1] = carry;
    }
    f = std::move(q);
    ++m;
  }
  return m;
}

template <class K>
Poly<K> poly_mul(const K& k, const Poly<K>& f, const Poly<K>& g) {
  if (f.empty() || g.empty()) return {};
  Poly<K> h(f.size() + g.size() - 1, k.from(0));
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j) h[i + j] = k.add(h[i + j], k.mul(f[i], g[j]));
  trim(k, h);
  return h;
}

// prod (T - lambda_i mu_j)
template <class K>
Poly<K> eigenvalue_product_poly(const K& k, const std::vector<typename K::T>& lambda,
                                const std::vector<typename K::T>& mu) {
  Poly<K> h{k.from(1)};
  for (const auto& l : lambda)
    for (const auto& m : mu) h = poly_mul(k, h, Poly<K>{k.neg(k.mul(l, m)), k.from(1)});
  return h;
}

template <class K>
int rank(ExactMatrix<K> M) {
  const K& k = M.field;
  int r = 0;
  for (int c = 0; c < M.cols && r < M.rows; ++c) {
    int piv = r;
    while (piv < M.rows && k.is_zero(M(piv, c))) ++piv;
    if (piv == M.rows) continue;
    for (int j = 0; j < M.cols; ++j) std::swap(M(piv, j), M(r, j));
    const auto inv = k.inv(M(r, c));
    for (int i = r + 1; i < M.rows; ++i) {
      const auto t = k.mul(M(i, c), inv);
      for (int j = c; j < M.cols; ++j) M(i, j) = k.sub(M(i, j), k.mul(t, M(r, j)));
    }
    ++r;
  }
  return r;
}

template <class K>
ExactMatrix<K> inverse(const ExactMatrix<K>& M) {
  if (!M.square()) throw std::invalid_argument("inverse of a non-square matrix");
  const K& k = M.field;
  const int n = M.rows;
  ExactMatrix<K> A = M, B = ExactMatrix<K>::identity(k, n);
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && k.is_zero(A(piv, c))) ++piv;
    if (piv == n) throw std::domain_error("matrix is singular");
    for (int j = 0; j < n; ++j) {
      std::swap(A(piv, j), A(c, j));
      std::swap(B(piv, j), B(c, j));
    }
    const auto inv = k.inv(A(c, c));
    for (int j = 0; j < n; ++j) {
      A(c, j) = k.mul(A(c, j), inv);
      B(c, j) = k.mul(B(c, j), inv);
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || k.is_zero(A(i, c))) continue;
      const auto t = A(i, c);
      for (int j = 0; j < n; ++j) {
        A(i, j) = k.sub(A(i, j), k.mul(t, A(c, j)));
        B(i, j) = k.sub(B(i, j), k.mul(t, B(c, j)));
      }
    }
  }
  return B;
}

// The scalar c with M = c I, if M is a homothety.
template <class K>
std::optional<typename K::T> homothety_scalar(const ExactMatrix<K>& M) {
  if (!M.square() || M.rows == 0) return std::nullopt;
  const K& k = M.field;
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j)
      if (i == j ? !k.eq(M(i, j), M(0, 0)) : !k.is_zero(M(i, j))) return std::nullopt;
  return M(0, 0);
}

enum class HomothetyOutcome {
  BothHomotheties,   // multiplicity above the bound and both factors scalar
  NotSemisimple,     // multiplicity above the bound, but a factor is not scalar
  NotTriggered
};
std::string to_string(HomothetyOutcome o);

template <class K>
struct HomothetyResult {
  HomothetyOutcome outcome = HomothetyOutcome::NotTriggered;
  std::optional<typename K::T> alpha;  // eigenvalue of f (x) g
  int multiplicity = 0;                // algebraic multiplicity of alpha
  int bound = 0;                       // mn - min(m, n)
  std::optional<typename K::T> f_scalar, g_scalar;
};

// Multiplicity of alpha in the characteristic polynomial of f (x) g.
template <class K>
HomothetyResult<K> homothety_criterion(const ExactMatrix<K>& f, const ExactMatrix<K>& g,
                                       const typename K::T& alpha) {
  const K& k = f.field;
  if (k.is_zero(alpha)) throw std::invalid_argument("the homothety criterion needs a nonzero eigenvalue");
  HomothetyResult<K> r;
  const int m = f.rows, n = g.rows;
  r.bound = m * n - std::min(m, n);
  r.alpha = alpha;
  r.multiplicity = root_multiplicity(k, charpoly(kronecker(f, g)), alpha);
  if (r.multiplicity <= r.bound) return r;
  r.f_scalar = homothety_scalar(f);
  r.g_scalar = homothety_scalar(g);
  if (r.f_scalar && r.g_scalar) {
    if (!k.eq(k.mul(*r.f_scalar, *r.g_scalar), alpha)) throw std::logic_error("homothety scalars do not multiply to alpha");
    r.outcome = HomothetyOutcome::BothHomotheties;
  } else {
    r.outcome = HomothetyOutcome::NotSemisimple;
  }
  return r;
}

// Searches for an eigenvalue above the bound.  Such an eigenvalue is unique
// and lies in the base field (its conjugates would share the multiplicity).
HomothetyResult<PrimeField> homothety_criterion(const ExactMatrix<PrimeField>& f, const ExactMatrix<PrimeField>& g);
HomothetyResult<Rationals> homothety_criterion(const ExactMatrix<Rationals>& f, const ExactMatrix<Rationals>& g);

// Square-free decomposition over Q (Yun): factors[i] has multiplicity i + 1.
std::vector<Poly<Rationals>> squarefree_decomposition(const Poly<Rationals>& f);

enum class D4Case { FixesBothLegs, SwapsLegs };
D4Case parse_d4_case(const std::string& s);

// alpha times the permutation matrix diag(E_2, 1, 1) or diag(E_2, swap)
template <class K>
ExactMatrix<K> d4_monodromy_matrix(const K& k, D4Case c, const typename K::T& alpha) {
  if (k.is_zero(alpha)) throw std::invalid_argument("alpha must be nonzero");
  ExactMatrix<K> P = ExactMatrix<K>::identity(k, 4);
  if (c == D4Case::SwapsLegs) {
    P(2, 2) = k.from(0);
    P(3, 3) = k.from(0);
    P(2, 3) = k.from(1);
    P(3, 2) = k.from(1);
  }
  return scale(P, alpha);
}

template <class K>
Poly<K> d4_monodromy_charpoly(const K& k, D4Case c, const typename K::T& alpha) {
  return charpoly(d4_monodromy_matrix(k, c, alpha));
}

template <class K>
std::string poly_to_string(const K& k, const Poly<K>& f) {
  std::string s;
  for (size_t i = f.size(); i-- > 0;) {
    if (k.is_zero(f[i])) continue;
    std::string c = k.str(f[i]);
    if (!s.empty()) s += c[0] == '-' ? " - " : " + ";
    else if (c[0] == '-') s += "-";
    if (c[0] == '-') c = c.substr(1);
    if (i == 0 || c != "1") s += c;
    if (i > 0) s += (i == 0 || c != "1" ? "*" : "") + std::string("T") + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return s.empty() ? "0" : s;
}

}  // namespace kummerlab
