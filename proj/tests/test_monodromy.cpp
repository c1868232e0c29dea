#include <doctest.h>

#include <random>

#include "kummerlab/monodromy.hpp"

using namespace kummerlab;

namespace {

using M = ExactMatrix<PrimeField>;

M mat2(const PrimeField& k, long a, long b, long c, long d) {
  M m(k, 2, 2);
  m(0, 0) = k.from(a);
  m(0, 1) = k.from(b);
  m(1, 0) = k.from(c);
  m(1, 1) = k.from(d);
  return m;
}

std::vector<M> all_2x2(const PrimeField& k) {
  std::vector<M> out;
  const long p = k.p;
  for (long x = 0; x < p * p * p * p; ++x) {
    M m(k, 2, 2);
    long y = x;
    for (int i = 0; i < 4; ++i, y /= p) m.a[i] = y % p;
    out.push_back(m);
  }
  return out;
}

// determinant by elimination, as an oracle for Berkowitz
template <class K>
typename K::T det_elim(ExactMatrix<K> A) {
  const K& k = A.field;
  auto d = k.from(1);
  for (int c = 0; c < A.rows; ++c) {
    int piv = c;
    while (piv < A.rows && k.is_zero(A(piv, c))) ++piv;
    if (piv == A.rows) return k.from(0);
    if (piv != c) {
      for (int j = 0; j < A.cols; ++j) std::swap(A(piv, j), A(c, j));
      d = k.neg(d);
    }
    d = k.mul(d, A(c, c));
    const auto inv = k.inv(A(c, c));
    for (int i = c + 1; i < A.rows; ++i) {
      const auto t = k.mul(A(i, c), inv);
      for (int j = c; j < A.cols; ++j) A(i, j) = k.sub(A(i, j), k.mul(t, A(c, j)));
    }
  }
  return d;
}

bool single_eigenvalue(const PrimeField& k, const M& m) {
  const auto tr = k.add(m(0, 0), m(1, 1));
  const auto det = k.sub(k.mul(m(0, 0), m(1, 1)), k.mul(m(0, 1), m(1, 0)));
  return k.is_zero(k.sub(k.mul(tr, tr), k.mul(k.from(4), det)));
}

}  // namespace

TEST_SUITE("monodromy") {

TEST_CASE("Berkowitz agrees with det(x - M) at every point of F_p") {
  std::mt19937_64 rng(7);
  for (long p : {5L, 7L, 11L}) {
    const PrimeField k(p);
    std::uniform_int_distribution<long> d(0, p - 1);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 1 + trial % 6;
      M A(k, n, n);
      for (auto& e : A.a) e = d(rng);
      const auto chi = charpoly(A);
      REQUIRE(chi.size() == static_cast<size_t>(n + 1));
      CHECK(chi.back() == 1);
      for (long x = 0; x < p; ++x) {
        M B = scale(A, k.from(-1));
        for (int i = 0; i < n; ++i) B(i, i) = k.add(B(i, i), x);
        CHECK(eval(k, chi, x) == det_elim(B));
      }
    }
  }
}

TEST_CASE("Kronecker product examples") {
  const Rationals Q;
  ExactMatrix<Rationals> f(Q, 2, 2), g(Q, 2, 2);
  f(0, 0) = 1;
  f(0, 1) = 2;
  f(1, 0) = 3;
  f(1, 1) = 4;
  g(0, 1) = 1;
  g(1, 0) = 1;
  const auto k = kronecker(f, g);
  CHECK(k.rows == 4);
  CHECK(k(0, 1) == 1);
  CHECK(k(1, 0) == 1);
  CHECK(k(2, 1) == 3);
  CHECK(k(3, 0) == 3);
  CHECK(k(2, 3) == 4);
  CHECK(k(0, 0) == 0);
  // mixed product rule
  CHECK(kronecker(f, g) * kronecker(g, f) == kronecker(f * g, g * f));
  CHECK_THROWS(kronecker(ExactMatrix<Rationals>(Q, 8, 8), ExactMatrix<Rationals>(Q, 3, 3)));
}

TEST_CASE("charpoly of a Kronecker product is prod (T - lambda_i mu_j) on triangular factors") {
  std::mt19937_64 rng(11);
  const PrimeField k(13);
  std::uniform_int_distribution<long> d(0, 12);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + trial % 3, n = 1 + (trial / 3) % 4;
    M f(k, m, m), g(k, n, n);
    std::vector<long> lam, mu;
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) f(i, j) = d(rng);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) g(i, j) = d(rng);
    for (int i = 0; i < m; ++i) lam.push_back(f(i, i));
    for (int j = 0; j < n; ++j) mu.push_back(g(j, j));
    // conjugate so the factors are not visibly triangular
    M P = M::identity(k, m), S = M::identity(k, n);
    for (int i = 0; i + 1 < m; ++i) P(i + 1, i) = d(rng);
    for (int j = 0; j + 1 < n; ++j) S(j, j + 1) = d(rng);
    const M f2 = P * f * inverse(P), g2 = S * g * inverse(S);
    CHECK(charpoly(kronecker(f2, g2)) == eigenvalue_product_poly(k, lam, mu));
  }
}

TEST_CASE("homothety criterion examples") {
  const PrimeField k(5);
  auto r = homothety_criterion(M::diagonal(k, {2, 2}), M::diagonal(k, {3, 3}));
  CHECK(r.outcome == HomothetyOutcome::BothHomotheties);
  CHECK(*r.alpha == 1);
  CHECK(r.multiplicity == 4);
  CHECK(r.bound == 2);
  CHECK(k.mul(*r.f_scalar, *r.g_scalar) == 1);

  r = homothety_criterion(M::diagonal(k, {1, 2}), M::diagonal(k, {1, 1}));
  CHECK(r.outcome == HomothetyOutcome::NotTriggered);

  // unipotent Jordan block (x) identity: (T - 1)^4, yet f is no homothety
  r = homothety_criterion(mat2(k, 1, 1, 0, 1), M::identity(k, 2));
  CHECK(r.multiplicity == 4);
  CHECK(r.outcome == HomothetyOutcome::NotSemisimple);
  CHECK_FALSE(r.f_scalar);

  CHECK_THROWS_AS(homothety_criterion(M::identity(k, 2), M::identity(k, 2), 0L), std::invalid_argument);
}

TEST_CASE("rational homothety criterion") {
  const Rationals Q;
  auto f = ExactMatrix<Rationals>::diagonal(Q, {mpq_class(3), mpq_class(3)});
  auto g = ExactMatrix<Rationals>::diagonal(Q, {mpq_class(-1, 2), mpq_class(-1, 2), mpq_class(-1, 2)});
  const auto r = homothety_criterion(f, g);
  CHECK(r.outcome == HomothetyOutcome::BothHomotheties);
  CHECK(*r.alpha == mpq_class(-3, 2));
  CHECK(r.multiplicity == 6);
  CHECK(r.bound == 4);
}

TEST_CASE("exhaustive corrected lemma over F_3, F_5 and sampled F_7") {
  for (long p : {3L, 5L}) {
    const PrimeField k(p);
    const auto all = all_2x2(k);
    long triggered = 0, scalar = 0;
    for (const auto& f : all)
      for (const auto& g : all) {
        const auto r = homothety_criterion(f, g);
        if (r.outcome == HomothetyOutcome::NotTriggered) continue;
        ++triggered;
        CHECK(single_eigenvalue(k, f));
        CHECK(single_eigenvalue(k, g));
        M shifted = kronecker(f, g);
        for (int i = 0; i < 4; ++i) shifted(i, i) = k.sub(shifted(i, i), *r.alpha);
        const bool semisimple = 4 - rank(shifted) == r.multiplicity;
        if (semisimple) CHECK(r.outcome == HomothetyOutcome::BothHomotheties);
        if (r.outcome == HomothetyOutcome::BothHomotheties) {
          ++scalar;
          CHECK(k.mul(*r.f_scalar, *r.g_scalar) == *r.alpha);
        }
      }
    // the literal statement (every triggered pair is a pair of homotheties) fails
    CHECK(scalar == (p - 1) * (p - 1));
    CHECK(triggered > scalar);
  }
  const PrimeField k(7);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(0, 6);
  for (int trial = 0; trial < 20000; ++trial) {
    // bias towards triggered pairs: upper triangular with equal diagonals
    const long a = 1 + d(rng) % 6, b = 1 + d(rng) % 6;
    const M f = mat2(k, a, d(rng) % 2 ? d(rng) : 0, 0, a);
    const M g = mat2(k, b, d(rng) % 2 ? d(rng) : 0, 0, b);
    M P = mat2(k, 1, d(rng), 0, 1), S = mat2(k, 1, 0, d(rng), 1);
    const auto r = homothety_criterion(P * f * inverse(P), S * g * inverse(S));
    REQUIRE(r.outcome != HomothetyOutcome::NotTriggered);
    CHECK(*r.alpha == k.mul(a, b));
    const bool both_scalar = f(0, 1) == 0 && g(0, 1) == 0;
    CHECK((r.outcome == HomothetyOutcome::BothHomotheties) == both_scalar);
  }
}

TEST_CASE("D4 monodromy characteristic polynomials") {
  const Rationals Q;
  CHECK(poly_to_string(Q, d4_monodromy_charpoly(Q, D4Case::SwapsLegs, Q.from(1))) == "T^4 - 2*T^3 + 2*T - 1");
  CHECK(poly_to_string(Q, d4_monodromy_charpoly(Q, D4Case::SwapsLegs, Q.from(3))) == "T^4 - 6*T^3 + 54*T - 81");
  CHECK(poly_to_string(Q, d4_monodromy_charpoly(Q, D4Case::FixesBothLegs, Q.from(2))) ==
        "T^4 - 8*T^3 + 24*T^2 - 32*T + 16");
  CHECK(poly_to_string(Q, d4_monodromy_charpoly(Q, D4Case::FixesBothLegs, Q.from(-1))) ==
        "T^4 + 4*T^3 + 6*T^2 + 4*T + 1");
  CHECK_THROWS(d4_monodromy_matrix(Q, D4Case::SwapsLegs, Q.from(0)));
  CHECK(parse_d4_case("swaps") == D4Case::SwapsLegs);
  CHECK_THROWS(parse_d4_case("rotates"));
}

TEST_CASE("the swapping case admits no 2x2 (x) 2x2 factorization over F_3") {
  const PrimeField k(3);
  const auto target = d4_monodromy_charpoly(k, D4Case::SwapsLegs, k.from(1));
  CHECK(root_multiplicity(k, target, 1L) == 3);
  const auto all = all_2x2(k);
  long hits = 0;
  for (const auto& f : all)
    for (const auto& g : all)
      if (charpoly(kronecker(f, g)) == target) ++hits;
  CHECK(hits == 0);
  // the fixing case factors as alpha I (x) I
  const auto fixes = d4_monodromy_charpoly(k, D4Case::FixesBothLegs, k.from(2));
  CHECK(charpoly(kronecker(M::diagonal(k, {2, 2}), M::identity(k, 2))) == fixes);
}

TEST_CASE("square-free decomposition over Q") {
  const Rationals Q;
  // (T - 1)^3 (T + 1)
  const auto chi = d4_monodromy_charpoly(Q, D4Case::SwapsLegs, Q.from(1));
  const auto parts = squarefree_decomposition(chi);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == Poly<Rationals>{mpq_class(1), mpq_class(1)});
  CHECK(parts[1] == Poly<Rationals>{mpq_class(1)});
  CHECK(parts[2] == Poly<Rationals>{mpq_class(-1), mpq_class(1)});
}

TEST_CASE("prime field construction") {
  CHECK_THROWS(PrimeField(9));
  CHECK_THROWS(PrimeField(1));
  const PrimeField k(101);
  for (long a = 1; a < 101; ++a) CHECK(k.mul(a, k.inv(a)) == 1);
}

}  // TEST_SUITE
