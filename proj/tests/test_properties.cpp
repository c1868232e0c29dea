#include <doctest.h>

#include "kummerlab/kummer.hpp"
#include "kummerlab/localtate.hpp"
#include "support.hpp"

using namespace kummerlab;
using testsupport::random_element;
using testsupport::random_model;

namespace {

constexpr int kCases = 1000;

// rings over which random draws are cheap enough for the local algorithms
std::vector<NumberRing> quadratic_rings() {
  return {NumberRing::rational(), NumberRing::quadratic(-1), NumberRing::quadratic(-2), NumberRing::quadratic(-3),
          NumberRing::quadratic(7), NumberRing::quadratic(41), NumberRing::quadratic(65)};
}

// a unit of R: +-1, or a power of w in Z[w]
Element random_unit(std::mt19937_64& rng, const NumberRing& R) {
  const Element one(R, 1);
  const Element sign = rng() % 2 ? one : -one;
  if (R.kind() == NumberRing::Kind::Quadratic && R.m() == -3) return sign * testsupport::q(R, 0, 1).pow(rng() % 3);
  if (R.kind() == NumberRing::Kind::Quadratic && R.m() == -1) return sign * testsupport::q(R, 0, 1).pow(rng() % 2);
  return sign;
}

CoordinateChange random_change(std::mt19937_64& rng, const NumberRing& R, bool unit_u) {
  CoordinateChange c;
  c.u = unit_u ? random_unit(rng, R) : random_element(rng, R, 3);
  while (c.u.is_zero()) c.u = random_element(rng, R, 3);
  c.r = random_element(rng, R, 5);
  c.s = random_element(rng, R, 5);
  c.t = random_element(rng, R, 5);
  return c;
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("b and c identities") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < kCases; ++i) {
    const auto& rings = testsupport::sample_rings();
    const auto E = random_model(rng, rings[i % rings.size()], 50);
    const auto I = invariants(E);
    CHECK(4 * I.b8 == I.b2 * I.b6 - I.b4 * I.b4);
    CHECK(1728 * I.discriminant == I.c4.pow(3) - I.c6 * I.c6);
    CHECK(I.j_numerator == I.c4.pow(3));
  }
}

TEST_CASE("key identity decomposition") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < kCases; ++i) {
    const auto& rings = testsupport::sample_rings();
    const auto E = random_model(rng, rings[i % rings.size()], 50);
    const auto I = invariants(E);
    const auto K = key_identity(E);
    CHECK(K.value == I.b2 * E.a4() + I.b6);
    CHECK(K.value == K.four_part + K.a1_part + K.a3_part);
    CHECK(K.four_part == 4 * (E.a2() * E.a4() + E.a6()));
  }
}

TEST_CASE("coordinate changes: scaling of Delta, composition, j invariance") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < kCases; ++i) {
    const auto& rings = testsupport::sample_rings();
    const NumberRing& R = rings[i % rings.size()];
    const auto E = random_model(rng, R, 20);
    const auto c1 = random_change(rng, R, false), c2 = random_change(rng, R, false);
    const auto E1 = transform_unchecked(E, c1);
    const auto I = invariants(E), I1 = invariants(E1);
    CHECK(I1.discriminant * c1.u.pow(12) == I.discriminant);
    CHECK(I1.c4 * c1.u.pow(4) == I.c4);
    CHECK(I1.c6 * c1.u.pow(6) == I.c6);
    CHECK(I1.j_numerator * I.discriminant == I.j_numerator * I1.discriminant);
    CHECK(transform_unchecked(E1, c2) == transform_unchecked(E, compose(c1, c2)));
  }
}

TEST_CASE("above 2: a1 and a3 vanish iff Delta and c4 vanish") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < kCases; ++i) {
    const auto& rings = testsupport::sample_rings();
    const auto E = random_model(rng, rings[i % rings.size()], 8);
    const auto I = invariants(E);
    for (const auto& P : primes_over_two(E.ring())) {
      const bool lhs = valuation(E.a1(), P) > 0 && valuation(E.a3(), P) > 0;
      const bool rhs = valuation(I.discriminant, P) > 0 && valuation(I.c4, P) > 0;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("norms are multiplicative") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < kCases; ++i) {
    const auto& rings = testsupport::sample_rings();
    const NumberRing& R = rings[i % rings.size()];
    const Element x = random_element(rng, R, 1000), y = random_element(rng, R, 1000);
    CHECK(norm(x * y) == norm(x) * norm(y));
    CHECK(absolute_norm(x * y) == absolute_norm(x) * absolute_norm(y));
    CHECK(x * x.adjugate() == Element(R, absolute_norm(x).get_num()));
  }
}

TEST_CASE("valuations are additive and ultrametric") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < kCases; ++i) {
    const auto& rings = testsupport::sample_rings();
    const NumberRing& R = rings[i % rings.size()];
    Element x = random_element(rng, R, 200), y = random_element(rng, R, 200);
    if (x.is_zero() || y.is_zero()) continue;
    for (long p : {2L, 3L, 5L}) {
      if (R.kind() == NumberRing::Kind::Tower && p != 2) continue;  // only 2 is modelled in the tower
      for (const auto& P : primes_over(R, p)) {
        const long vx = valuation(x, P), vy = valuation(y, P);
        CHECK(valuation(x * y, P) == vx + vy);
        if (!(x + y).is_zero()) {
          const long vs = valuation(x + y, P);
          CHECK(vs >= std::min(vx, vy));
          if (vx != vy) CHECK(vs == std::min(vx, vy));
        }
      }
    }
  }
}

TEST_CASE("split valuations do not depend on the starting precision") {
  std::mt19937_64 rng(7);
  const std::vector<NumberRing> split_at_2 = {NumberRing::quadratic(41), NumberRing::quadratic(65),
                                              NumberRing::quadratic(17)};
  for (int i = 0; i < kCases; ++i) {
    const NumberRing& R = split_at_2[i % split_at_2.size()];
    Element x = random_element(rng, R, 1 << 20);
    if (x.is_zero()) continue;
    x *= Element(R, 2).pow(rng() % 4);
    for (const auto& P : primes_over_two(R)) {
      REQUIRE(P.splitting() == Splitting::Split);
      const long v = valuation(x, P);
      CHECK(split_valuation(x, P, 1) == v);
      CHECK(split_valuation(x, P, 40) == v);
    }
  }
}

TEST_CASE("Ogg's formula holds on random models above 2 and 3") {
  std::mt19937_64 rng(8);
  const auto rings = quadratic_rings();
  for (int i = 0; i < kCases; ++i) {
    const NumberRing& R = rings[i % rings.size()];
    const auto E = random_model(rng, R, 6);
    for (long p : {2L, 3L})
      for (const auto& P : primes_over(R, p)) {
        const auto T = tate_algorithm(E, P);
        CHECK(T.val_delta == T.conductor + T.m - 1);
        CHECK(T.symbol.components() == T.m);
        CHECK(is_minimal_at(T.minimal, P));
      }
  }
}

TEST_CASE("the Kodaira symbol is invariant under (1, r, s, t)") {
  std::mt19937_64 rng(9);
  const auto rings = quadratic_rings();
  for (int i = 0; i < kCases; ++i) {
    const NumberRing& R = rings[i % rings.size()];
    const auto E = random_model(rng, R, 6);
    CoordinateChange c = random_change(rng, R, true);
    c.u = Element(R, 1);
    const auto E2 = transform(E, c);
    for (const auto& P : primes_over_two(R)) {
      const auto a = tate_algorithm(E, P), b = tate_algorithm(E2, P);
      CHECK(a.symbol == b.symbol);
      CHECK(a.val_delta == b.val_delta);
    }
  }
}

TEST_CASE("admissibility is invariant under unit coordinate changes") {
  std::mt19937_64 rng(10);
  const std::vector<NumberRing> rings = {NumberRing::quadratic(-3), NumberRing::quadratic(-1),
                                         NumberRing::quadratic(41), NumberRing::rational()};
  for (int i = 0; i < kCases; ++i) {
    const NumberRing& R = rings[i % rings.size()];
    const auto E = random_model(rng, R, 3);
    const auto E2 = transform(E, random_change(rng, R, true));
    CHECK(check_admissible(E).verdict == check_admissible(E2).verdict);
  }
}

}  // TEST_SUITE
