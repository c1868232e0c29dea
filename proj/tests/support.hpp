#pragma once

#include <random>
#include <string>

#include "kummerlab/curvefile.hpp"
#include "kummerlab/numring.hpp"
#include "kummerlab/weierstrass.hpp"

namespace testsupport {

using namespace kummerlab;

inline std::string corpus(const std::string& name) { return std::string(KUMMERLAB_TEST_CORPUS) + "/" + name + ".json"; }

inline WeierstrassModel corpus_model(const std::string& name) { return parse_curve_file(corpus(name)).model; }

inline Element q(const NumberRing& R, long x, long y) { return Element(R, {mpz_class(x), mpz_class(y)}); }

inline Element random_element(std::mt19937_64& rng, const NumberRing& R, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  std::vector<mpz_class> c(static_cast<size_t>(R.degree()));
  for (auto& x : c) x = d(rng);
  return Element(R, c);
}

// random model with nonzero discriminant
inline WeierstrassModel random_model(std::mt19937_64& rng, const NumberRing& R, long bound) {
  for (;;) {
    Element a[5];
    for (auto& x : a) x = random_element(rng, R, bound);
    const auto I = invariants_of({a[0], a[1], a[2], a[3], a[4]});
    if (!I.discriminant.is_zero()) return WeierstrassModel(R, a[0], a[1], a[2], a[3], a[4]);
  }
}

inline std::vector<NumberRing> sample_rings() {
  return {NumberRing::rational(),     NumberRing::quadratic(-1), NumberRing::quadratic(-2),
          NumberRing::quadratic(-3),  NumberRing::quadratic(7),  NumberRing::quadratic(41),
          NumberRing::quadratic(65),  NumberRing::quadratic(5),  NumberRing::tower(2)};
}

}  // namespace testsupport
