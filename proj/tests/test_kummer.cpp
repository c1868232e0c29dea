#include <doctest.h>

#include "kummerlab/kummer.hpp"
#include "kummerlab/localtate.hpp"
#include "support.hpp"

using namespace kummerlab;

namespace {

const char* kCorpus[] = {"pinch_plus",   "pinch_minus",  "comalada_28a", "comalada_28b",    "comalada_41a",
                         "comalada_41b", "comalada_65a", "comalada_65b", "comalada_65c",    "comalada_65d",
                         "reject_gaussian", "reject_sqrtm2_a", "reject_sqrtm2_b"};

bool mentions(const std::vector<std::string>& v, const std::string& s) {
  for (const auto& x : v)
    if (x.find(s) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_SUITE("kummer") {

TEST_CASE("single-curve admissibility") {
  CHECK(check_admissible(testsupport::corpus_model("pinch_plus")).verdict);
  CHECK(check_admissible(testsupport::corpus_model("pinch_minus")).verdict);
  CHECK(check_admissible(testsupport::corpus_model("comalada_65a")).verdict);

  const auto g = check_admissible(testsupport::corpus_model("reject_gaussian"));
  CHECK_FALSE(g.verdict);
  CHECK(mentions(g.reasons, "val 6 ≠ 2·1"));
}

TEST_CASE("the three reject equations fail clause (iii) with the printed valuations") {
  const std::pair<const char*, long> cases[] = {{"reject_gaussian", 6}, {"reject_sqrtm2_a", 6}, {"reject_sqrtm2_b", 4}};
  for (const auto& [id, v] : cases) {
    INFO(id);
    const auto a = check_admissible(testsupport::corpus_model(id));
    CHECK_FALSE(a.verdict);
    REQUIRE(a.primes.size() == 1);
    CHECK(a.primes[0].val_key == v);
    CHECK(a.primes[0].d == 1);
    CHECK_FALSE(a.primes[0].cond_i);
    CHECK(a.primes[0].cond_ii);
  }
}

TEST_CASE("odd-characteristic bad reduction is rejected") {
  const NumberRing Z = NumberRing::rational();
  // 11a1: bad (multiplicative) at 11
  const WeierstrassModel E(Z, Element(Z), Element(Z, -1), Element(Z, 1), Element(Z, -10), Element(Z, -20));
  const auto a = check_admissible(E);
  CHECK_FALSE(a.verdict);
  CHECK(mentions(a.reasons, "odd residue characteristic"));
}

TEST_CASE("pairs") {
  const auto Ep = testsupport::corpus_model("pinch_plus");
  const auto Em = testsupport::corpus_model("pinch_minus");
  CHECK(check_pair_admissible(Ep, Em).verdict);
  CHECK(check_pair_admissible(Ep, Ep).verdict);

  // y^2 + xy = x^3 + 1 over Z[w]: good at 2, bad above 433
  const NumberRing R = Ep.ring();
  const WeierstrassModel other(R, Element(R, 1), Element(R), Element(R), Element(R), Element(R, 1));
  const auto p = check_pair_admissible(Ep, other);
  CHECK_FALSE(p.verdict);
  CHECK_FALSE(p.same_bad_primes);

  CHECK_THROWS(check_pair_admissible(Ep, testsupport::corpus_model("comalada_28a")));
}

TEST_CASE("single verdict equals the (E, E) pair verdict on the corpus") {
  for (const char* id : kCorpus) {
    INFO(id);
    const auto E = testsupport::corpus_model(id);
    CHECK(check_admissible(E).verdict == check_pair_admissible(E, E).verdict);
  }
}

TEST_CASE("rational double point predictions") {
  auto c = predict_rdp(3, FiberType::ConstantZ2, std::nullopt, std::nullopt);
  CHECK(c.counts == std::map<std::string, int>{{"A1", 16}});
  CHECK(c.rank == 16);
  c = predict_rdp(2, FiberType::Mu2, std::nullopt, std::nullopt);
  CHECK(c.counts == std::map<std::string, int>{{"A1", 16}, {"D4crit", 1}});
  CHECK(c.rank == 20);
  c = predict_rdp(2, FiberType::ConstantZ2, 4, std::nullopt);
  CHECK(c.counts == std::map<std::string, int>{{"D4", 4}});
  CHECK(c.rank == 16);
  c = predict_rdp(2, FiberType::ConstantZ2, 2, std::nullopt);
  CHECK(c.counts == std::map<std::string, int>{{"D8", 2}});
  c = predict_rdp(2, FiberType::Alpha2, std::nullopt, std::make_pair(2, 2));
  CHECK(c.counts == std::map<std::string, int>{{"D4", 4}, {"D4crit", 1}});
  c = predict_rdp(2, FiberType::Alpha2, std::nullopt, std::make_pair(2, 1));
  CHECK(c.counts == std::map<std::string, int>{{"D8", 2}, {"D4crit", 1}});

  CHECK_THROWS(predict_rdp(2, FiberType::ConstantZ2, std::nullopt, std::nullopt));
  CHECK_THROWS(predict_rdp(2, FiberType::ConstantZ2, 1, std::nullopt));
  CHECK_THROWS(predict_rdp(2, FiberType::Alpha2, std::nullopt, std::nullopt));
  CHECK_THROWS(predict_rdp(3, FiberType::Mu2, std::nullopt, std::nullopt));
}

TEST_CASE("every prediction has rank 16 or 20 and a critical D4 iff infinitesimal") {
  for (long p : {2L, 3L, 5L, 7L})
    for (FiberType G : {FiberType::ConstantZ2, FiberType::Mu2, FiberType::Alpha2})
      for (int n : {-1, 1, 2, 4})
        for (int f1 : {-1, 1, 2})
          for (int f2 : {1, 2}) {
            std::optional<int> nn;
            std::optional<std::pair<int, int>> fix;
            if (n >= 0) nn = n;
            if (f1 >= 0) fix = std::make_pair(f1, f2);
            RdpConfiguration c;
            try {
              c = predict_rdp(p, G, nn, fix);
            } catch (const std::invalid_argument&) {
              continue;
            }
            CHECK((c.rank == 16 || c.rank == 20));
            int r = 0;
            for (const auto& [t, k] : c.counts) r += rdp_rank(t) * k;
            CHECK(r == c.rank);
            CHECK(c.has_critical_d4() == (p == 2 && G != FiberType::ConstantZ2));
          }
}

TEST_CASE("checklist: Comalada pair needs no base change") {
  const auto cl = resolution_checklist(testsupport::corpus_model("comalada_28a"), testsupport::corpus_model("comalada_28b"));
  CHECK(cl.all_pass());
  CHECK(cl.recommendation == "none");
  CHECK(cl.two_torsion_constant);
  CHECK(cl.critical_residue_field_equal);
}

TEST_CASE("checklist: Pinch pair recommends the tame cubic") {
  const auto cl = resolution_checklist(testsupport::corpus_model("pinch_plus"), testsupport::corpus_model("pinch_minus"));
  CHECK(cl.recommendation == "tame cubic");
  CHECK(cl.third_root_of_unity);
  REQUIRE_FALSE(cl.primes.empty());
  for (const auto& p : cl.primes) {
    CHECK(p.critical);
    CHECK(p.kraus_order == 6);
  }
  CHECK(mentions(cl.notes, "I0*"));
}

TEST_CASE("checklist: no third root of unity and bad reduction fails (i)") {
  ChecklistInputs in;
  in.omega_in_field = false;
  ChecklistPrimeInput p;
  p.label = "E@2:ramified";
  p.good_reduction = false;
  p.fiber = FiberType::Mu2;
  KrausResult k;
  k.determined = true;
  k.order = 2;
  k.structure = "C2";
  p.kraus = k;
  in.primes.push_back(p);
  const auto cl = evaluate_checklist(in);
  CHECK_FALSE(cl.all_pass());
  CHECK(mentions(cl.failures, "third root of unity"));
  CHECK(cl.recommendation == "adjoin omega");
}

TEST_CASE("non-admissible pair is refused by the checklist") {
  CHECK_THROWS(resolution_checklist(testsupport::corpus_model("reject_gaussian"),
                                    testsupport::corpus_model("reject_gaussian")));
}

TEST_CASE("two-torsion root counting") {
  // Comalada curves have constant E[2]: three roots in every completion above 2
  for (const char* id : {"comalada_28a", "comalada_41a", "comalada_65c"}) {
    const auto E = testsupport::corpus_model(id);
    for (const auto& P : primes_over_two(E.ring())) CHECK(two_torsion_roots(minimal_model(E, P).model, P) == 3);
  }
  // y^2 + xy = x^3 + 1 over Z_2: X^3 + X^2 + 64 has a single root in Z_2
  const NumberRing Z = NumberRing::rational();
  const WeierstrassModel E(Z, Element(Z, 1), Element(Z), Element(Z), Element(Z), Element(Z, 1));
  CHECK(two_torsion_roots(E, primes_over_two(Z)[0]) == 1);
}

TEST_CASE("integral square roots") {
  const NumberRing R = NumberRing::quadratic(41);
  const Element x = testsupport::q(R, 5, 3);
  const auto s = integral_square_root(x * x);
  REQUIRE(s);
  CHECK((*s == x || *s == -x));
  CHECK_FALSE(integral_square_root(Element(R, 2)));
  CHECK_FALSE(integral_square_root(testsupport::q(R, 0, 1)));
}

}  // TEST_SUITE
