#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "kummerlab/report.hpp"
#include "support.hpp"

using namespace kummerlab;
using nlohmann::json;

namespace fs = std::filesystem;

namespace {

std::string error_of(const json& doc) {
  try {
    parse_curve_json(doc);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

// copy of the corpus in a fresh temp directory
fs::path corpus_copy(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("kummerlab_corpus_" + tag + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  for (const auto& e : fs::directory_iterator(KUMMERLAB_TEST_CORPUS)) fs::copy_file(e.path(), dir / e.path().filename());
  return dir;
}

}  // namespace

TEST_SUITE("curvefile") {

TEST_CASE("parses the Pinch curve") {
  const auto rec = parse_curve_file(testsupport::corpus("pinch_plus"));
  CHECK(rec.id == "pinch_plus");
  CHECK(rec.ring.kind() == NumberRing::Kind::Quadratic);
  CHECK(rec.ring.m() == -3);
  CHECK(rec.model.a2() == testsupport::q(rec.ring, 1, 1));
  CHECK(rec.model.a4() == testsupport::q(rec.ring, 0, 1));
  CHECK(rec.expected.contains("tate"));
}

TEST_CASE("missing coefficients are zero and rational rings take bare integers") {
  const auto rec = parse_curve_json(json::parse(R"({"field":{"kind":"rational"},"curve":{"a6":"1"}})"), "x");
  CHECK(rec.id == "x");
  CHECK(rec.model.a1().is_zero());
  CHECK(rec.model.a6() == Element(rec.ring, 1));
  CHECK(element_to_json(rec.model.a6()) == json(1));
  CHECK(field_to_json(rec.ring) == json::parse(R"({"kind":"rational"})"));
}

TEST_CASE("element round trip") {
  for (const auto& R : testsupport::sample_rings()) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
      const Element x = testsupport::random_element(rng, R, 1000);
      CHECK(parse_element(R, element_to_json(x), "x") == x);
    }
    CHECK(parse_field(field_to_json(R)) == R);
  }
}

TEST_CASE("input errors carry a readable message") {
  CHECK(error_of(json::parse(R"({"field":{"kind":"quadratic","m":12},"curve":{"a6":[1,0]}})")).find("field") == 0);
  CHECK(error_of(json::parse(R"({"field":{"kind":"quadratic","m":-1},"curve":{"a4":[1.5,0]}})")).find("not integral") !=
        std::string::npos);
  CHECK(error_of(json::parse(R"({"field":{"kind":"rational"},"curve":{"a4":"1/2"}})")).find("not integral") !=
        std::string::npos);
  CHECK(error_of(json::parse(R"({"field":{"kind":"rational"},"curve":{}})")).find("singular") != std::string::npos);
  CHECK(error_of(json::parse(R"({"field":{"kind":"rational"},"curve":{"a5":1}})")).find("unknown coefficient") !=
        std::string::npos);
  CHECK(error_of(json::parse(R"({"field":{"kind":"cyclotomic"},"curve":{"a6":1}})")).find("unknown kind") !=
        std::string::npos);
  CHECK(error_of(json::parse(R"({"field":{"kind":"quadratic","m":-3},"curve":{"a6":1}})")).find("pair") !=
        std::string::npos);
  CHECK(error_of(json::parse("[1, 2]")).find("top level") != std::string::npos);

  const fs::path bad = fs::temp_directory_path() / "kummerlab_malformed.json";
  std::ofstream(bad) << "{\"field\": ";
  CHECK_THROWS_WITH_AS(parse_curve_file(bad.string()), doctest::Contains("malformed JSON"), InputError);
  fs::remove(bad);
  CHECK_THROWS_AS(parse_curve_file("/nonexistent/curve.json"), InputError);
}

TEST_CASE("verify-paper is green on the shipped corpus") {
  VerifyOptions opt;
  opt.corpus_dir = KUMMERLAB_TEST_CORPUS;
  const auto r = verify_paper(opt);
  CHECK(r.pass);
  CHECK(r.results["total"].get<int>() > 100);
  for (const auto& e : r.results["expectations"])
    if (!e["pass"].get<bool>()) FAIL_CHECK(e["id"].get<std::string>());
}

TEST_CASE("verify-paper output does not depend on the thread count") {
  VerifyOptions one, four;
  one.corpus_dir = four.corpus_dir = KUMMERLAB_TEST_CORPUS;
  one.threads = 1;
  four.threads = 4;
  CHECK(verify_paper(one).render("json") == verify_paper(four).render("json"));
}

TEST_CASE("filter selects expectations by substring") {
  VerifyOptions opt;
  opt.corpus_dir = KUMMERLAB_TEST_CORPUS;
  opt.filter = "pinch";
  const auto r = verify_paper(opt);
  CHECK(r.pass);
  for (const auto& e : r.results["expectations"])
    CHECK(e["id"].get<std::string>().find("pinch") != std::string::npos);
  opt.filter = "no-such-expectation";
  CHECK_FALSE(verify_paper(opt).pass);
}

TEST_CASE("a corrupted expectation fails, and only that one") {
  const fs::path dir = corpus_copy("mutated");
  json doc = json::parse(std::ifstream(dir / "pinch_plus.json"));
  doc["expected"]["tate"]["2:inert"]["symbol"] = "III";
  std::ofstream(dir / "pinch_plus.json") << doc.dump(2);

  VerifyOptions opt;
  opt.corpus_dir = dir.string();
  const auto r = verify_paper(opt);
  CHECK_FALSE(r.pass);
  std::vector<std::string> failed;
  for (const auto& e : r.results["expectations"])
    if (!e["pass"].get<bool>()) failed.push_back(e["id"].get<std::string>());
  CHECK(failed == std::vector<std::string>{"pinch_plus/tate/2:inert"});
  CHECK(r.render("text").find("FAIL pinch_plus/tate/2:inert") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("prime selector") {
  CHECK_FALSE(parse_prime_selector("auto").index);
  CHECK(*parse_prime_selector("1").index == 1);
  CHECK_THROWS(parse_prime_selector("-1"));
  CHECK_THROWS(parse_prime_selector("two"));
}

}  // TEST_SUITE
