// Command-line front end. Everything goes through the C API.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "kummerlab/kummerlab.h"

namespace {

using CurvePtr = std::unique_ptr<kl_curve, decltype(&kl_curve_free)>;

int exit_code(kl_status s) {
  switch (s) {
    case KL_OK: return 0;
    case KL_NEGATIVE: return 1;
    default: return 2;
  }
}

int finish(kl_status s, char*& text) {
  if (text) {
    if (s == KL_OK || s == KL_NEGATIVE) std::fputs(text, stdout);
    else std::fprintf(stderr, "kummerlab: %s\n", text);
  }
  kl_string_free(text);
  return exit_code(s);
}

std::vector<CurvePtr> load(const std::vector<std::string>& paths, size_t want, int& code) {
  std::vector<CurvePtr> out;
  if (paths.size() != want) {
    std::fprintf(stderr, "kummerlab: expected %zu curve file%s, got %zu\n", want, want == 1 ? "" : "s", paths.size());
    code = 2;
    return out;
  }
  for (const auto& p : paths) {
    kl_curve* c = nullptr;
    char* err = nullptr;
    const kl_status s = kl_curve_load(p.c_str(), &c, &err);
    if (s != KL_OK) {
      std::fprintf(stderr, "kummerlab: %s\n", err ? err : kl_status_name(s));
      kl_string_free(err);
      code = 2;
      out.clear();
      return out;
    }
    out.emplace_back(c, &kl_curve_free);
  }
  code = 0;
  return out;
}

int parse_prime(const std::string& s) {
  if (s == "auto") return -1;
  try {
    size_t used = 0;
    const int i = std::stoi(s, &used);
    if (used == s.size() && i >= 0) return i;
  } catch (const std::exception&) {
  }
  throw CLI::ValidationError("--prime", "expects 'auto' or a non-negative index");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kummer-type K3 constructions: Weierstrass models over small number rings, local reduction, "
               "admissibility and resolution bookkeeping"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::string prime = "auto";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--prime", prime, "'auto' or an index into the relevant-prime list of `invariants`");

  std::vector<std::string> files;
  auto curve_cmd = [&](const char* name, const char* help, const char* arg) {
    auto* c = app.add_subcommand(name, help);
    c->add_option(arg, files, "curve file(s) (JSON)");
    return c;
  };
  auto* invariants = curve_cmd("invariants", "b/c invariants, discriminant, j, key identity, relevant primes", "curve");
  auto* tate = curve_cmd("tate", "Tate's algorithm at each relevant prime", "curve");
  auto* effmodel = curve_cmd("effmodel", "effective model of the 2-torsion group scheme and its fixed scheme", "curve");
  auto* admissible = curve_cmd("admissible", "admissibility of a single curve", "curve");
  auto* pair = curve_cmd("pair", "admissibility of a pair of curves", "curves");
  auto* checklist = curve_cmd("checklist", "base-change checklist for an admissible pair", "curves");

  auto* predict = app.add_subcommand("predict", "rational double points on the quotient, by fibre data");
  long chr = 2;
  std::string fiber;
  int n = -1;
  std::string fix;
  predict->add_option("--char", chr, "residue characteristic")->required();
  predict->add_option("--fiber", fiber, "fibre type of the 2-torsion group scheme: z2, mu2, alpha2")->required();
  predict->add_option("--n", n, "I_n index of the degenerate fibre (odd characteristic)");
  predict->add_option("--fix", fix, "fixed-scheme component counts, e.g. 2,2");

  auto* lattice = app.add_subcommand("lattice", "intersection lattices and partial resolution traces");
  std::string graph, trace;
  bool want_cycle = false;
  lattice->add_option("--graph", graph, "A<n>, D<n>, E6-8, or ~ for the affine version (~D4)");
  lattice->add_flag("--fundamental-cycle", want_cycle, "print the fundamental cycle of --graph");
  lattice->add_option("--trace", trace, "two-d8 or four-d4");

  auto* verify = app.add_subcommand("verify-paper", "run the corpus regression");
  std::string filter, corpus;
  int threads = 1;
  verify->add_option("--filter", filter, "substring of expectation ids");
  verify->add_option("--corpus", corpus, "corpus directory")->default_str(kl_default_corpus_dir());
  verify->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const char* fmt = format.c_str();
  char* out = nullptr;
  int code = 0;
  try {
    const int pidx = parse_prime(prime);
    if (invariants->parsed() || tate->parsed() || effmodel->parsed() || admissible->parsed()) {
      auto cs = load(files, 1, code);
      if (code) return code;
      kl_status s;
      if (invariants->parsed()) s = kl_invariants(cs[0].get(), fmt, &out);
      else if (tate->parsed()) s = kl_tate(cs[0].get(), pidx, fmt, &out);
      else if (effmodel->parsed()) s = kl_effmodel(cs[0].get(), pidx, fmt, &out);
      else s = kl_admissible(cs[0].get(), fmt, &out);
      return finish(s, out);
    }
    if (pair->parsed() || checklist->parsed()) {
      auto cs = load(files, 2, code);
      if (code) return code;
      const kl_status s = pair->parsed() ? kl_pair(cs[0].get(), cs[1].get(), fmt, &out)
                                         : kl_checklist(cs[0].get(), cs[1].get(), fmt, &out);
      return finish(s, out);
    }
    if (predict->parsed()) {
      int f1 = -1, f2 = -1;
      if (!fix.empty()) {
        char extra = 0;
        if (std::sscanf(fix.c_str(), "%d,%d%c", &f1, &f2, &extra) != 2 || f1 < 0 || f2 < 0) {
          std::fprintf(stderr, "kummerlab: --fix expects two counts like 2,2\n");
          return 2;
        }
      }
      const kl_status s = kl_predict(chr, fiber.c_str(), n, f1, f2, fmt, &out);
      return finish(s, out);
    }
    if (lattice->parsed()) {
      const kl_status s = kl_lattice(graph.empty() ? nullptr : graph.c_str(), want_cycle ? 1 : 0,
                                     trace.empty() ? nullptr : trace.c_str(), fmt, &out);
      return finish(s, out);
    }
    if (verify->parsed()) {
      const kl_status s =
          kl_verify_paper(corpus.empty() ? nullptr : corpus.c_str(), filter.c_str(), threads, fmt, &out);
      return finish(s, out);
    }
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "kummerlab: %s\n", e.what());
    return 2;
  }
  return 2;
}
