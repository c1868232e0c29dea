#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kummerlab/curvefile.hpp"
#include "kummerlab/effmodel.hpp"

namespace kummerlab {

struct Report {
  nlohmann::json command = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  std::vector<std::string> notes;
  std::string summary;
  bool pass = true;

  // keys sorted, arrays in computation order
  nlohmann::json to_json() const;
  std::string render(const std::string& format) const;  // "json" or "text"
};

// "auto" selects every relevant prime; an integer selects one entry of the
// relevant-prime list printed by `invariants` (0-based).
struct PrimeSelector {
  std::optional<int> index;
};
PrimeSelector parse_prime_selector(const std::string& s);

Report invariants_report(const CurveRecord& c);
Report tate_report(const CurveRecord& c, PrimeSelector sel);
Report effmodel_report(const CurveRecord& c, PrimeSelector sel);
Report admissible_report(const CurveRecord& c);
Report pair_report(const CurveRecord& a, const CurveRecord& b);
Report predict_report(long p, FiberType fiber, std::optional<int> n, std::optional<std::pair<int, int>> fix);
Report checklist_report(const CurveRecord& a, const CurveRecord& b);
Report lattice_report(const std::optional<std::string>& graph, bool fundamental_cycle,
                      const std::optional<std::string>& trace);

struct VerifyOptions {
  std::string corpus_dir;  // empty: the shipped corpus
  std::string filter;      // substring of expectation ids
  int threads = 1;
};
std::string default_corpus_dir();
Report verify_paper(const VerifyOptions& opt);

}  // namespace kummerlab
