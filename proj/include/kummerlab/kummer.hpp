#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kummerlab/effmodel.hpp"
#include "kummerlab/localtate.hpp"

namespace kummerlab {

struct PrimeRecord {
  LocalPrime prime;
  long p = 2;
  TateResult tate;
  long val_key = 0;   // v(b2 a4 + b6) on the minimal model
  Element key_value;  // b2 a4 + b6 on the minimal model
  long d = 0;         // v(2, a1, a3) on the minimal model
  FiberType fiber = FiberType::ConstantZ2;
  int fix_components = 0;
  bool cond_i = true;    // Fix and Sing disjoint
  bool cond_ii = true;   // bad only in char 2 and additive
  bool cond_iii = true;  // fixed-scheme fibre geometrically disconnected (char 2)
};

struct AdmissibilityReport {
  std::vector<PrimeRecord> primes;
  bool verdict = true;
  std::vector<std::string> reasons;
};

// Primes that must be examined: all primes above 2 and above every rational
// prime dividing the norm of the discriminant, sorted by (p, label).
std::vector<LocalPrime> relevant_primes(const WeierstrassModel& E);

AdmissibilityReport check_admissible(const WeierstrassModel& E);

struct PairRecord {
  std::string label;
  bool fix_disconnected_some = true;  // (iii*)
  bool group_schemes_isomorphic = true;  // (iv)
};

struct PairAdmissibilityReport {
  AdmissibilityReport first, second;
  std::vector<PairRecord> primes;
  bool same_bad_primes = true;
  bool verdict = true;
  std::vector<std::string> reasons;
};

PairAdmissibilityReport check_pair_admissible(const WeierstrassModel& E, const WeierstrassModel& E2);

struct RdpConfiguration {
  // type -> count; the critical D4 is listed as "D4crit"
  std::map<std::string, int> counts;
  int rank = 0;
  bool has_critical_d4() const { return counts.count("D4crit") > 0; }
  std::string to_string() const;
};

int rdp_rank(const std::string& type);

// n is the number of points of A_s[2]; fix_components are the component
// counts of the two fixed-scheme fibres (the alpha2 selector).
RdpConfiguration predict_rdp(long p, FiberType G, std::optional<int> n,
                             std::optional<std::pair<int, int>> fix_components);

struct ChecklistPrimeInput {
  std::string label;
  bool good_reduction = true;
  FiberType fiber = FiberType::ConstantZ2;
  bool two_torsion_constant = false;
  std::optional<KrausResult> kraus;  // for bad primes
};

struct ChecklistInputs {
  bool omega_in_field = false;
  bool models_identical = false;
  std::vector<ChecklistPrimeInput> primes;  // primes above 2, both curves merged
};

struct ChecklistPrime {
  std::string label;
  bool critical = false;  // effective model infinitesimal here
  bool good_reduction = true;
  bool two_torsion_constant = false;
  std::optional<int> kraus_order;
  bool satisfied = true;
  std::string route;
};

struct ResolutionChecklist {
  std::vector<ChecklistPrime> primes;
  bool two_torsion_constant = true;     // at every critical good prime
  bool third_root_of_unity = false;
  bool critical_residue_field_equal = true;  // finite residue fields are perfect
  std::string isomorphic_over_sh;       // "certified" or "not certified"
  bool quadratic_good_reduction = true; // at every critical bad prime
  std::string recommendation;           // "none", "adjoin omega", "tame cubic"
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  bool all_pass() const { return failures.empty(); }
};

ResolutionChecklist evaluate_checklist(const ChecklistInputs& in);
ResolutionChecklist resolution_checklist(const WeierstrassModel& E, const WeierstrassModel& E2);

// Number of roots in the completion at P of the monic integral 2-division
// cubic X^3 + b2 X^2 + 8 b4 X + 16 b6 (3 means E[2] is constant there).
int two_torsion_roots(const WeierstrassModel& E, const LocalPrime& P);

// Square root in the ring, if the element is a square there.
std::optional<Element> integral_square_root(const Element& z);

}  // namespace kummerlab
