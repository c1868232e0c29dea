#pragma once

#include <optional>
#include <string>

#include "kummerlab/weierstrass.hpp"

namespace kummerlab {

class KodairaSymbol {
 public:
  enum class Kind { I0, In, II, III, IV, I0Star, InStar, IVStar, IIIStar, IIStar };

  KodairaSymbol() = default;
  KodairaSymbol(Kind k, int n = 0);
  // "I0", "I3", "II", "III", "IV", "I0*", "I2*", "IV*", "III*", "II*"
  static KodairaSymbol parse(const std::string& s);

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  int components() const;
  std::string name() const;

  bool operator==(const KodairaSymbol&) const = default;

 private:
  Kind kind_ = Kind::I0;
  int n_ = 0;
};

enum class ReductionClass { Good, Multiplicative, Additive };
std::string to_string(ReductionClass c);

struct TateResult {
  KodairaSymbol symbol;
  int m = 1;               // components of the special fibre
  long val_delta = 0;      // on the minimal model
  long conductor = 0;
  long delta_wild = 0;
  ReductionClass reduction = ReductionClass::Good;
  WeierstrassModel minimal;
  CoordinateChange change;  // input -> minimal
  int scalings = 0;         // number of u = pi rescalings performed
};

TateResult tate_algorithm(const WeierstrassModel& E, const LocalPrime& P);

struct MinimalModel {
  WeierstrassModel model;
  CoordinateChange change;
};
MinimalModel minimal_model(const WeierstrassModel& E, const LocalPrime& P);
bool is_minimal_at(const WeierstrassModel& E, const LocalPrime& P);

// Reinterpret a model over Z[w] in Z[w][c]/(c^3 - a).
WeierstrassModel base_change_tame_cubic(const WeierstrassModel& E, long a = 2);

struct KrausResult {
  bool determined = false;
  int order = 0;
  std::string structure;  // "trivial", "C2xC3"
  std::string reason;
};

// Order of the inertia group cutting out good reduction, on the one branch
// this library certifies: 3 v(c4) >= 12e + v(Delta), 3 does not divide
// v(Delta), and the symbol is neither IV nor IV*.
KrausResult kraus_potential_good_reduction(const WeierstrassModel& E, const LocalPrime& P);

}  // namespace kummerlab
