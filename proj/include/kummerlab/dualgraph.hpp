#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace kummerlab {

using IntMatrix = std::vector<std::vector<mpz_class>>;

class DualGraph {
 public:
  enum class Mark { None, HalfFiber, Exceptional };

  int add_vertex(std::string name, long self_intersection = -2, Mark mark = Mark::None);
  void add_edge(int a, int b, long multiplicity = 1);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int v) const { return names_.at(v); }
  long self_intersection(int v) const { return self_.at(v); }
  Mark mark(int v) const { return marks_.at(v); }
  long edge(int a, int b) const;
  std::vector<int> neighbours(int v) const;
  int index_of(const std::string& name) const;  // -1 if absent

  IntMatrix intersection_matrix() const;
  // Induced subgraph on the given vertices (in the given order).
  DualGraph induced(const std::vector<int>& vertices) const;
  // Connected components of the subgraph induced on `vertices`, each sorted.
  std::vector<std::vector<int>> components(const std::vector<int>& vertices) const;
  bool connected() const;

 private:
  std::vector<std::string> names_;
  std::vector<long> self_;
  std::vector<Mark> marks_;
  std::map<std::pair<int, int>, long> edges_;  // a < b
};

// "A", "D", "E" with n; throws std::invalid_argument on E9, D3, A0, ...
DualGraph dynkin(char type, int n);
// Extended diagram obtained by adjoining the lowest-root vertex.
DualGraph affine_dynkin(char type, int n);
// "A1", "D4", "E8", and "~D4" for the extended diagrams.
DualGraph parse_graph(const std::string& spec);

mpz_class determinant(IntMatrix M);  // fraction-free, with row pivoting
// Leading principal minors via fraction-free elimination, exact.
std::vector<mpz_class> leading_minors(const IntMatrix& M);
bool is_negative_definite(const IntMatrix& M);
bool is_negative_definite(const DualGraph& g);

struct FundamentalCycle {
  std::vector<long> z;
  long self_intersection = 0;  // Z^2
};

FundamentalCycle fundamental_cycle(const DualGraph& g);

// ADE name ("A1", "D6", "E8") of a connected graph whose vertices are all
// (-2)-curves meeting transversally in a tree; throws otherwise.
std::string classify_ade(const DualGraph& g);

using SingularityMultiset = std::map<std::string, int>;
int rank_of(const SingularityMultiset& s);
std::string to_string(const SingularityMultiset& s);

struct TraceState {
  std::string step;            // what was blown up to reach this state
  std::vector<int> visible;    // components of the degenerate fibre
  int fibre_components = 0;
  SingularityMultiset singularities;
};

struct ResolutionTrace {
  std::string configuration;
  DualGraph graph;        // configuration of exceptional curves plus half-fibres
  TraceState start;
  std::vector<TraceState> states;
  std::vector<std::string> notes;
  // rank(start) minus rank(final); equals rank(start) when the trace ends smooth
  int resolved_rank() const;
};

enum class TraceStart { TwoD8PlusD4Chain, FourD4PlusD4 };
TraceStart parse_trace_start(const std::string& s);  // "two-d8", "four-d4"

// State after making `visible` part of the degenerate fibre; the remaining
// curves contract to rational double points.
TraceState trace_state(const DualGraph& g, std::vector<int> visible, std::string step);

ResolutionTrace partial_resolution_trace(TraceStart start);

}  // namespace kummerlab
