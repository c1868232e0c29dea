#include "kummerlab/dualgraph.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace kummerlab {

int DualGraph::add_vertex(std::string name, long self_intersection, Mark mark) {
  names_.push_back(std::move(name));
  self_.push_back(self_intersection);
  marks_.push_back(mark);
  return size() - 1;
}

void DualGraph::add_edge(int a, int b, long multiplicity) {
  if (a == b || a < 0 || b < 0 || a >= size() || b >= size()) throw std::invalid_argument("bad edge");
  if (multiplicity <= 0) throw std::invalid_argument("edge multiplicity must be positive");
  edges_[{std::min(a, b), std::max(a, b)}] += multiplicity;
}

long DualGraph::edge(int a, int b) const {
  auto it = edges_.find({std::min(a, b), std::max(a, b)});
  return it == edges_.end() ? 0 : it->second;
}

std::vector<int> DualGraph::neighbours(int v) const {
  std::vector<int> out;
  for (const auto& [e, m] : edges_) {
    if (e.first == v) out.push_back(e.second);
    if (e.second == v) out.push_back(e.first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int DualGraph::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

IntMatrix DualGraph::intersection_matrix() const {
  const int n = size();
  IntMatrix M(n, std::vector<mpz_class>(n, 0));
  for (int i = 0; i < n; ++i) M[i][i] = self_[i];
  for (const auto& [e, m] : edges_) {
    M[e.first][e.second] = m;
    M[e.second][e.first] = m;
  }
  return M;
}

DualGraph DualGraph::induced(const std::vector<int>& vertices) const {
  DualGraph g;
  for (int v : vertices) g.add_vertex(names_.at(v), self_.at(v), marks_.at(v));
  for (size_t i = 0; i < vertices.size(); ++i)
    for (size_t j = i + 1; j < vertices.size(); ++j)
      if (long m = edge(vertices[i], vertices[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j), m);
  return g;
}

std::vector<std::vector<int>> DualGraph::components(const std::vector<int>& vertices) const {
  std::set<int> left(vertices.begin(), vertices.end());
  std::vector<std::vector<int>> out;
  while (!left.empty()) {
    std::vector<int> comp, stack{*left.begin()};
    left.erase(left.begin());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : neighbours(v))
        if (left.erase(w)) stack.push_back(w);
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(comp);
  }
  return out;
}

bool DualGraph::connected() const {
  std::vector<int> all(size());
  for (int i = 0; i < size(); ++i) all[i] = i;
  return size() > 0 && components(all).size() == 1;
}

// ---------------------------------------------------------------- Dynkin

namespace {

DualGraph chain(const std::string& prefix, int n) {
  DualGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex(prefix + std::to_string(i + 1));
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

}  // namespace

DualGraph dynkin(char type, int n) {
  switch (type) {
    case 'A':
      if (n < 1) break;
      return chain("E", n);
    case 'D': {
      if (n < 4) break;
      // chain E1..E(n-1) with E(n) attached to E(n-2)
      DualGraph g = chain("E", n - 1);
      int v = g.add_vertex("E" + std::to_string(n));
      g.add_edge(n - 3, v);
      return g;
    }
    case 'E': {
      if (n < 6 || n > 8) break;
      // Bourbaki: 1-3-4-5-6(-7-8), 2 attached to 4
      DualGraph g;
      for (int i = 1; i <= n; ++i) g.add_vertex("E" + std::to_string(i));
      g.add_edge(0, 2);
      g.add_edge(2, 3);
      g.add_edge(1, 3);
      for (int i = 4; i < n; ++i) g.add_edge(i - 1, i);
      return g;
    }
    default:
      break;
  }
  throw std::invalid_argument(std::string("no Dynkin diagram ") + type + std::to_string(n));
}

DualGraph affine_dynkin(char type, int n) {
  DualGraph g = dynkin(type, n);
  const int z = g.add_vertex("E0");
  switch (type) {
    case 'A':
      if (n == 1) {
        g.add_edge(0, z, 2);
      } else {
        g.add_edge(0, z);
        g.add_edge(n - 1, z);
      }
      break;
    case 'D':
      g.add_edge(1, z);  // second vertex of the long chain
      break;
    case 'E':
      if (n == 6) g.add_edge(1, z);
      if (n == 7) g.add_edge(0, z);
      if (n == 8) g.add_edge(7, z);
      break;
  }
  return g;
}

DualGraph parse_graph(const std::string& spec) {
  std::string s = spec;
  bool affine = false;
  if (!s.empty() && s[0] == '~') {
    affine = true;
    s = s.substr(1);
  }
  if (s.size() < 2 || !std::isalpha(static_cast<unsigned char>(s[0])))
    throw std::invalid_argument("graph must look like A1, D4, E8 or ~D4");
  int n = 0;
  try {
    size_t used = 0;
    n = std::stoi(s.substr(1), &used);
    if (used != s.size() - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("graph must look like A1, D4, E8 or ~D4");
  }
  const char t = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return affine ? affine_dynkin(t, n) : dynkin(t, n);
}

// ---------------------------------------------------------------- definiteness

mpz_class determinant(IntMatrix M) {
  const size_t n = M.size();
  mpz_class prev = 1;
  int sign = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && M[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(M[piv], M[k]);
      sign = -sign;
    }
    for (size_t r = k + 1; r < n; ++r) {
      for (size_t c = k + 1; c < n; ++c) {
        M[r][c] = M[r][c] * M[k][k] - M[r][k] * M[k][c];
        mpz_divexact(M[r][c].get_mpz_t(), M[r][c].get_mpz_t(), prev.get_mpz_t());
      }
      M[r][k] = 0;
    }
    prev = M[k][k];
  }
  return n == 0 ? mpz_class(1) : mpz_class(sign * prev);
}

std::vector<mpz_class> leading_minors(const IntMatrix& M) {
  std::vector<mpz_class> minors;
  for (size_t k = 1; k <= M.size(); ++k) {
    IntMatrix sub(k, std::vector<mpz_class>(k));
    for (size_t r = 0; r < k; ++r)
      for (size_t c = 0; c < k; ++c) sub[r][c] = M[r][c];
    minors.push_back(determinant(std::move(sub)));
  }
  return minors;
}

bool is_negative_definite(const IntMatrix& M) {
  if (M.empty()) return true;
  const auto minors = leading_minors(M);
  for (size_t k = 0; k < minors.size(); ++k) {
    const int s = sgn(minors[k]);
    // (-1)^(k+1) minor_(k+1) > 0
    if ((k % 2 == 0 ? -s : s) <= 0) return false;
  }
  return true;
}

bool is_negative_definite(const DualGraph& g) { return is_negative_definite(g.intersection_matrix()); }

FundamentalCycle fundamental_cycle(const DualGraph& g) {
  if (!g.connected()) throw std::invalid_argument("fundamental cycle needs a connected graph");
  if (!is_negative_definite(g)) throw std::invalid_argument("intersection matrix is not negative definite");
  const IntMatrix M = g.intersection_matrix();
  const int n = g.size();
  std::vector<long> z(n, 1);
  auto dot = [&](int j) {
    mpz_class s = 0;
    for (int i = 0; i < n; ++i) s += z[i] * M[i][j];
    return s;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (int j = 0; j < n; ++j) {
      if (dot(j) > 0) {
        ++z[j];
        changed = true;
        break;
      }
    }
  }
  mpz_class sq = 0;
  for (int j = 0; j < n; ++j) sq += z[j] * dot(j);
  return {z, sq.get_si()};
}

std::string classify_ade(const DualGraph& g) {
  const int n = g.size();
  if (n == 0) throw std::invalid_argument("empty graph");
  if (!g.connected()) throw std::invalid_argument("graph is not connected");
  int edges = 0;
  for (int v = 0; v < n; ++v) {
    if (g.self_intersection(v) != -2) throw std::invalid_argument("not a (-2)-configuration");
    for (int w : g.neighbours(v))
      if (w > v) {
        if (g.edge(v, w) != 1) throw std::invalid_argument("curves do not meet transversally");
        ++edges;
      }
  }
  if (edges != n - 1) throw std::invalid_argument("dual graph is not a tree");
  std::vector<int> branch;
  for (int v = 0; v < n; ++v)
    if (g.neighbours(v).size() > 2) branch.push_back(v);
  if (branch.empty()) return "A" + std::to_string(n);
  if (branch.size() > 1 || g.neighbours(branch[0]).size() != 3) throw std::invalid_argument("not an ADE graph");
  std::vector<int> arms;
  for (int start : g.neighbours(branch[0])) {
    int len = 1, prev = branch[0], cur = start;
    for (;;) {
      std::vector<int> next;
      for (int w : g.neighbours(cur))
        if (w != prev) next.push_back(w);
      if (next.empty()) break;
      prev = cur;
      cur = next[0];
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return "E" + std::to_string(n);
  throw std::invalid_argument("not an ADE graph");
}

int rank_of(const SingularityMultiset& s) {
  int r = 0;
  for (const auto& [t, c] : s) r += c * std::stoi(t.substr(1));
  return r;
}

std::string to_string(const SingularityMultiset& s) {
  if (s.empty()) return "{}";
  std::string out = "{";
  for (const auto& [t, c] : s) out += (out.size() > 1 ? ", " : "") + t + ":" + std::to_string(c);
  return out + "}";
}

int ResolutionTrace::resolved_rank() const {
  return rank_of(start.singularities) - rank_of(states.empty() ? start.singularities : states.back().singularities);
}

TraceStart parse_trace_start(const std::string& s) {
  if (s == "two-d8") return TraceStart::TwoD8PlusD4Chain;
  if (s == "four-d4") return TraceStart::FourD4PlusD4;
  throw std::invalid_argument("unrecognized configuration '" + s + "' (expected two-d8 or four-d4)");
}

TraceState trace_state(const DualGraph& g, std::vector<int> visible, std::string step) {
  std::sort(visible.begin(), visible.end());
  visible.erase(std::unique(visible.begin(), visible.end()), visible.end());
  TraceState st;
  st.step = std::move(step);
  st.visible = visible;
  st.fibre_components = static_cast<int>(visible.size());
  std::vector<int> rest;
  for (int v = 0; v < g.size(); ++v)
    if (!std::binary_search(visible.begin(), visible.end(), v)) rest.push_back(v);
  for (const auto& comp : g.components(rest)) st.singularities[classify_ade(g.induced(comp))]++;
  return st;
}

namespace {

// Theta_0 .. Theta_16: Theta_0, Theta_1 on Theta_2; chain Theta_2 .. Theta_14;
// Theta_15, Theta_16 on Theta_14.  Theta_8 is the half-fibre.
DualGraph long_chain_configuration() {
  DualGraph g;
  for (int i = 0; i <= 16; ++i)
    g.add_vertex("Theta" + std::to_string(i), -2, i == 8 ? DualGraph::Mark::HalfFiber : DualGraph::Mark::Exceptional);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  for (int i = 2; i < 14; ++i) g.add_edge(i, i + 1);
  g.add_edge(14, 15);
  g.add_edge(14, 16);
  return g;
}

// Two copies Theta_{r,0..8}: Theta_{r,0}, Theta_{r,1} on Theta_{r,2}; chain
// Theta_{r,2} .. Theta_{r,6}; Theta_{r,7}, Theta_{r,8} on Theta_{r,6}.
// Theta_{r,4} is the half-fibre.
DualGraph twin_configuration() {
  DualGraph g;
  for (int r = 1; r <= 2; ++r) {
    const int b = g.size();
    for (int s = 0; s <= 8; ++s)
      g.add_vertex("Theta" + std::to_string(r) + "," + std::to_string(s), -2,
                   s == 4 ? DualGraph::Mark::HalfFiber : DualGraph::Mark::Exceptional);
    g.add_edge(b + 0, b + 2);
    g.add_edge(b + 1, b + 2);
    for (int s = 2; s < 6; ++s) g.add_edge(b + s, b + s + 1);
    g.add_edge(b + 6, b + 7);
    g.add_edge(b + 6, b + 8);
  }
  return g;
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

}  // namespace

ResolutionTrace partial_resolution_trace(TraceStart start) {
  ResolutionTrace t;
  if (start == TraceStart::TwoD8PlusD4Chain) {
    t.configuration = "two-d8";
    t.graph = long_chain_configuration();
    const DualGraph& g = t.graph;
    t.start = trace_state(g, {8}, "V");
    std::vector<int> vis{6, 8, 10};
    t.states.push_back(trace_state(g, vis, "blow up image of Phi_1 + Phi_2"));
    vis = {4, 6, 7, 8, 9, 10, 12};
    t.states.push_back(trace_state(g, vis, "blow up image of Upsilon_{1,1..4}"));
    vis = range(4, 12);
    vis.push_back(2);
    vis.push_back(14);
    t.states.push_back(trace_state(g, vis, "blow up image of Upsilon_{2,1..4}"));
    t.states.push_back(trace_state(g, range(0, 16), "blow up image of Psi_{2,1} + Psi_{2,4}"));
    t.notes.push_back("Psi_{2,1} and Psi_{2,4} are taken to specialize to Theta_2 and Theta_14");
    t.notes.push_back("the critical D4 is resolved separately by the tame-cubic route and is not tracked here");
  } else {
    t.configuration = "four-d4";
    t.graph = twin_configuration();
    const DualGraph& g = t.graph;
    const TraceState v = trace_state(g, {4, 13}, "V");
    std::vector<int> vis{2, 4, 6, 11, 13, 15};
    t.start = trace_state(g, vis, "Bl_Z(V): blow up image of Phi_1 + ... + Phi_4");
    t.notes.push_back("V itself carries " + to_string(v.singularities) + "; the blowing-up Bl_Z(V) leaves only A1");
    // Upsilon_{i,j} in lexicographic order meet Theta_{r,s}, s in {0,1,3,5,7,8};
    // the last four centres are already Cartier there.
    std::vector<int> targets;
    for (int r = 0; r < 2; ++r)
      for (int s : {0, 1, 3, 5, 7, 8}) targets.push_back(9 * r + s);
    int k = 0;
    for (int i = 1; i <= 4; ++i) {
      for (int j = 1; j <= 4; ++j, ++k) {
        std::string name = "blow up image of Upsilon_{" + std::to_string(i) + "," + std::to_string(j) + "}";
        if (k < static_cast<int>(targets.size())) {
          vis.push_back(targets[k]);
          name += " (" + g.name(targets[k]) + ")";
        } else {
          name += " (isomorphism)";
        }
        t.states.push_back(trace_state(g, vis, name));
      }
    }
    t.notes.push_back("twelve of the sixteen centres resolve an A1; the remaining four are already Cartier");
    t.notes.push_back("the critical D4 is resolved separately by the tame-cubic route and is not tracked here");
  }
  return t;
}

}  // namespace kummerlab
