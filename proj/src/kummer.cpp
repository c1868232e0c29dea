#include "kummerlab/kummer.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace kummerlab {

std::vector<LocalPrime> relevant_primes(const WeierstrassModel& E) {
  const NumberRing& R = E.ring();
  mpq_class n = absolute_norm(invariants(E).discriminant);
  if (n.get_den() != 1) throw std::domain_error("discriminant is not integral");
  std::vector<LocalPrime> out = primes_over_two(R);
  for (const auto& [q, e] : factor_integer(n.get_num())) {
    if (q == 2) continue;
    if (R.kind() == NumberRing::Kind::Tower)
      throw std::invalid_argument("tower ring: primes above odd " + std::to_string(q) + " are not supported");
    for (auto& P : primes_over(R, q)) out.push_back(P);
  }
  return out;
}

namespace {

std::string val_string(long v) { return v == kInfiniteValuation ? "inf" : std::to_string(v); }

PrimeRecord examine(const WeierstrassModel& E, const LocalPrime& P) {
  PrimeRecord rec;
  rec.prime = P;
  rec.p = P.p();
  rec.tate = tate_algorithm(E, P);
  const WeierstrassModel& M = rec.tate.minimal;
  KeyIdentity key = key_identity(M);
  rec.key_value = key.value;
  rec.val_key = valuation(key.value, P);
  EffectiveModelFiber G = effective_model_fiber(M, P);
  rec.d = G.d;
  rec.fiber = G.type;
  const bool bad = rec.tate.reduction != ReductionClass::Good;
  if (bad) rec.cond_ii = rec.p == 2 && rec.tate.reduction == ReductionClass::Additive;
  if (rec.p == 2) {
    FixedSchemeFiber F = fixed_scheme_fiber(M, P);
    rec.fix_components = F.components;
    rec.cond_iii = F.geometrically_disconnected();
    if (bad) rec.cond_i = rec.val_key == 2 * rec.d;
  } else {
    rec.fix_components = 0;
  }
  return rec;
}

void collect_reasons(const PrimeRecord& r, std::vector<std::string>& reasons, const std::string& who) {
  const std::string at = who + r.prime.label() + ": ";
  if (!r.cond_ii) {
    if (r.p != 2)
      reasons.push_back(at + "bad reduction (" + r.tate.symbol.name() + ") in odd residue characteristic");
    else
      reasons.push_back(at + "bad reduction is not additive (" + r.tate.symbol.name() + ")");
  }
  if (!r.cond_i)
    reasons.push_back(at + "Fix meets Sing: val " + val_string(r.val_key) + " ≠ 2·" + std::to_string(r.d));
  if (!r.cond_iii)
    reasons.push_back(at + "fixed-scheme fibre is geometrically connected (" + std::to_string(r.fix_components) +
                      " component)");
}

}  // namespace

AdmissibilityReport check_admissible(const WeierstrassModel& E) {
  AdmissibilityReport rep;
  for (const auto& P : relevant_primes(E)) rep.primes.push_back(examine(E, P));
  for (const auto& r : rep.primes) {
    collect_reasons(r, rep.reasons, "");
    rep.verdict = rep.verdict && r.cond_i && r.cond_ii && r.cond_iii;
  }
  return rep;
}

PairAdmissibilityReport check_pair_admissible(const WeierstrassModel& E, const WeierstrassModel& E2) {
  if (!(E.ring() == E2.ring())) throw std::invalid_argument("the two curves live over different rings");
  PairAdmissibilityReport rep;
  rep.first = check_admissible(E);
  rep.second = check_admissible(E2);

  auto bad_set = [](const AdmissibilityReport& a) {
    std::set<std::string> s;
    for (const auto& r : a.primes)
      if (r.tate.reduction != ReductionClass::Good) s.insert(r.prime.label());
    return s;
  };
  const auto b1 = bad_set(rep.first), b2 = bad_set(rep.second);
  rep.same_bad_primes = b1 == b2;
  if (!rep.same_bad_primes) rep.reasons.push_back("the curves have different sets of bad primes");

  bool each_i_ii = true;
  for (const auto* a : {&rep.first, &rep.second}) {
    const std::string who = a == &rep.first ? "E " : "E' ";
    for (const auto& r : a->primes) {
      if (!r.cond_i || !r.cond_ii) {
        each_i_ii = false;
        PrimeRecord only = r;
        only.cond_iii = true;
        collect_reasons(only, rep.reasons, who);
      }
    }
  }

  for (const auto& P : primes_over_two(E.ring())) {
    auto find = [&](const AdmissibilityReport& a) -> const PrimeRecord& {
      for (const auto& r : a.primes)
        if (r.prime == P) return r;
      throw std::logic_error("prime above 2 missing from report");
    };
    const PrimeRecord& r1 = find(rep.first);
    const PrimeRecord& r2 = find(rep.second);
    PairRecord pr;
    pr.label = P.label();
    pr.fix_disconnected_some = r1.cond_iii || r2.cond_iii;
    EffectiveModelFiber G1 = effective_model_fiber(r1.tate.minimal, P);
    EffectiveModelFiber G2 = effective_model_fiber(r2.tate.minimal, P);
    pr.group_schemes_isomorphic = tate_oort_isomorphic(G1, G2);
    if (!pr.fix_disconnected_some)
      rep.reasons.push_back(pr.label + ": both fixed-scheme fibres are geometrically connected");
    if (!pr.group_schemes_isomorphic)
      rep.reasons.push_back(pr.label + ": effective models differ (" + to_string(G1.type) + ", d=" +
                            std::to_string(G1.d) + " vs " + to_string(G2.type) + ", d=" + std::to_string(G2.d) + ")");
    rep.primes.push_back(pr);
  }
  rep.verdict = rep.same_bad_primes && each_i_ii;
  for (const auto& pr : rep.primes) rep.verdict = rep.verdict && pr.fix_disconnected_some && pr.group_schemes_isomorphic;
  return rep;
}

// ---------------------------------------------------------------- RDP table

int rdp_rank(const std::string& type) {
  if (type == "D4crit") return 4;
  if (type.size() >= 2 && (type[0] == 'A' || type[0] == 'D' || type[0] == 'E')) return std::stoi(type.substr(1));
  throw std::invalid_argument("unknown RDP type '" + type + "'");
}

std::string RdpConfiguration::to_string() const {
  std::string s;
  for (const auto& [t, c] : counts) s += (s.empty() ? "" : " + ") + std::to_string(c) + t;
  return s;
}

RdpConfiguration predict_rdp(long p, FiberType G, std::optional<int> n,
                             std::optional<std::pair<int, int>> fix_components) {
  RdpConfiguration c;
  if (p != 2) {
    if (G != FiberType::ConstantZ2)
      throw std::invalid_argument("inconsistent input: infinitesimal fibre type in odd characteristic");
    c.counts = {{"A1", 16}};
  } else {
    switch (G) {
      case FiberType::Mu2:
        c.counts = {{"A1", 16}, {"D4crit", 1}};
        break;
      case FiberType::Alpha2: {
        if (!fix_components)
          throw std::invalid_argument("alpha2 row needs the fixed-scheme component counts as selector");
        const int prod = fix_components->first * fix_components->second;
        if (prod == 4) c.counts = {{"D4", 4}, {"D4crit", 1}};
        else if (prod == 2) c.counts = {{"D8", 2}, {"D4crit", 1}};
        else throw std::invalid_argument("alpha2 selector: component product must be 2 or 4");
        break;
      }
      case FiberType::ConstantZ2:
        if (!n) throw std::invalid_argument("Z/2 row in characteristic 2 needs n = |A_s[2]|");
        if (*n == 4) c.counts = {{"D4", 4}};
        else if (*n == 2) c.counts = {{"D8", 2}};
        else throw std::invalid_argument("Z/2 row in characteristic 2 needs n in {2, 4}");
        break;
    }
  }
  for (const auto& [t, k] : c.counts) c.rank += k * rdp_rank(t);
  if (c.rank != 16 && c.rank != 20) throw std::logic_error("RDP configuration of unexpected rank");
  return c;
}

// ---------------------------------------------------------------- checklist

namespace {

using Poly = std::vector<Element>;  // low degree first

// Coefficients of g(c + pi X).
Poly shift_scale(const Poly& g, const Element& c, const Element& pi) {
  Poly acc;
  for (size_t i = g.size(); i-- > 0;) {
    Poly next(acc.size() + 1, Element(g[0].ring()));
    for (size_t j = 0; j < acc.size(); ++j) {
      next[j + 1] += acc[j];
      next[j] += acc[j] * c;
    }
    next[0] += g[i];
    acc = std::move(next);
  }
  Element s(g[0].ring(), 1);
  for (auto& a : acc) {
    a *= s;
    s *= pi;
  }
  return acc;
}

int count_roots(Poly g, const LocalPrime& P, int depth) {
  if (depth > 400) throw std::runtime_error("root counting did not separate the roots");
  long v = kInfiniteValuation;
  for (const auto& a : g) v = std::min(v, valuation(a, P));
  if (v == kInfiniteValuation) throw std::domain_error("zero polynomial");
  for (auto& a : g) a = divide_by_uniformizer(a, P, v);
  const ResidueField& k = P.residue_field();
  KPoly gbar;
  for (const auto& a : g) gbar.push_back(reduce(a, P));
  kpoly::trim(k, gbar);
  if (kpoly::degree(k, gbar) <= 0) return 0;
  int total = 0;
  for (const auto& rho : kpoly::roots_by_search(k, gbar)) {
    if (kpoly::multiplicity(k, gbar, rho) == 1) {
      ++total;
    } else {
      total += count_roots(shift_scale(g, lift(rho, P), P.uniformizer()), P, depth + 1);
    }
  }
  return total;
}

}  // namespace

int two_torsion_roots(const WeierstrassModel& E, const LocalPrime& P) {
  const WeierstrassInvariants I = invariants(E);
  const NumberRing& R = E.ring();
  Poly g{16 * I.b6, 8 * I.b4, I.b2, Element(R, 1)};
  for (const auto& a : g)
    if (valuation(a, P) < 0) throw std::domain_error("2-division cubic is not integral at " + P.label());
  return count_roots(g, P, 0);
}

std::optional<Element> integral_square_root(const Element& z) {
  const NumberRing& R = z.ring();
  if (!z.is_integral()) return std::nullopt;
  if (R.kind() == NumberRing::Kind::Rational) {
    if (z.coeffs()[0] < 0 || !mpz_perfect_square_p(z.coeffs()[0].get_mpz_t())) return std::nullopt;
    return Element(R, mpz_class(sqrt(z.coeffs()[0])));
  }
  if (R.kind() != NumberRing::Kind::Quadratic) throw std::invalid_argument("square roots supported over Z and quadratic rings");
  const mpz_class tr = R.theta_trace();
  auto trace = [&](const Element& x) -> mpz_class { return 2 * x.coeffs()[0] + tr * x.coeffs()[1]; };
  mpz_class Nz = norm(z).coeffs()[0];
  if (Nz < 0 || !mpz_perfect_square_p(Nz.get_mpz_t())) return std::nullopt;
  const mpz_class s = sqrt(Nz);
  const mpz_class Tz = trace(z);
  for (int sn : {1, -1}) {
    mpz_class Nw = sn * s;
    mpz_class T2 = Tz + 2 * Nw;
    if (T2 < 0 || !mpz_perfect_square_p(T2.get_mpz_t())) continue;
    mpz_class T = sqrt(T2);
    if (T != 0) {
      Element w = (z + Element(R, Nw)) / Element(R, T);
      if (w.is_integral() && w * w == z) return w;
    } else {
      // w is a multiple of sqrt(m): w^2 = b^2 m
      Element root_m = R.theta_is_half() ? Element::quadratic(R, -1, 2) : Element::quadratic(R, 0, 1);
      Element q = z / Element(R, R.m());
      if (q.is_rational_integer() && q.coeffs()[0] >= 0 && mpz_perfect_square_p(q.coeffs()[0].get_mpz_t())) {
        Element w = root_m * Element(R, mpz_class(sqrt(q.coeffs()[0])));
        if (w * w == z) return w;
      }
    }
  }
  return std::nullopt;
}

ResolutionChecklist evaluate_checklist(const ChecklistInputs& in) {
  ResolutionChecklist cl;
  cl.third_root_of_unity = in.omega_in_field;
  cl.isomorphic_over_sh = in.models_identical ? "certified" : "not certified";
  cl.notes.push_back("critical residue field equals k: finite residue fields are perfect");
  bool any_critical_bad = false;
  bool cubic_fixes_all = true;  // every failing bad prime has Kraus order 3 x (1 or 2)
  bool only_omega_missing = true;
  for (const auto& pi : in.primes) {
    ChecklistPrime cp;
    cp.label = pi.label;
    cp.critical = pi.fiber != FiberType::ConstantZ2;
    cp.good_reduction = pi.good_reduction;
    cp.two_torsion_constant = pi.two_torsion_constant;
    if (pi.kraus && pi.kraus->determined) cp.kraus_order = pi.kraus->order;
    if (!cp.critical) {
      cp.route = "effective model etale here; no condition";
    } else if (cp.good_reduction) {
      cp.route = "(i) E[2] constant over the completion";
      cp.satisfied = cp.two_torsion_constant;
      if (!cp.satisfied) {
        cl.two_torsion_constant = false;
        cl.failures.push_back(cp.label + ": E[2] is not constant over the completion");
        cubic_fixes_all = false;
        only_omega_missing = false;
      }
    } else {
      any_critical_bad = true;
      cp.route = "(ii) good reduction over a quadratic extension, multiplicative effective model, third root of unity";
      const bool quadratic = cp.kraus_order && (*cp.kraus_order == 1 || *cp.kraus_order == 2);
      const bool after_cubic = cp.kraus_order && (*cp.kraus_order == 3 || *cp.kraus_order == 6);
      const bool mult = pi.fiber == FiberType::Mu2;
      cp.satisfied = quadratic && mult && in.omega_in_field;
      if (!quadratic) {
        cl.quadratic_good_reduction = false;
        std::string why = cp.kraus_order ? "Galois order " + std::to_string(*cp.kraus_order)
                                         : std::string("Galois order undetermined");
        cl.failures.push_back(cp.label + ": good reduction over a quadratic extension not certified (" + why + ")");
        only_omega_missing = false;
        if (!after_cubic) cubic_fixes_all = false;
      }
      if (!mult) {
        cl.failures.push_back(cp.label + ": effective model is not multiplicative (" + to_string(pi.fiber) + ")");
        cubic_fixes_all = false;
        only_omega_missing = false;
      }
    }
    cl.primes.push_back(cp);
  }
  if (any_critical_bad && !in.omega_in_field) {
    cl.failures.push_back("(ii): F contains no primitive third root of unity");
    cubic_fixes_all = false;
  }
  if (cl.failures.empty()) {
    cl.recommendation = "none";
  } else if (cubic_fixes_all && in.omega_in_field) {
    cl.recommendation = "tame cubic";
    cl.notes.push_back("a tame cubic extension absorbs the factor 3 of the Galois order; good reduction then needs only a quadratic extension");
  } else if (only_omega_missing && !in.omega_in_field) {
    cl.recommendation = "adjoin omega";
  } else {
    cl.recommendation = "none";
    cl.notes.push_back("no base change in scope repairs the listed failures");
  }
  return cl;
}

ResolutionChecklist resolution_checklist(const WeierstrassModel& E, const WeierstrassModel& E2) {
  PairAdmissibilityReport pair = check_pair_admissible(E, E2);
  if (!pair.verdict) throw std::invalid_argument("resolution checklist needs an admissible pair");
  const NumberRing& R = E.ring();
  ChecklistInputs in;
  in.omega_in_field =
      R.kind() == NumberRing::Kind::Tower || (R.kind() == NumberRing::Kind::Quadratic && R.m() == -3);
  in.models_identical = E == E2;
  std::vector<const WeierstrassModel*> curves{&E};
  if (!in.models_identical) curves.push_back(&E2);
  for (const auto& P : primes_over_two(R)) {
    for (size_t c = 0; c < curves.size(); ++c) {
      const TateResult t = tate_algorithm(*curves[c], P);
      ChecklistPrimeInput pi;
      pi.label = std::string(c == 0 ? "E" : "E'") + "@" + P.label();
      pi.good_reduction = t.reduction == ReductionClass::Good;
      pi.fiber = effective_model_fiber(t.minimal, P).type;
      pi.two_torsion_constant = two_torsion_roots(t.minimal, P) == 3;
      if (!pi.good_reduction && P.e() == 1 && t.reduction == ReductionClass::Additive)
        pi.kraus = kraus_potential_good_reduction(t.minimal, P);
      in.primes.push_back(pi);
    }
  }
  ResolutionChecklist cl = evaluate_checklist(in);
  if (cl.recommendation == "tame cubic" && R.kind() == NumberRing::Kind::Quadratic && R.m() == -3) {
    const char* who[] = {"E", "E'"};
    for (size_t i = 0; i < curves.size(); ++i) {
      WeierstrassModel up = base_change_tame_cubic(*curves[i]);
      TateResult t = tate_algorithm(up, primes_over_two(up.ring())[0]);
      cl.notes.push_back(std::string(who[i]) + " after c^3 = 2: Kodaira type " + t.symbol.name() + ", m = " +
                         std::to_string(t.m) + ", v(Delta) = " + std::to_string(t.val_delta) +
                         "; a quadratic extension then gives good reduction (6 = 3 x 2)");
    }
  }
  return cl;
}

}  // namespace kummerlab
