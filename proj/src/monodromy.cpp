#include "kummerlab/monodromy.hpp"

namespace kummerlab {

PrimeField::PrimeField(long prime) : p(prime) {
  if (p < 2) throw std::invalid_argument("characteristic must be a prime");
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

PrimeField::T PrimeField::inv(T a) const {
  if (a % p == 0) throw std::domain_error("division by zero");
  // a^(p-2)
  T r = 1, b = from(a);
  for (long e = p - 2; e > 0; e >>= 1) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
  }
  return r;
}

std::string to_string(HomothetyOutcome o) {
  switch (o) {
    case HomothetyOutcome::BothHomotheties: return "both homotheties";
    case HomothetyOutcome::NotSemisimple: return "triggered, factor not semisimple";
    case HomothetyOutcome::NotTriggered: return "not triggered";
  }
  return "?";
}

D4Case parse_d4_case(const std::string& s) {
  if (s == "fixes" || s == "fixes-both-legs") return D4Case::FixesBothLegs;
  if (s == "swaps" || s == "swaps-legs") return D4Case::SwapsLegs;
  throw std::invalid_argument("unknown case '" + s + "' (expected fixes or swaps)");
}

HomothetyResult<PrimeField> homothety_criterion(const ExactMatrix<PrimeField>& f,
                                                const ExactMatrix<PrimeField>& g) {
  const PrimeField& k = f.field;
  if (k.p > (1L << 20)) throw std::invalid_argument("eigenvalue search limited to p < 2^20");
  const auto chi = charpoly(kronecker(f, g));
  HomothetyResult<PrimeField> none;
  none.bound = f.rows * g.rows - std::min(f.rows, g.rows);
  for (long a = 1; a < k.p; ++a)
    if (root_multiplicity(k, chi, a) > none.bound) return homothety_criterion(f, g, a);
  return none;
}

namespace {

using QPoly = Poly<Rationals>;
const Rationals QQ;

QPoly derivative(const QPoly& f) {
  QPoly d;
  for (size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<long>(i));
  trim(QQ, d);
  return d;
}

// quotient and remainder
std::pair<QPoly, QPoly> divmod(QPoly f, const QPoly& g) {
  if (g.empty()) throw std::domain_error("polynomial division by zero");
  trim(QQ, f);
  QPoly q(f.size() >= g.size() ? f.size() - g.size() + 1 : 0, mpq_class(0));
  while (f.size() >= g.size() && !f.empty()) {
    const size_t s = f.size() - g.size();
    const mpq_class c = f.back() / g.back();
    q[s] = c;
    for (size_t i = 0; i < g.size(); ++i) f[s + i] -= c * g[i];
    trim(QQ, f);
  }
  trim(QQ, q);
  return {q, f};
}

QPoly monic(QPoly f) {
  trim(QQ, f);
  if (f.empty()) return f;
  const mpq_class c = f.back();
  for (auto& x : f) x /= c;
  return f;
}

QPoly gcd(QPoly a, QPoly b) {
  trim(QQ, a);
  trim(QQ, b);
  while (!b.empty()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

}  // namespace

std::vector<QPoly> squarefree_decomposition(const QPoly& f0) {
  QPoly f = monic(f0);
  if (f.empty()) throw std::invalid_argument("square-free decomposition of zero");
  std::vector<QPoly> out;
  QPoly a = gcd(f, derivative(f));
  QPoly b = divmod(f, a).first;
  QPoly c = divmod(derivative(f), a).first;
  QPoly d = c;
  {
    QPoly db = derivative(b);
    for (size_t i = 0; i < std::max(d.size(), db.size()); ++i) {
      if (i >= d.size()) d.push_back(0);
      d[i] -= i < db.size() ? db[i] : mpq_class(0);
    }
    trim(QQ, d);
  }
  while (b.size() > 1) {
    QPoly a_i = gcd(b, d);
    out.push_back(a_i);
    b = divmod(b, a_i).first;
    c = divmod(d, a_i).first;
    QPoly db = derivative(b);
    d = c;
    for (size_t i = 0; i < std::max(d.size(), db.size()); ++i) {
      if (i >= d.size()) d.push_back(0);
      d[i] -= i < db.size() ? db[i] : mpq_class(0);
    }
    trim(QQ, d);
  }
  return out;
}

HomothetyResult<Rationals> homothety_criterion(const ExactMatrix<Rationals>& f, const ExactMatrix<Rationals>& g) {
  const auto chi = charpoly(kronecker(f, g));
  HomothetyResult<Rationals> none;
  none.bound = f.rows * g.rows - std::min(f.rows, g.rows);
  const auto parts = squarefree_decomposition(chi);
  for (size_t i = 0; i < parts.size(); ++i) {
    const int mult = static_cast<int>(i) + 1;
    if (mult <= none.bound || parts[i].size() < 2) continue;
    if (parts[i].size() != 2) throw std::logic_error("eigenvalue above the bound is not rational");
    const mpq_class alpha = -parts[i][0] / parts[i][1];
    if (alpha == 0) return none;
    return homothety_criterion(f, g, alpha);
  }
  return none;
}

}  // namespace kummerlab
