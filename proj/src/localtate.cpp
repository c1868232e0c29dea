#include "kummerlab/localtate.hpp"

#include <stdexcept>

namespace kummerlab {

KodairaSymbol::KodairaSymbol(Kind k, int n) : kind_(k), n_(n) {
  bool indexed = k == Kind::In || k == Kind::InStar;
  if (indexed && n < 1) throw std::invalid_argument("I_n and I_n* need n >= 1");
  if (!indexed) n_ = 0;
}

int KodairaSymbol::components() const {
  switch (kind_) {
    case Kind::I0: return 1;
    case Kind::In: return n_;
    case Kind::II: return 1;
    case Kind::III: return 2;
    case Kind::IV: return 3;
    case Kind::I0Star: return 5;
    case Kind::InStar: return 5 + n_;
    case Kind::IVStar: return 7;
    case Kind::IIIStar: return 8;
    case Kind::IIStar: return 9;
  }
  return 0;
}

std::string KodairaSymbol::name() const {
  switch (kind_) {
    case Kind::I0: return "I0";
    case Kind::In: return "I" + std::to_string(n_);
    case Kind::II: return "II";
    case Kind::III: return "III";
    case Kind::IV: return "IV";
    case Kind::I0Star: return "I0*";
    case Kind::InStar: return "I" + std::to_string(n_) + "*";
    case Kind::IVStar: return "IV*";
    case Kind::IIIStar: return "III*";
    case Kind::IIStar: return "II*";
  }
  return "?";
}

KodairaSymbol KodairaSymbol::parse(const std::string& s) {
  static const std::pair<const char*, Kind> fixed[] = {
      {"I0", Kind::I0},      {"II", Kind::II},          {"III", Kind::III},       {"IV", Kind::IV},
      {"I0*", Kind::I0Star}, {"IV*", Kind::IVStar},     {"III*", Kind::IIIStar},  {"II*", Kind::IIStar}};
  for (const auto& [n, k] : fixed)
    if (s == n) return KodairaSymbol(k);
  if (s.size() >= 2 && s[0] == 'I') {
    bool star = s.back() == '*';
    std::string digits = s.substr(1, s.size() - 1 - (star ? 1 : 0));
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos)
      return KodairaSymbol(star ? Kind::InStar : Kind::In, std::stoi(digits));
  }
  throw std::invalid_argument("unknown Kodaira symbol '" + s + "'");
}

std::string to_string(ReductionClass c) {
  switch (c) {
    case ReductionClass::Good: return "good";
    case ReductionClass::Multiplicative: return "multiplicative";
    case ReductionClass::Additive: return "additive";
  }
  return "?";
}

namespace {

using Elem = ResidueField::Elem;

// Working state of the algorithm: the current model and the accumulated
// change from the input.
struct Local {
  const LocalPrime& P;
  const ResidueField& k;
  WeierstrassModel E;
  CoordinateChange total;
  Element pi;

  Local(const LocalPrime& P_, const WeierstrassModel& E0)
      : P(P_), k(P_.residue_field()), E(E0), total(CoordinateChange::identity(E0.ring())), pi(P_.uniformizer()) {}

  long v(const Element& x) const { return valuation(x, P); }
  Elem red(const Element& x) const { return reduce(x, P); }
  Element lift(const Elem& x) const { return kummerlab::lift(x, P); }
  Elem red_div(const Element& x, long k_) const { return reduce(divide_by_uniformizer(x, P, k_), P); }
  Element pi_pow(unsigned n) const { return pi.pow(n); }

  void apply(const Element& u, const Element& r, const Element& s, const Element& t) {
    CoordinateChange ch{u, r, s, t};
    E = transform_at(E, ch, P);
    total = compose(total, ch);
  }
  void translate(const Element& r, const Element& s, const Element& t) {
    apply(Element(E.ring(), 1), r, s, t);
  }
  Element zero() const { return Element(E.ring()); }
};

Elem half(const ResidueField& k, const Elem& x) { return k.div(x, k.from_int(2)); }

// Integer h with 2h = 1 mod p, lifted to the ring.
Element half_lift(const NumberRing& R, long p) { return Element(R, (p + 1) / 2); }

}  // namespace

TateResult tate_algorithm(const WeierstrassModel& E0, const LocalPrime& P) {
  if (!(E0.ring() == P.ring())) throw std::invalid_argument("model and prime live in different rings");
  if (!E0.is_integral_at(P))
    throw std::domain_error("model is not integral at " + P.label());
  Local L(P, E0);
  const ResidueField& k = L.k;
  const long p = P.p();
  int scalings = 0;

  auto finish = [&](KodairaSymbol sym, ReductionClass cls, long vD) {
    TateResult res;
    res.symbol = sym;
    res.m = sym.components();
    res.val_delta = vD;
    res.reduction = cls;
    switch (cls) {
      case ReductionClass::Good: res.conductor = 0; break;
      case ReductionClass::Multiplicative: res.conductor = 1; break;
      case ReductionClass::Additive: res.conductor = vD - res.m + 1; break;
    }
    res.delta_wild = cls == ReductionClass::Additive ? res.conductor - 2 : 0;
    res.scalings = scalings;
    if (scalings == 0) {
      res.minimal = E0;
      res.change = CoordinateChange::identity(E0.ring());
    } else {
      res.minimal = L.E;
      res.change = L.total;
    }
    return res;
  };

  for (;;) {
    WeierstrassInvariants I = invariants(L.E);
    const long vD = L.v(I.discriminant);
    if (vD == 0) return finish(KodairaSymbol(KodairaSymbol::Kind::I0), ReductionClass::Good, 0);

    // Move the singular point of the reduction to (0,0).
    {
      Elem x0, y0;
      const Elem a1 = L.red(L.E.a1()), a2 = L.red(L.E.a2()), a3 = L.red(L.E.a3()), a4 = L.red(L.E.a4()),
                 a6 = L.red(L.E.a6());
      if (p == 2) {
        if (k.is_zero(a1)) {
          x0 = k.pth_root(a4);
          Elem rhs = k.add(k.mul(k.add(k.mul(k.add(x0, a2), x0), a4), x0), a6);
          y0 = k.pth_root(rhs);
        } else {
          x0 = k.div(a3, a1);
          y0 = k.div(k.add(k.mul(x0, x0), a4), a1);
        }
      } else if (p == 3) {
        const Elem b2 = L.red(I.b2), b4 = L.red(I.b4), b6 = L.red(I.b6);
        if (k.is_zero(b2)) {
          x0 = k.pth_root(k.neg(b6));
        } else {
          x0 = k.neg(k.div(b4, b2));
        }
        y0 = k.add(k.mul(a1, x0), a3);
      } else {
        const Elem b2 = L.red(I.b2), c4 = L.red(I.c4), c6 = L.red(I.c6);
        const Elem twelve = k.from_int(12);
        if (k.is_zero(c4)) {
          x0 = k.neg(k.div(b2, twelve));
        } else {
          x0 = k.neg(k.div(k.add(c6, k.mul(b2, c4)), k.mul(twelve, c4)));
        }
        y0 = k.neg(half(k, k.add(k.mul(a1, x0), a3)));
      }
      if (!k.is_zero(x0) || !k.is_zero(y0)) L.translate(L.lift(x0), L.zero(), L.lift(y0));
      if (L.v(L.E.a3()) < 1 || L.v(L.E.a4()) < 1 || L.v(L.E.a6()) < 1)
        throw std::logic_error("singular point translation failed at " + P.label());
    }

    I = invariants(L.E);
    if (L.v(I.b2) == 0) {
      return finish(KodairaSymbol(KodairaSymbol::Kind::In, static_cast<int>(vD)), ReductionClass::Multiplicative, vD);
    }
    if (L.v(L.E.a6()) < 2) return finish(KodairaSymbol(KodairaSymbol::Kind::II), ReductionClass::Additive, vD);
    if (L.v(I.b8) < 3) return finish(KodairaSymbol(KodairaSymbol::Kind::III), ReductionClass::Additive, vD);
    if (L.v(I.b6) < 3) return finish(KodairaSymbol(KodairaSymbol::Kind::IV), ReductionClass::Additive, vD);

    // Arrange pi | a1, a2; pi^2 | a3, a4; pi^3 | a6.
    {
      Element s, t;
      if (p == 2) {
        s = L.lift(k.pth_root(L.red(L.E.a2())));
        t = L.pi * L.lift(k.pth_root(L.red_div(L.E.a6(), 2)));
      } else {
        Element h = half_lift(L.E.ring(), p);
        s = -(L.E.a1() * h);
        t = -(L.E.a3() * h);
      }
      L.translate(L.zero(), s, t);
      if (L.v(L.E.a1()) < 1 || L.v(L.E.a2()) < 1 || L.v(L.E.a3()) < 2 || L.v(L.E.a4()) < 2 || L.v(L.E.a6()) < 3)
        throw std::logic_error("step-6 normalization failed at " + P.label());
    }

    // T^3 + a2,1 T^2 + a4,2 T + a6,3
    KPoly cubic{L.red_div(L.E.a6(), 3), L.red_div(L.E.a4(), 2), L.red_div(L.E.a2(), 1), k.one()};
    Elem rho;
    if (!kpoly::repeated_root(k, cubic, rho))
      return finish(KodairaSymbol(KodairaSymbol::Kind::I0Star), ReductionClass::Additive, vD);
    const int mult = kpoly::multiplicity(k, cubic, rho);

    if (mult == 2) {
      // Double root: move it to T = 0, then alternate quadratics.
      if (!k.is_zero(rho)) L.translate(L.pi * L.lift(rho), L.zero(), L.zero());
      unsigned ix = 3, iy = 3;
      Element mx = L.pi_pow(2), my = L.pi_pow(2);
      for (;;) {
        Elem xa3 = L.red(L.E.a3() / my);
        Elem xa6 = L.red(L.E.a6() / (mx * my));
        // Y^2 + xa3 Y - xa6
        Elem disc = k.add(k.mul(xa3, xa3), k.mul(k.from_int(4), xa6));
        if (!k.is_zero(disc)) break;
        Elem root = p == 2 ? k.pth_root(xa6) : k.neg(half(k, xa3));
        if (!k.is_zero(root)) L.translate(L.zero(), L.zero(), my * L.lift(root));
        my = my * L.pi;
        ++iy;
        Elem xa2 = L.red(L.E.a2() / L.pi);
        Elem xa4 = L.red(L.E.a4() / (L.pi * mx));
        xa6 = L.red(L.E.a6() / (mx * my));
        // xa2 X^2 + xa4 X + xa6
        disc = k.sub(k.mul(xa4, xa4), k.mul(k.from_int(4), k.mul(xa2, xa6)));
        if (!k.is_zero(disc)) break;
        root = p == 2 ? k.pth_root(k.div(xa6, xa2)) : k.neg(k.div(xa4, k.mul(k.from_int(2), xa2)));
        if (!k.is_zero(root)) L.translate(mx * L.lift(root), L.zero(), L.zero());
        mx = mx * L.pi;
        ++ix;
      }
      const int n = static_cast<int>(ix + iy) - 5;
      return finish(KodairaSymbol(KodairaSymbol::Kind::InStar, n), ReductionClass::Additive, vD);
    }

    // Triple root: move it to T = 0.
    if (!k.is_zero(rho)) L.translate(L.pi * L.lift(rho), L.zero(), L.zero());
    {
      Element pi2 = L.pi_pow(2);
      Elem xa3 = L.red(L.E.a3() / pi2);
      Elem xa6 = L.red(L.E.a6() / L.pi_pow(4));
      Elem disc = k.add(k.mul(xa3, xa3), k.mul(k.from_int(4), xa6));
      if (!k.is_zero(disc)) return finish(KodairaSymbol(KodairaSymbol::Kind::IVStar), ReductionClass::Additive, vD);
      Elem root = p == 2 ? k.pth_root(xa6) : k.neg(half(k, xa3));
      if (!k.is_zero(root)) L.translate(L.zero(), L.zero(), pi2 * L.lift(root));
    }
    if (L.v(L.E.a4()) < 4) return finish(KodairaSymbol(KodairaSymbol::Kind::IIIStar), ReductionClass::Additive, vD);
    if (L.v(L.E.a6()) < 6) return finish(KodairaSymbol(KodairaSymbol::Kind::IIStar), ReductionClass::Additive, vD);

    // Not minimal: divide by u = pi and start over.
    L.apply(L.pi, L.zero(), L.zero(), L.zero());
    ++scalings;
  }
}

MinimalModel minimal_model(const WeierstrassModel& E, const LocalPrime& P) {
  TateResult r = tate_algorithm(E, P);
  return {r.minimal, r.change};
}

bool is_minimal_at(const WeierstrassModel& E, const LocalPrime& P) {
  if (!E.is_integral_at(P)) return false;
  WeierstrassInvariants I = invariants(E);
  if (valuation(I.discriminant, P) < 12 || valuation(I.c4, P) < 4) return true;
  return tate_algorithm(E, P).scalings == 0;
}

WeierstrassModel base_change_tame_cubic(const WeierstrassModel& E, long a) {
  const NumberRing& R = E.ring();
  if (R.kind() != NumberRing::Kind::Quadratic || R.m() != -3)
    throw std::invalid_argument("tame cubic base change needs a model over Z[w]");
  NumberRing T = NumberRing::tower(a);
  auto up = [&](const Element& x) {
    return Element(T, {x.coeffs()[0], x.coeffs()[1], 0, 0, 0, 0}, x.denominator());
  };
  return WeierstrassModel(T, up(E.a1()), up(E.a2()), up(E.a3()), up(E.a4()), up(E.a6()));
}

KrausResult kraus_potential_good_reduction(const WeierstrassModel& E, const LocalPrime& P) {
  if (P.p() != 2 || P.e() != 1)
    throw std::invalid_argument("Kraus branch needs an unramified prime above 2");
  TateResult t = tate_algorithm(E, P);
  KrausResult out;
  if (t.reduction == ReductionClass::Good) {
    out.determined = true;
    out.order = 1;
    out.structure = "trivial";
    out.reason = "good reduction";
    return out;
  }
  if (t.reduction == ReductionClass::Multiplicative)
    throw std::invalid_argument("Kraus branch needs additive reduction (multiplicative reduction is never potentially good)");
  WeierstrassInvariants I = invariants(t.minimal);
  const long vc4 = valuation(I.c4, P);
  const long vD = t.val_delta;
  const bool c4_ok = vc4 == kInfiniteValuation || 3 * vc4 >= 12 * P.e() + vD;
  const bool not_div3 = vD % 3 != 0;
  const bool sym_ok = t.symbol.kind() != KodairaSymbol::Kind::IV && t.symbol.kind() != KodairaSymbol::Kind::IVStar;
  if (c4_ok && not_div3 && sym_ok) {
    out.determined = true;
    out.order = 6;
    out.structure = "C2xC3";
    out.reason = "3 v(c4) >= 12e + v(Delta), 3 does not divide v(Delta), symbol " + t.symbol.name();
    return out;
  }
  out.reason = "undetermined by implemented criterion";
  if (!c4_ok) out.reason += ": 3 v(c4) < 12e + v(Delta)";
  else if (!not_div3) out.reason += ": 3 divides v(Delta)";
  else out.reason += ": symbol " + t.symbol.name();
  return out;
}

}  // namespace kummerlab
