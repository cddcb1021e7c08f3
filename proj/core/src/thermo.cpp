#include "gtd/thermo.hpp"

#include <cmath>
#include <limits>

#include "gtd/errors.hpp"

namespace gtd {

double guarded_ratio(double num, double den) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (std::abs(den) < 1e-12 * std::abs(num)) {
    if (num == 0.0) return 0.0;
    const double s = ((num < 0.0) != (den < 0.0)) ? -1.0 : 1.0;
    return (den == 0.0) ? std::copysign(inf, num) : s * inf;
  }
  return num / den;
}

namespace {

struct Derivs {
  double phi0, p1, p2, p11, p12, p22;
  static Derivs from(const Jet4& j) {
    return {j.value(), j.c[1][0], j.c[0][1], 2.0 * j.c[2][0], j.c[1][1], 2.0 * j.c[0][2]};
  }
};

double temperature_from(Representation rep, const StatePoint& p, const Derivs& d) {
  switch (rep) {
    case Representation::Mass:
    case Representation::Enthalpy:
      return d.p1;
    case Representation::Entropy:
      if (d.p1 == 0.0) throw DivisionByZeroJet();
      return 1.0 / d.p1;
    case Representation::Gibbs:
      return p.e1;  // T is a coordinate here
  }
  return 0.0;
}

}  // namespace

double temperature(const FundamentalEquation& eq, const StatePoint& p) {
  return temperature_from(eq.rep, p, Derivs::from(eval_jet(eq, p)));
}

double heat_capacity(const FundamentalEquation& eq, const StatePoint& p, CapacityKind kind) {
  const Derivs d = Derivs::from(eval_jet(eq, p));
  switch (kind) {
    case CapacityKind::CQ:
      if (eq.rep == Representation::Mass) return guarded_ratio(d.p1, d.p11);
      if (eq.rep == Representation::Entropy) return guarded_ratio(-d.p1 * d.p1, d.p11);
      throw WrongRepresentation("C_Q is defined in the Mass and Entropy representations");
    case CapacityKind::Cphi:
      if (eq.rep == Representation::Enthalpy) return guarded_ratio(d.p1, d.p11);
      throw WrongRepresentation("C_phi is defined in the Enthalpy representation");
    case CapacityKind::CS:
      if (eq.rep == Representation::Mass) return guarded_ratio(1.0, d.p22);
      throw WrongRepresentation("C_S is defined in the Mass representation");
  }
  throw WrongRepresentation("unknown capacity kind");
}

std::map<std::string, double> potentials(const FundamentalEquation& eq, const StatePoint& p) {
  const Derivs d = Derivs::from(eval_jet(eq, p));
  const double e1 = p.e1, e2 = p.e2;
  std::map<std::string, double> out;
  switch (eq.rep) {
    case Representation::Mass: {
      out["M"] = d.phi0;
      out["H"] = d.phi0 - e2 * d.p2;
      out["F"] = d.phi0 - e1 * d.p1;
      out["G"] = d.phi0 - e1 * d.p1 - e2 * d.p2;
      break;
    }
    case Representation::Entropy: {
      const double T = temperature_from(eq.rep, p, d);
      const double phi = -d.p2 / d.p1;
      out["M"] = e1;
      out["H"] = e1 - phi * e2;
      out["F"] = e1 - T * d.phi0;
      out["G"] = e1 - T * d.phi0 - phi * e2;
      break;
    }
    case Representation::Enthalpy: {
      out["H"] = d.phi0;
      out["M"] = d.phi0 - e2 * d.p2;
      out["G"] = d.phi0 - e1 * d.p1;
      out["F"] = d.phi0 - e1 * d.p1 - e2 * d.p2;
      break;
    }
    case Representation::Gibbs: {
      out["G"] = d.phi0;
      out["H"] = d.phi0 - e1 * d.p1;
      out["F"] = d.phi0 - e2 * d.p2;
      out["M"] = d.phi0 - e1 * d.p1 - e2 * d.p2;
      break;
    }
  }
  return out;
}

ThermoReport thermo_report_from_jet(Representation rep, const StatePoint& p, const Jet4& j) {
  const Derivs d = Derivs::from(j);
  ThermoReport r;
  r.point = p;
  r.T = temperature_from(rep, p, d);
  const double e1 = p.e1, e2 = p.e2;
  switch (rep) {
    case Representation::Mass:
      r.conj1 = d.p1;
      r.conj2 = d.p2;
      r.C_Q = guarded_ratio(d.p1, d.p11);
      r.C_S = guarded_ratio(1.0, d.p22);
      r.potentials = {{"M", d.phi0},
                      {"H", d.phi0 - e2 * d.p2},
                      {"F", d.phi0 - e1 * d.p1},
                      {"G", d.phi0 - e1 * d.p1 - e2 * d.p2}};
      break;
    case Representation::Entropy: {
      r.conj1 = d.p1;
      r.conj2 = d.p2;
      const double phi = -d.p2 / d.p1;
      r.C_Q = guarded_ratio(-d.p1 * d.p1, d.p11);
      r.potentials = {{"M", e1},
                      {"H", e1 - phi * e2},
                      {"F", e1 - r.T * d.phi0},
                      {"G", e1 - r.T * d.phi0 - phi * e2}};
      break;
    }
    case Representation::Enthalpy:
      r.conj1 = d.p1;
      r.conj2 = d.p2;
      r.C_phi = guarded_ratio(d.p1, d.p11);
      r.potentials = {{"H", d.phi0},
                      {"M", d.phi0 - e2 * d.p2},
                      {"G", d.phi0 - e1 * d.p1},
                      {"F", d.phi0 - e1 * d.p1 - e2 * d.p2}};
      break;
    case Representation::Gibbs:
      r.conj1 = d.p1;
      r.conj2 = d.p2;
      r.potentials = {{"G", d.phi0},
                      {"H", d.phi0 - e1 * d.p1},
                      {"F", d.phi0 - e2 * d.p2},
                      {"M", d.phi0 - e1 * d.p1 - e2 * d.p2}};
      break;
  }
  r.T_positive = r.T > 0.0;
  // Stability from the applicable capacity: C_Q in Mass/Entropy, C_phi in
  // Enthalpy; the Gibbs representation carries no capacity and is never
  // flagged stable.
  const std::optional<double>* cap = nullptr;
  if (rep == Representation::Mass || rep == Representation::Entropy) cap = &r.C_Q;
  if (rep == Representation::Enthalpy) cap = &r.C_phi;
  if (cap && *cap) {
    r.capacity_divergent = std::isinf(**cap);
    r.stable = std::isfinite(**cap) && **cap > 0.0;
  }
  return r;
}

ThermoReport thermo_report(const FundamentalEquation& eq, const StatePoint& p) {
  return thermo_report_from_jet(eq.rep, p, eval_jet(eq, p));
}

}  // namespace gtd
