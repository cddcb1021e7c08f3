#ifndef GTD_THERMO_HPP
#define GTD_THERMO_HPP

#include <map>
#include <optional>
#include <string>

#include "gtd/fundeq.hpp"

namespace gtd {

enum class CapacityKind { CQ, Cphi, CS };

// All scalar diagnostics at one state point.  Capacities that are not
// defined in the representation stay empty; a capacity whose denominator
// vanishes within guard tolerance is reported as signed infinity.
struct ThermoReport {
  StatePoint point;
  double T = 0.0;
  // Conjugate intensives per the representation's first-law sign table:
  // Mass (T, phi); Entropy (1/T, -phi/T); Enthalpy (T, -Q); Gibbs (-S, -Q).
  double conj1 = 0.0;
  double conj2 = 0.0;
  std::optional<double> C_Q;
  std::optional<double> C_phi;
  std::optional<double> C_S;
  std::map<std::string, double> potentials;  // {"M","H","F","G"}
  bool T_positive = false;
  bool stable = false;
  bool capacity_divergent = false;
  bool domain_ok = true;
};

double temperature(const FundamentalEquation& eq, const StatePoint& p);
double heat_capacity(const FundamentalEquation& eq, const StatePoint& p, CapacityKind kind);
std::map<std::string, double> potentials(const FundamentalEquation& eq, const StatePoint& p);
ThermoReport thermo_report(const FundamentalEquation& eq, const StatePoint& p);

// Report computed from an already-evaluated jet (used by sweeps to avoid
// re-evaluating the fundamental equation).
ThermoReport thermo_report_from_jet(Representation rep, const StatePoint& p, const Jet4& phi);

// Ratio with the divergence guard: |den| < 1e-12 * |num| reports signed
// infinity (sign taken from the approach direction num/den).
double guarded_ratio(double num, double den);

}  // namespace gtd

#endif
