#include "gtd/models.hpp"

#include <cmath>

#include "gtd/errors.hpp"
#include "gtd/thermo.hpp"

namespace gtd {

namespace {

using std::pow;  // double overloads; the jet overloads are found by ADL

constexpr double kSqrt3 = 1.7320508075688772;

double lerp(double a, double b, double t) { return a + (b - a) * t; }

double get_param(const std::map<std::string, double>& params, const std::string& name,
                 bool required, double fallback) {
  auto it = params.find(name);
  if (it == params.end()) {
    if (required) throw ParamError("missing required parameter: " + name);
    return fallback;
  }
  return it->second;
}

double pool_get(const std::map<std::string, double>& pool, const std::string& name) {
  auto it = pool.find(name);
  if (it == pool.end()) throw ParamError("missing value for " + name);
  return it->second;
}

// Generic resolve for explicit models: the swept variable must be one of the
// two coordinates; the other coordinate comes from the fixed pool.
std::function<StatePoint(const std::string&, double, const std::map<std::string, double>&)>
coordinate_resolve(std::string c1, std::string c2) {
  return [c1, c2](const std::string& var, double val,
                  const std::map<std::string, double>& pool) -> StatePoint {
    if (var == c1) return {val, pool_get(pool, c2)};
    if (var == c2) return {pool_get(pool, c1), val};
    throw ParamError("unknown sweep variable: " + var);
  };
}

// ---- charged Gauss-Bonnet family (no cosmological constant) ----------------

Jet4 emgb_mass_expr(const Jet4& S, const Jet4& Q) {
  return pow(S, 2.0 / 3.0) + Q * Q / (3.0 * pow(S, 2.0 / 3.0));
}

// Horizon radius from (M, Q): r = (1/2)[sqrt(M + 2Q/sqrt3) + sqrt(M - 2Q/sqrt3)]
// (outer branch).
Jet4 emgb_u_expr(const Jet4& M, const Jet4& Q) {
  return sqrt(M + (2.0 / kSqrt3) * Q) + sqrt(M - (2.0 / kSqrt3) * Q);
}

DomainFn emgb_entropy_domain() {
  return [](const StatePoint& p) -> std::optional<std::string> {
    if (!(p.e1 > 0.0)) return "M > 0";
    if (!(p.e1 - 2.0 * std::abs(p.e2) / kSqrt3 > 0.0)) return "M - 2|Q|/sqrt(3) > 0";
    return std::nullopt;
  };
}

DomainFn positive_e1_domain(const char* pred) {
  return [pred](const StatePoint& p) -> std::optional<std::string> {
    if (!(p.e1 > 0.0)) return std::string(pred);
    return std::nullopt;
  };
}

void add_emgb_area_mass_oracles(ModelBundle& b) {
  auto T = [](const StatePoint& p) {
    const double S = p.e1, Q = p.e2, S43 = pow(S, 4.0 / 3.0);
    return (2.0 / 9.0) * (3.0 * S43 - Q * Q) / pow(S, 5.0 / 3.0);
  };
  auto phi = [](const StatePoint& p) {
    return (2.0 / 3.0) * p.e2 / pow(p.e1, 2.0 / 3.0);
  };
  auto CQ = [](const StatePoint& p) {
    const double S = p.e1, Q = p.e2, S43 = pow(S, 4.0 / 3.0);
    return guarded_ratio(-3.0 * S * (3.0 * S43 - Q * Q), 3.0 * S43 - 5.0 * Q * Q);
  };
  auto CS = [](const StatePoint& p) { return 1.5 * pow(p.e1, 2.0 / 3.0); };
  auto g11 = [](const StatePoint& p) {
    const double S = p.e1, Q = p.e2, S43 = pow(S, 4.0 / 3.0);
    return (4.0 / 27.0) * (3.0 * S43 - Q * Q) / S43 * (3.0 * S43 - 5.0 * Q * Q) /
           (9.0 * S * S);
  };
  auto g22 = [](const StatePoint& p) {
    const double S = p.e1, Q = p.e2, S43 = pow(S, 4.0 / 3.0);
    return (4.0 / 27.0) * (3.0 * S43 - Q * Q) / S43;
  };
  auto R = [](const StatePoint& p) {
    const double S = p.e1, Q = p.e2, S43 = pow(S, 4.0 / 3.0);
    const double a = 3.0 * S43 - Q * Q, c = 3.0 * S43 - 5.0 * Q * Q;
    return guarded_ratio(-243.0 * pow(S, 8.0 / 3.0), a * c * c);
  };
  b.oracles = {{"T", {OracleStatus::VerifiedAgainstRule, T}},
               {"phi", {OracleStatus::VerifiedAgainstRule, phi}},
               {"C_Q", {OracleStatus::VerifiedAgainstRule, CQ}},
               {"C_S", {OracleStatus::VerifiedAgainstRule, CS}},
               {"g11", {OracleStatus::VerifiedAgainstRule, g11}},
               {"g22", {OracleStatus::VerifiedAgainstRule, g22}},
               {"R", {OracleStatus::VerifiedAgainstRule, R}}};
}

// ---- construction of each catalog entry ------------------------------------

ModelBundle make_emgb_area_mass(const std::map<std::string, double>&) {
  ModelBundle b;
  b.eq.rep = Representation::Mass;
  b.eq.kind = FundamentalEquation::Explicit{[](const Jet4& S, const Jet4& Q) {
    return emgb_mass_expr(S, Q);
  }};
  b.eq.domain = positive_e1_domain("S > 0");
  add_emgb_area_mass_oracles(b);
  b.sample = [](double u, double v) -> StatePoint {
    return {lerp(0.5, 5.0, u), lerp(0.1, 1.2, v)};
  };
  b.resolve = coordinate_resolve("S", "Q");
  b.sweep_vars = {"S", "Q"};
  return b;
}

ModelBundle make_emgb_area_entropy(const std::map<std::string, double>&) {
  ModelBundle b;
  b.eq.rep = Representation::Entropy;
  b.eq.kind = FundamentalEquation::Explicit{[](const Jet4& M, const Jet4& Q) {
    const Jet4 u = emgb_u_expr(M, Q);
    return u * u * u * 0.125;
  }};
  b.eq.domain = emgb_entropy_domain();
  // Reference values through the area entropy S(M, Q) = r^3.
  auto S_of = [](const StatePoint& p) {
    const double u = std::sqrt(p.e1 + 2.0 * p.e2 / kSqrt3) +
                     std::sqrt(p.e1 - 2.0 * p.e2 / kSqrt3);
    return u * u * u / 8.0;
  };
  auto T = [S_of](const StatePoint& p) {
    const double S = S_of(p), Q = p.e2, S43 = pow(S, 4.0 / 3.0);
    return (2.0 / 9.0) * (3.0 * S43 - Q * Q) / pow(S, 5.0 / 3.0);
  };
  auto phi = [S_of](const StatePoint& p) {
    return (2.0 / 3.0) * p.e2 / pow(S_of(p), 2.0 / 3.0);
  };
  auto CQ = [S_of](const StatePoint& p) {
    const double S = S_of(p), Q = p.e2, S43 = pow(S, 4.0 / 3.0);
    return guarded_ratio(-3.0 * S * (3.0 * S43 - Q * Q), 3.0 * S43 - 5.0 * Q * Q);
  };
  b.oracles = {{"T", {OracleStatus::VerifiedAgainstRule, T}},
               {"phi", {OracleStatus::VerifiedAgainstRule, phi}},
               {"C_Q", {OracleStatus::VerifiedAgainstRule, CQ}}};
  b.sample = [](double u, double v) -> StatePoint {
    return {lerp(1.0, 3.0, u), lerp(0.0, 0.5, v)};
  };
  b.resolve = coordinate_resolve("M", "Q");
  b.sweep_vars = {"M", "Q"};
  return b;
}

ModelBundle make_emgb_area_enthalpy(const std::map<std::string, double>&) {
  ModelBundle b;
  b.eq.rep = Representation::Enthalpy;
  b.eq.kind = FundamentalEquation::Explicit{[](const Jet4& S, const Jet4& f) {
    return pow(S, 2.0 / 3.0) * (1.0 - 0.75 * (f * f));
  }};
  b.eq.domain = positive_e1_domain("S > 0");
  auto T = [](const StatePoint& p) {
    return (2.0 / 3.0) * pow(p.e1, -1.0 / 3.0) * (1.0 - 0.75 * p.e2 * p.e2);
  };
  auto Cphi = [](const StatePoint& p) { return -3.0 * p.e1; };
  auto g11 = [](const StatePoint& p) {
    const double P = 1.0 - 0.75 * p.e2 * p.e2;
    return (4.0 / 27.0) * pow(p.e1, -2.0 / 3.0) * P * P;
  };
  auto g22 = [](const StatePoint& p) {
    const double P = 1.0 - 0.75 * p.e2 * p.e2;
    return -pow(p.e1, 4.0 / 3.0) * P;
  };
  auto R = [](const StatePoint& p) {
    const double P = 1.0 - 0.75 * p.e2 * p.e2;
    return guarded_ratio(3.0, pow(p.e1, 4.0 / 3.0) * P * P * P);
  };
  b.oracles = {{"T", {OracleStatus::VerifiedAgainstRule, T}},
               {"C_phi", {OracleStatus::VerifiedAgainstRule, Cphi}},
               {"g11", {OracleStatus::VerifiedAgainstRule, g11}},
               {"g22", {OracleStatus::VerifiedAgainstRule, g22}},
               {"R", {OracleStatus::VerifiedAgainstRule, R}}};
  b.sample = [](double u, double v) -> StatePoint {
    return {lerp(0.5, 4.0, u), lerp(0.0, 1.0, v)};
  };
  b.resolve = coordinate_resolve("S", "phi");
  b.sweep_vars = {"S", "phi"};
  return b;
}

ModelBundle make_emgb_area_gibbs(const std::map<std::string, double>&) {
  ModelBundle b;
  b.eq.rep = Representation::Gibbs;
  // G = (4/27) T^-2 (1 - (3/4) phi^2)^3.  The cubed factor follows from
  // G = M - TS - phi Q by direct algebra and is consistent with the
  // conjugates S = -G_T and Q = -G_phi.
  b.eq.kind = FundamentalEquation::Explicit{[](const Jet4& T, const Jet4& f) {
    const Jet4 P = 1.0 - 0.75 * (f * f);
    return (4.0 / 27.0) * (P * P * P) / (T * T);
  }};
  b.eq.domain = positive_e1_domain("T > 0");
  auto g11 = [](const StatePoint& p) {
    const double T = p.e1, P = 1.0 - 0.75 * p.e2 * p.e2;
    return (64.0 / 243.0) * pow(P, 6) / pow(T, 6);
  };
  auto g22 = [](const StatePoint& p) {
    const double T = p.e1, f = p.e2, P = 1.0 - 0.75 * f * f;
    return (4.0 / 81.0) * pow(P, 4) * (4.0 - 15.0 * f * f) / pow(T, 4);
  };
  auto R = [](const StatePoint& p) {
    const double T = p.e1, f = p.e2, P = 1.0 - 0.75 * f * f;
    const double d = 4.0 - 15.0 * f * f;
    return guarded_ratio(-729.0 * pow(T, 4), pow(P, 5) * d * d);
  };
  b.oracles = {{"g11", {OracleStatus::PaperOnly, g11}},
               {"g22", {OracleStatus::PaperOnly, g22}},
               {"R", {OracleStatus::PaperOnly, R}}};
  b.sample = [](double u, double v) -> StatePoint {
    return {lerp(0.5, 2.0, u), lerp(0.0, 0.45, v)};
  };
  b.resolve = coordinate_resolve("T", "phi");
  b.sweep_vars = {"T", "phi"};
  return b;
}

ModelBundle make_emgb_modified(const std::map<std::string, double>& params) {
  const double a = get_param(params, "alpha", true, 0.0);
  if (!(a < 0.0)) throw ParamError("alpha out of range: requires alpha < 0");
  ModelBundle b;
  b.eq.rep = Representation::Entropy;
  b.eq.params = {{"alpha", a}};
  b.eq.kind = FundamentalEquation::Explicit{[a](const Jet4& M, const Jet4& Q) {
    const Jet4 u = emgb_u_expr(M, Q);
    return u * u * u * 0.125 + (3.0 * a) * u;
  }};
  b.eq.domain = emgb_entropy_domain();
  // Closed forms in the rescaled specific charge q = 2Q / (sqrt(3) M).
  auto T = [a](const StatePoint& p) {
    const double M = p.e1, q = 2.0 * p.e2 / (kSqrt3 * M);
    const double sq = std::sqrt(1.0 - q * q);
    return (8.0 / 3.0) * std::sqrt(M * (1.0 - q * q)) /
           ((4.0 * a + M + M * sq) * (std::sqrt(1.0 + q) + std::sqrt(1.0 - q)));
  };
  auto phi = [](const StatePoint& p) {
    const double q = 2.0 * p.e2 / (kSqrt3 * p.e1);
    const double sp = std::sqrt(1.0 + q), sm = std::sqrt(1.0 - q);
    return (2.0 / kSqrt3) * (sp - sm) / (sp + sm);
  };
  auto CQ = [a](const StatePoint& p) {
    const double M = p.e1, q = 2.0 * p.e2 / (kSqrt3 * M);
    const double sq = std::sqrt(1.0 - q * q);
    const double sum = std::sqrt(1.0 + q) + std::sqrt(1.0 - q);
    const double fac = 4.0 * a + M + M * sq;
    const double num = -0.75 * std::sqrt(M) * sq * sum * fac * fac;
    const double den = M * (1.0 - 3.0 * q * q) + (4.0 * a + M) * sq - 8.0 * a;
    return guarded_ratio(num, den);
  };
  b.oracles = {{"T", {OracleStatus::VerifiedAgainstRule, T}},
               {"phi", {OracleStatus::VerifiedAgainstRule, phi}},
               {"C_Q", {OracleStatus::VerifiedAgainstRule, CQ}}};
  b.sample = [](double u, double v) -> StatePoint {
    return {lerp(0.8, 2.0, u), lerp(0.0, 0.6, v)};
  };
  b.resolve = [](const std::string& var, double val,
                 const std::map<std::string, double>& pool) -> StatePoint {
    if (var == "M") return {val, pool_get(pool, "Q")};
    if (var == "Q") return {pool_get(pool, "M"), val};
    if (var == "q") {
      const double M = pool_get(pool, "M");
      return {M, val * kSqrt3 * M / 2.0};
    }
    throw ParamError("unknown sweep variable: " + var);
  };
  b.sweep_vars = {"M", "Q", "q"};
  return b;
}

ModelBundle make_emgbl_area_mass(const std::map<std::string, double>& params) {
  const double L = get_param(params, "Lambda", true, 0.0);
  const double a = get_param(params, "alpha", false, 1.0);
  if (!(L < 0.0)) throw ParamError("Lambda out of range: requires Lambda < 0");
  if (!(a > 0.0)) throw ParamError("alpha out of range: requires alpha > 0");
  ModelBundle b;
  b.eq.rep = Representation::Mass;
  b.eq.params = {{"Lambda", L}, {"alpha", a}};
  b.eq.kind = FundamentalEquation::Explicit{[L, a](const Jet4& S, const Jet4& Q) {
    return a / 3.0 + pow(S, 2.0 / 3.0) + Q * Q / (3.0 * pow(S, 2.0 / 3.0)) -
           (L / 6.0) * pow(S, 4.0 / 3.0);
  }};
  b.eq.domain = positive_e1_domain("S > 0");
  auto T = [L](const StatePoint& p) {
    const double S = p.e1, Q = p.e2, S43 = pow(S, 4.0 / 3.0);
    return (2.0 / 9.0) * (3.0 * S43 - L * S * S - Q * Q) / pow(S, 5.0 / 3.0);
  };
  auto phi = [](const StatePoint& p) {
    return (2.0 / 3.0) * p.e2 / pow(p.e1, 2.0 / 3.0);
  };
  auto CQ = [L](const StatePoint& p) {
    const double S = p.e1, Q = p.e2, S43 = pow(S, 4.0 / 3.0);
    return guarded_ratio(3.0 * S * (3.0 * S43 - L * S * S - Q * Q),
                         5.0 * Q * Q - 3.0 * S43 - L * S * S);
  };
  auto CS = [](const StatePoint& p) { return 1.5 * pow(p.e1, 2.0 / 3.0); };
  auto g11 = [L](const StatePoint& p) {
    const double S = p.e1, Q = p.e2, S43 = pow(S, 4.0 / 3.0);
    const double pre = 4.0 / (27.0 * S43) * (3.0 * S43 - L * S * S - Q * Q);
    return pre * (3.0 * S43 + L * S * S - 5.0 * Q * Q) / (9.0 * S * S);
  };
  auto g22 = [L](const StatePoint& p) {
    const double S = p.e1, Q = p.e2, S43 = pow(S, 4.0 / 3.0);
    return 4.0 / (27.0 * S43) * (3.0 * S43 - L * S * S - Q * Q);
  };
  auto R = [L](const StatePoint& p) {
    const double S = p.e1, Q = p.e2;
    const double S13 = pow(S, 1.0 / 3.0), S43 = S13 * S, S53 = S43 * S13;
    const double S73 = S53 * S13 * S13, S113 = pow(S, 11.0 / 3.0),
                 S133 = pow(S, 13.0 / 3.0);
    const double Q2 = Q * Q, Q4 = Q2 * Q2;
    const double N = 42.0 * Q2 * S73 * L - 34.0 * S * Q4 * L -
                     5.0 * S * S * S * Q2 * L * L - 18.0 * Q4 * S13 -
                     7.0 * pow(S, 5) * L * L * L + 36.0 * S113 * L +
                     15.0 * S133 * L * L - 162.0 * S * S * S + 108.0 * Q2 * S53;
    const double dT = 3.0 * S43 - Q2 - L * S * S;
    const double dC = 3.0 * S43 - 5.0 * Q2 + L * S * S;
    return guarded_ratio(13.5 * S73 * N, dT * dT * dT * dC * dC);
  };
  b.oracles = {{"T", {OracleStatus::VerifiedAgainstRule, T}},
               {"phi", {OracleStatus::VerifiedAgainstRule, phi}},
               {"C_Q", {OracleStatus::VerifiedAgainstRule, CQ}},
               {"C_S", {OracleStatus::VerifiedAgainstRule, CS}},
               {"g11", {OracleStatus::VerifiedAgainstRule, g11}},
               {"g22", {OracleStatus::VerifiedAgainstRule, g22}},
               {"R", {OracleStatus::VerifiedAgainstRule, R}}};
  b.sample = [](double u, double v) -> StatePoint {
    return {lerp(0.8, 4.0, u), lerp(0.2, 1.0, v)};
  };
  b.resolve = coordinate_resolve("S", "Q");
  b.sweep_vars = {"S", "Q"};
  return b;
}

ModelBundle make_emgbl_area_enthalpy(const std::map<std::string, double>& params) {
  const double L = get_param(params, "Lambda", true, 0.0);
  const double a = get_param(params, "alpha", false, 1.0);
  if (!(L < 0.0)) throw ParamError("Lambda out of range: requires Lambda < 0");
  if (!(a > 0.0)) throw ParamError("alpha out of range: requires alpha > 0");
  ModelBundle b;
  b.eq.rep = Representation::Enthalpy;
  b.eq.params = {{"Lambda", L}, {"alpha", a}};
  b.eq.kind = FundamentalEquation::Explicit{[L, a](const Jet4& S, const Jet4& f) {
    return a / 3.0 + pow(S, 2.0 / 3.0) * (1.0 - 0.75 * (f * f)) -
           (L / 6.0) * pow(S, 4.0 / 3.0);
  }};
  b.eq.domain = positive_e1_domain("S > 0");
  auto T = [L](const StatePoint& p) {
    const double S = p.e1, P = 1.0 - 0.75 * p.e2 * p.e2;
    return (2.0 / 3.0) * pow(S, -1.0 / 3.0) * P - (2.0 * L / 9.0) * pow(S, 1.0 / 3.0);
  };
  auto D1f = [L](double S, double f) {
    return 12.0 * pow(S, 1.0 / 3.0) - 9.0 * f * f * pow(S, 1.0 / 3.0) - 4.0 * L * S;
  };
  auto D2f = [L](double S, double f) {
    return 12.0 * pow(S, 1.0 / 3.0) - 9.0 * f * f * pow(S, 1.0 / 3.0) + 4.0 * L * S;
  };
  auto Cphi = [D1f, D2f](const StatePoint& p) {
    return guarded_ratio(-3.0 * p.e1 * D1f(p.e1, p.e2), D2f(p.e1, p.e2));
  };
  auto g11 = [L](const StatePoint& p) {
    const double S = p.e1, P = 1.0 - 0.75 * p.e2 * p.e2, c = L / 3.0 * pow(S, 2.0 / 3.0);
    return (P - c) * (4.0 / 27.0) * pow(S, -2.0 / 3.0) * (P + c);
  };
  auto g22 = [L](const StatePoint& p) {
    const double S = p.e1, P = 1.0 - 0.75 * p.e2 * p.e2, c = L / 3.0 * pow(S, 2.0 / 3.0);
    return -(P - c) * pow(S, 4.0 / 3.0);
  };
  auto R = [L, D1f, D2f](const StatePoint& p) {
    const double S = p.e1, f = p.e2;
    const double D1 = D1f(S, f), D2 = D2f(S, f);
    const double S23 = pow(S, 2.0 / 3.0);
    const double N = D1 * D1 + L * pow(S, 4.0 / 3.0) *
                                   (27.0 * f * f * (4.0 - 3.0 * f * f) +
                                    2.0 * L * S23 * (9.0 * f * f - 4.0 * L * S23 - 4.0));
    return guarded_ratio(N, D1 * D1 * D1 * D2 * D2);
  };
  b.oracles = {{"T", {OracleStatus::VerifiedAgainstRule, T}},
               {"C_phi", {OracleStatus::VerifiedAgainstRule, Cphi}},
               {"g11", {OracleStatus::VerifiedAgainstRule, g11}},
               {"g22", {OracleStatus::VerifiedAgainstRule, g22}},
               // The explicit numerator above does not reproduce the
               // curvature of this metric (no constant rescaling does); the
               // singular loci D1 = 0 and D2 = 0 are still correct.
               {"R", {OracleStatus::PaperOnly, R}}};
  b.sample = [](double u, double v) -> StatePoint {
    return {lerp(0.5, 3.0, u), lerp(0.0, 0.8, v)};
  };
  b.resolve = coordinate_resolve("S", "phi");
  b.sweep_vars = {"S", "phi"};
  return b;
}

ModelBundle make_emgbl_modified(const std::map<std::string, double>& params) {
  const double L = get_param(params, "Lambda", true, 0.0);
  const double a = get_param(params, "alpha", true, 0.0);
  if (!(L < 0.0)) throw ParamError("Lambda out of range: requires Lambda < 0");
  ModelBundle b;
  b.eq.rep = Representation::Entropy;
  b.eq.params = {{"Lambda", L}, {"alpha", a}};
  FundamentalEquation::Parametric par;
  par.entropy_of_r = [a](const Jet4& r) { return r * r * r + (6.0 * a) * r; };
  par.mass_of_r = [L, a](const Jet4& r, const Jet4& Q) {
    return a / 3.0 + Q * Q / (3.0 * (r * r)) + r * r - (L / 6.0) * (r * r * r * r);
  };
  par.r_lo = 1e-3;
  par.r_hi = 1e2;
  b.eq.kind = par;
  auto with_r = [par](const StatePoint& p, auto&& fn) {
    FundamentalEquation tmp;
    tmp.kind = par;
    tmp.rep = Representation::Entropy;
    return fn(solve_r(tmp, p));
  };
  auto T = [L, a, with_r](const StatePoint& p) {
    return with_r(p, [&](double r) {
      const double Q = p.e2;
      return 2.0 * (3.0 * pow(r, 4) - Q * Q - L * pow(r, 6)) /
             (9.0 * r * r * r * (r * r + 2.0 * a));
    });
  };
  auto phi = [with_r](const StatePoint& p) {
    return with_r(p, [&](double r) { return 2.0 * p.e2 / (3.0 * r * r); });
  };
  auto CQ = [L, a, with_r](const StatePoint& p) {
    return with_r(p, [&](double r) {
      const double Q = p.e2, Q2 = Q * Q, r2 = r * r;
      const double num = 3.0 * r * (r2 + 2.0 * a) * (r2 + 2.0 * a) *
                         (3.0 * r2 * r2 - Q2 - L * pow(r, 6));
      const double den = 6.0 * a * Q2 + 5.0 * Q2 * r2 + 6.0 * a * r2 * r2 -
                         3.0 * pow(r, 6) * (1.0 + 2.0 * a * L) - L * pow(r, 8);
      return guarded_ratio(num, den);
    });
  };
  b.oracles = {{"T", {OracleStatus::VerifiedAgainstRule, T}},
               {"phi", {OracleStatus::VerifiedAgainstRule, phi}},
               {"C_Q", {OracleStatus::VerifiedAgainstRule, CQ}}};
  b.sample = [par](double u, double v) -> StatePoint {
    const double r = lerp(0.9, 2.5, u), Q = lerp(0.2, 1.0, v);
    return {par.mass_of_r(jet_const(r), jet_const(Q)).value(), Q};
  };
  b.resolve = [par](const std::string& var, double val,
                    const std::map<std::string, double>& pool) -> StatePoint {
    if (var == "M") return {val, pool_get(pool, "Q")};
    if (var == "Q") return {pool_get(pool, "M"), val};
    if (var == "r") {
      const double Q = pool_get(pool, "Q");
      return {par.mass_of_r(jet_const(val), jet_const(Q)).value(), Q};
    }
    throw ParamError("unknown sweep variable: " + var);
  };
  b.sweep_vars = {"M", "Q", "r"};
  return b;
}

ModelBundle make_eymgb_area_mass(const std::map<std::string, double>&) {
  ModelBundle b;
  b.eq.rep = Representation::Mass;
  b.eq.kind = FundamentalEquation::Explicit{[](const Jet4& S, const Jet4& Q) {
    return pow(S, 2.0 / 3.0) - (2.0 / 3.0) * (Q * Q) * ln(S);
  }};
  b.eq.domain = positive_e1_domain("S > 0");
  auto T = [](const StatePoint& p) {
    const double S = p.e1, Q = p.e2;
    return (2.0 / 3.0) * (pow(S, 2.0 / 3.0) - Q * Q) / S;
  };
  auto phi = [](const StatePoint& p) { return -(4.0 / 3.0) * p.e2 * std::log(p.e1); };
  auto CQ = [](const StatePoint& p) {
    const double S = p.e1, Q = p.e2, S23 = pow(S, 2.0 / 3.0);
    return guarded_ratio(-3.0 * S * (S23 - Q * Q), S23 - 3.0 * Q * Q);
  };
  auto CS = [](const StatePoint& p) {
    return guarded_ratio(-3.0, 4.0 * std::log(p.e1));
  };
  auto g11 = [](const StatePoint& p) {
    const double S = p.e1, Q = p.e2, S23 = pow(S, 2.0 / 3.0);
    return (4.0 / 27.0) * (S23 - Q * Q) * (S23 - 3.0 * Q * Q) / (S * S);
  };
  auto g22 = [](const StatePoint& p) {
    const double S = p.e1, Q = p.e2, S23 = pow(S, 2.0 / 3.0);
    return -(8.0 / 9.0) * (S23 - Q * Q) * std::log(S);
  };
  b.oracles = {{"T", {OracleStatus::VerifiedAgainstRule, T}},
               {"phi", {OracleStatus::VerifiedAgainstRule, phi}},
               {"C_Q", {OracleStatus::VerifiedAgainstRule, CQ}},
               {"C_S", {OracleStatus::VerifiedAgainstRule, CS}},
               {"g11", {OracleStatus::VerifiedAgainstRule, g11}},
               {"g22", {OracleStatus::VerifiedAgainstRule, g22}}};
  b.sample = [](double u, double v) -> StatePoint {
    return {lerp(2.0, 20.0, u), lerp(0.2, 1.0, v)};
  };
  b.resolve = coordinate_resolve("S", "Q");
  b.sweep_vars = {"S", "Q"};
  return b;
}

ModelBundle make_eymgb_area_enthalpy(const std::map<std::string, double>&) {
  ModelBundle b;
  b.eq.rep = Representation::Enthalpy;
  b.eq.kind = FundamentalEquation::Explicit{[](const Jet4& S, const Jet4& f) {
    return pow(S, 2.0 / 3.0) + 0.375 * (f * f) / ln(S);
  }};
  b.eq.domain = [](const StatePoint& p) -> std::optional<std::string> {
    if (!(p.e1 > 0.0)) return "S > 0";
    if (p.e1 == 1.0) return "ln S != 0";
    return std::nullopt;
  };
  auto T = [](const StatePoint& p) {
    const double S = p.e1, f = p.e2, l = std::log(S);
    return (16.0 * pow(S, 2.0 / 3.0) * l * l - 9.0 * f * f) / (24.0 * S * l * l);
  };
  auto Cphi = [](const StatePoint& p) {
    const double S = p.e1, f = p.e2, l = std::log(S), S23 = pow(S, 2.0 / 3.0);
    return guarded_ratio(3.0 * S * l * (16.0 * S23 * l * l - 9.0 * f * f),
                         -16.0 * S23 * l * l * l + 27.0 * f * f * (2.0 + l));
  };
  auto g11 = [](const StatePoint& p) {
    const double S = p.e1, f = p.e2, l = std::log(S), S23 = pow(S, 2.0 / 3.0);
    const double pre = (16.0 * S23 * l * l - 9.0 * f * f) / (l * l * l);
    return pre * (-16.0 * S23 * l * l * l + 27.0 * f * f * (2.0 + l)) /
           (54.0 * S * S * l * l);
  };
  auto g22 = [](const StatePoint& p) {
    const double S = p.e1, f = p.e2, l = std::log(S);
    return -(16.0 * pow(S, 2.0 / 3.0) * l * l - 9.0 * f * f) / (l * l * l);
  };
  b.oracles = {{"T", {OracleStatus::VerifiedAgainstRule, T}},
               {"C_phi", {OracleStatus::VerifiedAgainstRule, Cphi}},
               // Printed components are a constant -32 times the rule metric.
               {"g11", {OracleStatus::PaperOnly, g11}},
               {"g22", {OracleStatus::PaperOnly, g22}}};
  b.sample = [](double u, double v) -> StatePoint {
    return {lerp(2.0, 10.0, u), lerp(0.0, 1.0, v)};
  };
  b.resolve = coordinate_resolve("S", "phi");
  b.sweep_vars = {"S", "phi"};
  return b;
}

ModelBundle make_eymgb_modified(const std::map<std::string, double>& params) {
  const double a = get_param(params, "alpha", true, 0.0);
  ModelBundle b;
  b.eq.rep = Representation::Entropy;
  b.eq.params = {{"alpha", a}};
  FundamentalEquation::Parametric par;
  par.entropy_of_r = [a](const Jet4& r) { return r * r * r + (6.0 * a) * r; };
  par.mass_of_r = [](const Jet4& r, const Jet4& Q) {
    return r * r - 2.0 * (Q * Q) * ln(r);
  };
  par.r_lo = 1e-3;
  par.r_hi = 1e2;
  b.eq.kind = par;
  auto with_r = [par](const StatePoint& p, auto&& fn) {
    FundamentalEquation tmp;
    tmp.kind = par;
    tmp.rep = Representation::Entropy;
    return fn(solve_r(tmp, p));
  };
  auto T = [a, with_r](const StatePoint& p) {
    return with_r(p, [&](double r) {
      return (2.0 / 3.0) * (r * r - p.e2 * p.e2) / (r * (r * r + 2.0 * a));
    });
  };
  // Conjugate from the first law: phi = dM/dQ at fixed S = -4 Q ln r.
  auto phi = [with_r](const StatePoint& p) {
    return with_r(p, [&](double r) { return -4.0 * p.e2 * std::log(r); });
  };
  auto CQ = [a, with_r](const StatePoint& p) {
    return with_r(p, [&](double r) {
      const double Q2 = p.e2 * p.e2, r2 = r * r;
      const double num = 3.0 * r * (r2 - Q2) * (r2 + 2.0 * a) * (r2 + 2.0 * a);
      const double den = -r2 * r2 + (2.0 * a + 3.0 * Q2) * r2 + 2.0 * Q2 * a;
      return guarded_ratio(num, den);
    });
  };
  b.oracles = {{"T", {OracleStatus::VerifiedAgainstRule, T}},
               {"phi", {OracleStatus::VerifiedAgainstRule, phi}},
               {"C_Q", {OracleStatus::VerifiedAgainstRule, CQ}}};
  b.sample = [par](double u, double v) -> StatePoint {
    const double r = lerp(1.2, 3.0, u), Q = lerp(0.3, 1.0, v);
    return {par.mass_of_r(jet_const(r), jet_const(Q)).value(), Q};
  };
  b.resolve = [par](const std::string& var, double val,
                    const std::map<std::string, double>& pool) -> StatePoint {
    if (var == "M") return {val, pool_get(pool, "Q")};
    if (var == "Q") return {pool_get(pool, "M"), val};
    if (var == "r") {
      const double Q = pool_get(pool, "Q");
      return {par.mass_of_r(jet_const(val), jet_const(Q)).value(), Q};
    }
    throw ParamError("unknown sweep variable: " + var);
  };
  b.sweep_vars = {"M", "Q", "r"};
  return b;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::EMGB: return "emgb";
    case Family::EMGB_Lambda: return "emgb-lambda";
    case Family::EYMGB: return "eymgb";
  }
  return "";
}

std::string entropy_name(EntropyKind e) {
  return e == EntropyKind::Area ? "area" : "modified";
}

std::string ensemble_name(Ensemble e) {
  switch (e) {
    case Ensemble::Mass: return "mass";
    case Ensemble::Entropy: return "entropy";
    case Ensemble::Enthalpy: return "enthalpy";
    case Ensemble::Gibbs: return "gibbs";
  }
  return "";
}

Family parse_family(const std::string& s) {
  if (s == "emgb") return Family::EMGB;
  if (s == "emgb-lambda") return Family::EMGB_Lambda;
  if (s == "eymgb") return Family::EYMGB;
  throw ParamError("unknown model family: " + s);
}

EntropyKind parse_entropy(const std::string& s) {
  if (s == "area") return EntropyKind::Area;
  if (s == "modified") return EntropyKind::Modified;
  throw ParamError("unknown entropy kind: " + s);
}

Ensemble parse_ensemble(const std::string& s) {
  if (s == "mass") return Ensemble::Mass;
  if (s == "entropy") return Ensemble::Entropy;
  if (s == "enthalpy") return Ensemble::Enthalpy;
  if (s == "gibbs") return Ensemble::Gibbs;
  throw ParamError("unknown ensemble: " + s);
}

ModelBundle make_model(ModelId id, const std::map<std::string, double>& params) {
  ModelBundle b;
  if (id.entropy == EntropyKind::Modified && id.ensemble != Ensemble::Entropy)
    throw ParamError("modified entropy models exist only in the entropy representation");
  switch (id.family) {
    case Family::EMGB:
      if (id.entropy == EntropyKind::Modified) {
        b = make_emgb_modified(params);
      } else
        switch (id.ensemble) {
          case Ensemble::Mass: b = make_emgb_area_mass(params); break;
          case Ensemble::Entropy: b = make_emgb_area_entropy(params); break;
          case Ensemble::Enthalpy: b = make_emgb_area_enthalpy(params); break;
          case Ensemble::Gibbs: b = make_emgb_area_gibbs(params); break;
        }
      break;
    case Family::EMGB_Lambda:
      if (id.entropy == EntropyKind::Modified) {
        b = make_emgbl_modified(params);
      } else if (id.ensemble == Ensemble::Mass) {
        b = make_emgbl_area_mass(params);
      } else if (id.ensemble == Ensemble::Enthalpy) {
        b = make_emgbl_area_enthalpy(params);
      } else {
        throw ParamError("unsupported ensemble for this family");
      }
      break;
    case Family::EYMGB:
      if (id.entropy == EntropyKind::Modified) {
        b = make_eymgb_modified(params);
      } else if (id.ensemble == Ensemble::Mass) {
        b = make_eymgb_area_mass(params);
      } else if (id.ensemble == Ensemble::Enthalpy) {
        b = make_eymgb_area_enthalpy(params);
      } else {
        throw ParamError("unsupported ensemble for this family");
      }
      break;
  }
  b.id = id;
  return b;
}

double oracle_eval(const ModelBundle& bundle, const std::string& name, const StatePoint& p) {
  auto it = bundle.oracles.find(name);
  if (it == bundle.oracles.end()) throw UnknownOracle(name);
  if (bundle.eq.domain) {
    if (auto violated = bundle.eq.domain(p)) throw DomainError(*violated);
  }
  return it->second.f(p);
}

std::vector<CatalogEntry> model_catalog() {
  const ParamSpec lam{"Lambda", true, "Lambda < 0"};
  const ParamSpec alpha_pos{"alpha", false, "alpha > 0 (default 1)"};
  const ParamSpec alpha_neg{"alpha", true, "alpha < 0"};
  const ParamSpec alpha_req{"alpha", true, ""};

  std::vector<CatalogEntry> cat;
  auto add = [&cat](Family f, EntropyKind e, Ensemble en, std::vector<ParamSpec> ps) {
    CatalogEntry ce;
    ce.id = {f, e, en};
    ce.params = std::move(ps);
    const ModelBundle b = make_model(ce.id, [&] {
      std::map<std::string, double> defaults;
      for (const auto& p : ce.params) {
        if (p.name == "Lambda") defaults["Lambda"] = -1.0;
        if (p.name == "alpha")
          defaults["alpha"] = (p.constraint == "alpha < 0") ? -0.25 : 1.0;
      }
      return defaults;
    }());
    const auto& info = representation_info(b.eq.rep);
    ce.coord1 = info.coord1;
    ce.coord2 = info.coord2;
    ce.sweep_vars = b.sweep_vars;
    for (const auto& [name, o] : b.oracles) ce.oracle_names.push_back(name);
    cat.push_back(std::move(ce));
  };

  add(Family::EMGB, EntropyKind::Area, Ensemble::Mass, {});
  add(Family::EMGB, EntropyKind::Area, Ensemble::Entropy, {});
  add(Family::EMGB, EntropyKind::Area, Ensemble::Enthalpy, {});
  add(Family::EMGB, EntropyKind::Area, Ensemble::Gibbs, {});
  add(Family::EMGB, EntropyKind::Modified, Ensemble::Entropy, {alpha_neg});
  add(Family::EMGB_Lambda, EntropyKind::Area, Ensemble::Mass, {lam, alpha_pos});
  add(Family::EMGB_Lambda, EntropyKind::Area, Ensemble::Enthalpy, {lam, alpha_pos});
  add(Family::EMGB_Lambda, EntropyKind::Modified, Ensemble::Entropy, {lam, alpha_req});
  add(Family::EYMGB, EntropyKind::Area, Ensemble::Mass, {});
  add(Family::EYMGB, EntropyKind::Area, Ensemble::Enthalpy, {});
  add(Family::EYMGB, EntropyKind::Modified, Ensemble::Entropy, {alpha_req});
  return cat;
}

}  // namespace gtd
