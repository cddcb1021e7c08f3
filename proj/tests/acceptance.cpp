// End-to-end acceptance checks.  Each criterion prints exactly one
// PASS/FAIL line; the exit code is the number of failing criteria.
//
// Frozen expected values come from independent evaluations of the models'
// closed forms (high-precision root finding / symbolic algebra), not from
// the pipeline under test.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "gtd/analysis.hpp"
#include "gtd/errors.hpp"
#include "gtd/fundeq.hpp"
#include "gtd/geometry.hpp"
#include "gtd/jets.hpp"
#include "gtd/models.hpp"
#include "gtd/rng.hpp"
#include "gtd/thermo.hpp"

#include "fd_oracle.hpp"

using namespace gtd;

namespace {

int g_failures = 0;

void report(int num, bool ok, const std::string& detail) {
  std::printf("criterion %2d: %s  %s\n", num, ok ? "PASS" : "FAIL", detail.c_str());
  if (!ok) ++g_failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Pipeline scalar curvature at a state point.
double pipeline_R(const FundamentalEquation& eq, const StatePoint& p) {
  return scalar_curvature(gtd_metric_from_jet(p, eval_jet(eq, p)));
}

std::vector<double> loci_of(const std::vector<TransitionLocus>& loci, Indicator ind) {
  std::vector<double> out;
  for (const auto& t : loci)
    if (t.indicator == ind) out.push_back(t.location);
  return out;
}

bool contains_near(const std::vector<double>& xs, double target, double tol) {
  for (double x : xs)
    if (std::abs(x - target) <= tol) return true;
  return false;
}

// Symmetric set equality within a tolerance.
bool sets_match(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  for (double x : a)
    if (!contains_near(b, x, tol)) return false;
  for (double x : b)
    if (!contains_near(a, x, tol)) return false;
  return true;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(GTD_CLI_PATH) + " " + args + " 2>&1";
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// ---------------------------------------------------------------------------
// 1. Charged Gauss-Bonnet, mass ensemble: curvature equals the closed form
//    R = -243 S^{8/3} / ((3S^{4/3}-Q^2)(3S^{4/3}-5Q^2)^2).
void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const ModelBundle b = make_model({Family::EMGB, EntropyKind::Area, Ensemble::Mass}, {});
  Quasi2D q(1);
  int used = 0;
  double max_err = 0.0;
  while (used < 100) {
    double u, v;
    q.next(u, v);
    const double S = 0.3 + 2.7 * u, Q = 0.1 + 1.4 * v;
    const double s43 = 3.0 * std::pow(S, 4.0 / 3.0);
    if (s43 <= 1.1 * Q * Q || std::abs(s43 - 5.0 * Q * Q) <= 0.1) continue;
    const double expect =
        -243.0 * std::pow(S, 8.0 / 3.0) /
        ((s43 - Q * Q) * (s43 - 5.0 * Q * Q) * (s43 - 5.0 * Q * Q));
    const double got = pipeline_R(b.eq, {S, Q});
    max_err = std::max(max_err,
                       std::abs(got - expect) / std::max(std::abs(expect), 1e-30));
    ++used;
  }
  const double spot = pipeline_R(b.eq, {1.0, 1.0});
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok = max_err < 1e-6 && std::abs(spot + 30.375) < 1e-9 && secs < 1.0;
  report(1, ok,
         "closed-form curvature, 100 points: max rel err " + fmt(max_err) +
             ", spot R(1,1) = " + fmt(spot) + ", " + fmt(secs) + " s");
}

// ---------------------------------------------------------------------------
// 2. Closed-form curvature for the enthalpy ensemble and both Lambda-model
//    ensembles, via the verification harness's R oracles.
void criterion2() {
  const auto r_err = [](const VerificationReport& rep) {
    for (const auto& c : rep.checks)
      if (c.name == "R") return c.max_rel_err;
    return std::nan("");
  };
  const ModelBundle enth =
      make_model({Family::EMGB, EntropyKind::Area, Ensemble::Enthalpy}, {});
  const double e1 = r_err(verify_model(enth, 100, 21));
  const double spot = pipeline_R(enth.eq, {1.0, 0.0});

  const ModelBundle lm = make_model(
      {Family::EMGB_Lambda, EntropyKind::Area, Ensemble::Mass}, {{"Lambda", -1.0}});
  const double e2 = r_err(verify_model(lm, 100, 22));

  const ModelBundle le = make_model(
      {Family::EMGB_Lambda, EntropyKind::Area, Ensemble::Enthalpy}, {{"Lambda", -1.0}});
  const double e3 = r_err(verify_model(le, 100, 23));

  const bool ok = e1 < 1e-6 && std::abs(spot - 3.0) < 1e-9 && e2 < 1e-6 && e3 < 1e-6;
  report(2, ok,
         "closed-form curvature: enthalpy " + fmt(e1) + " (spot R(1,0) = " + fmt(spot) +
             "), Lambda-mass " + fmt(e2) + ", Lambda-enthalpy " + fmt(e3) +
             (e3 >= 1e-6 ? " (tabulated reference numerator is off by a"
                           " non-constant factor; singular loci still agree)"
                         : ""));
}

// ---------------------------------------------------------------------------
// 3. Singularity-locus coincidence: along each reference sweep, the
//    curvature-singularity set equals the union of the capacity-divergence,
//    zero-temperature, and log-breakdown sets.
void criterion3() {
  struct Config {
    ModelId id;
    std::map<std::string, double> params;
    SweepSpec sweep;
  };
  const std::vector<Config> configs = {
      {{Family::EMGB, EntropyKind::Area, Ensemble::Mass}, {},
       {"S", 0.3, 3.0, 2048, {{"Q", 1.0}}}},
      {{Family::EMGB, EntropyKind::Modified, Ensemble::Entropy}, {{"alpha", -0.1}},
       {"q", 0.05, 0.99, 2048, {{"M", 1.0}}}},
      {{Family::EMGB_Lambda, EntropyKind::Area, Ensemble::Mass}, {{"Lambda", -1.0}},
       {"S", 0.1, 10.0, 2048, {{"Q", 0.5}}}},
      {{Family::EMGB_Lambda, EntropyKind::Modified, Ensemble::Entropy},
       {{"Lambda", -1.0}, {"alpha", 0.25}},
       {"r", 0.4, 3.0, 2048, {{"Q", 1.0}}}},
      {{Family::EYMGB, EntropyKind::Area, Ensemble::Mass}, {},
       {"Q", 0.05, 3.0, 2048, {{"S", 10.0}}}},
      {{Family::EYMGB, EntropyKind::Modified, Ensemble::Entropy}, {{"alpha", 1.0}},
       {"r", 0.8, 4.0, 2048, {{"Q", 1.0}}}},
  };
  int matched = 0;
  std::string mismatch;
  std::vector<double> emgb_all, eymgb_all;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    const ModelBundle b = make_model(configs[i].id, configs[i].params);
    const auto loci = locate_transitions(b, configs[i].sweep);
    std::vector<double> curv = loci_of(loci, Indicator::CurvatureSingularity);
    std::vector<double> others;
    for (const auto& t : loci)
      if (t.indicator != Indicator::CurvatureSingularity) others.push_back(t.location);
    if (sets_match(curv, others, 1e-6))
      ++matched;
    else if (mismatch.empty())
      mismatch = " (mismatch in configuration " + std::to_string(i + 1) + ")";
    if (i == 0)
      for (const auto& t : loci) emgb_all.push_back(t.location);
    if (i == 4)
      for (const auto& t : loci) eymgb_all.push_back(t.location);
  }
  // Pinned locations, evaluated independently.
  const bool pins =
      contains_near(emgb_all, std::pow(5.0 / 3.0, 0.75), 1e-6) &&       // 1.466853
      contains_near(emgb_all, std::pow(3.0, -0.75), 1e-6) &&            // 0.438691
      contains_near(eymgb_all, std::cbrt(10.0) / std::sqrt(3.0), 1e-6) &&
      contains_near(eymgb_all, std::cbrt(10.0), 1e-6);
  report(3, matched == 6 && pins,
         "singular loci coincide with transition loci in " + std::to_string(matched) +
             "/6 configurations; pinned locations " +
             (pins ? "present" : "MISSING") + mismatch);
}

// ---------------------------------------------------------------------------
// 4. Lambda model (Lambda=-1, Q=1/2): exactly two C_Q divergences, at the
//    independently re-derived roots of 5Q^2 - 3S^{4/3} - Lambda S^2, the
//    first at a Helmholtz minimum and the second at a maximum.
void criterion4() {
  const ModelBundle b = make_model(
      {Family::EMGB_Lambda, EntropyKind::Area, Ensemble::Mass}, {{"Lambda", -1.0}});
  const SweepSpec sw{"S", 0.05, 10.0, 4096, {{"Q", 0.5}}};
  std::vector<double> caps;
  for (const auto& t : locate_transitions(b, sw))
    if (t.indicator == Indicator::CapacityDivergence && t.capacity == CapacityKind::CQ)
      caps.push_back(t.location);
  std::sort(caps.begin(), caps.end());
  const double r1 = 0.642304792465991, r2 = 4.80030172806646;  // frozen
  bool ok = caps.size() == 2 && std::abs(caps[0] - r1) < 1e-6 &&
            std::abs(caps[1] - r2) < 1e-6 && std::abs(caps[0] - 0.6) < 0.1 &&
            std::abs(caps[1] - 4.9) < 0.1;
  bool extrema_ok = false;
  const auto ex = helmholtz_extrema(b, sw);
  if (ex.size() == 2) {
    extrema_ok = ex[0].is_min && !ex[1].is_min && ex[0].coincides_with_CQ_divergence &&
                 ex[1].coincides_with_CQ_divergence &&
                 std::abs(ex[0].location - r1) < 1e-6 &&
                 std::abs(ex[1].location - r2) < 1e-6;
  }
  ok = ok && extrema_ok;
  std::string detail = "C_Q divergences: " + std::to_string(caps.size()) + " found";
  if (caps.size() == 2)
    detail += " at " + fmt(caps[0]) + " (free-energy min) and " + fmt(caps[1]) +
              " (free-energy max)";
  report(4, ok, detail);
}

// ---------------------------------------------------------------------------
// 5. Charged model with the modified entropy relation (M=1): coupling
//    -1/4 gives no transitions and C_Q < 0 everywhere; -1/10 gives
//    transitions at |q| = 0.841464488109069.
void criterion5() {
  const SweepSpec sw{"q", -0.99, 0.99, 2048, {{"M", 1.0}}};
  const ModelBundle quarter = make_model(
      {Family::EMGB, EntropyKind::Modified, Ensemble::Entropy}, {{"alpha", -0.25}});
  const bool none =
      loci_of(locate_transitions(quarter, sw), Indicator::CapacityDivergence).empty();
  bool all_neg = true;
  for (int k = 0; k <= 40; ++k) {
    const double qq = -0.98 + 1.96 * k / 40.0;
    const StatePoint p = quarter.resolve("q", qq, {{"M", 1.0}});
    if (!(heat_capacity(quarter.eq, p, CapacityKind::CQ) < 0.0)) all_neg = false;
  }
  const ModelBundle tenth = make_model(
      {Family::EMGB, EntropyKind::Modified, Ensemble::Entropy}, {{"alpha", -0.1}});
  const auto caps = loci_of(locate_transitions(tenth, sw), Indicator::CapacityDivergence);
  const double q0 = 0.841464488109069;  // frozen
  const bool pair = caps.size() == 2 && contains_near(caps, q0, 1e-6) &&
                    contains_near(caps, -q0, 1e-6) && std::abs(q0 - 0.841) < 0.005;
  report(5, none && all_neg && pair,
         std::string("coupling -1/4: ") + (none ? "no transitions" : "TRANSITIONS") +
             ", C_Q " + (all_neg ? "< 0 throughout" : "NOT negative") +
             "; coupling -1/10: " + std::to_string(caps.size()) +
             " transitions at |q| = " + fmt(caps.empty() ? 0.0 : std::abs(caps[0])));
}

// ---------------------------------------------------------------------------
// 6. Lambda model with the modified entropy relation: minimal horizon radius
//    (root of dM/dr, i.e. r^6 + 3r^4 - 1 = 0 at Lambda=-1, Q=1) and the
//    coupling-bound stability property.
void criterion6() {
  const ModelBundle b =
      make_model({Family::EMGB_Lambda, EntropyKind::Modified, Ensemble::Entropy},
                 {{"Lambda", -1.0}, {"alpha", 0.25}});
  const auto& par = std::get<FundamentalEquation::Parametric>(b.eq.kind);
  const auto dM = [&](double r) {
    return par.mass_of_r(jet_var(1, r), jet_var(2, 1.0)).partial(1, 0);
  };
  const auto roots = find_roots(dM, 0.3, 2.0);
  const double frozen = 0.729444231067705;
  const bool root_ok = roots.size() == 1 && std::abs(roots[0] - frozen) < 1e-6 &&
                       std::abs(roots[0] - 0.72951) < 1e-4;

  int positive_T = 0, bad = 0;
  const double alphas[4] = {0.5, 1.0, 2.0, 3.0};
  for (int a = 0; a < 4; ++a) {
    const ModelBundle m =
        make_model({Family::EMGB_Lambda, EntropyKind::Modified, Ensemble::Entropy},
                   {{"Lambda", -1.0}, {"alpha", alphas[a]}});
    Quasi2D q(60 + a);
    for (int k = 0; k < 125; ++k) {
      double u, v;
      q.next(u, v);
      try {
        const ThermoReport r = thermo_report(m.eq, m.sample(u, v));
        if (r.T > 0.0) {
          ++positive_T;
          if (!(*r.C_Q > 0.0)) ++bad;
        }
      } catch (const Error&) {
      }
    }
  }
  const bool prop_ok = positive_T > 100 && bad == 0;
  report(6, root_ok && prop_ok,
         "minimal horizon radius " + fmt(roots.empty() ? 0.0 : roots[0]) +
             "; coupling bound: " + std::to_string(positive_T) +
             " positive-temperature samples, " + std::to_string(bad) +
             " with C_Q <= 0");
}

// ---------------------------------------------------------------------------
// 7. Yang-Mills model with the modified entropy relation (Q=1, coupling 1):
//    single C_Q divergence at the quartic root
//    r^2 = (3/2)Q^2 + a + (1/2)sqrt(9Q^4 + 20aQ^2 + 4a^2), and the claimed
//    additional curvature singularity at the zero-temperature point r = Q = 1.
void criterion7() {
  const ModelBundle b = make_model(
      {Family::EYMGB, EntropyKind::Modified, Ensemble::Entropy}, {{"alpha", 1.0}});
  const SweepSpec sw{"r", 1.05, 4.0, 2048, {{"Q", 1.0}}};
  std::vector<double> caps;
  for (const auto& t : locate_transitions(b, sw))
    if (t.indicator == Indicator::CapacityDivergence && t.capacity == CapacityKind::CQ)
      caps.push_back(t.location);
  const double quartic = std::sqrt(2.5 + 0.5 * std::sqrt(33.0));  // 2.31781822481165
  const bool cap_ok = caps.size() == 1 && std::abs(caps[0] - quartic) < 1e-5;

  // Probe R along Q = 1 approaching r = 1 from above, building the
  // entropy-representation jet directly from the parametric pair so the
  // outer-branch radius solver cannot alias the approach.
  const auto& par = std::get<FundamentalEquation::Parametric>(b.eq.kind);
  const auto R_at = [&](double r) {
    const Jet4 A = par.mass_of_r(jet_var(1, r), jet_var(2, 1.0));
    const Jet4 Sj = compose(par.entropy_of_r(jet_var(1, r)), invert_first(A),
                            jet_var(2, 0.0));
    return scalar_curvature(gtd_metric_from_jet({A.value(), 1.0}, Sj));
  };
  double near = 0.0;
  bool diverges = true;
  for (double eps : {1e-4, 1e-5, 1e-6}) {
    near = R_at(1.0 + eps);
    if (std::abs(near) < 1e6) diverges = false;
  }
  report(7, cap_ok && diverges,
         "C_Q divergence at " + fmt(caps.empty() ? 0.0 : caps[0]) + " vs quartic root " +
             fmt(quartic) +
             (diverges ? "; curvature diverges at r = 1"
                       : "; curvature stays FINITE approaching r = Q = 1 (R -> " +
                             fmt(near) + " ~ -8/81): the claimed additional"
                             " singularity at the zero-temperature point is absent"));
}

// ---------------------------------------------------------------------------
// 8. Gibbs ensemble: curvature singular exactly at phi^2 = 4/15 and
//    phi^2 = 4/3, located to 1e-9; component discrepancy factors reported.
void criterion8() {
  const ModelBundle b = make_model({Family::EMGB, EntropyKind::Area, Ensemble::Gibbs}, {});
  const SweepSpec sw{"phi", 0.3, 1.3, 4096, {{"T", 1.0}}};
  const auto curv = loci_of(locate_transitions(b, sw), Indicator::CurvatureSingularity);
  const double p1 = std::sqrt(4.0 / 15.0), p2 = std::sqrt(4.0 / 3.0);
  const bool loci_ok = contains_near(curv, p1, 1e-9) && contains_near(curv, p2, 1e-9);

  const VerificationReport rep = verify_model(b, 64, 8);
  bool factor_reported = false;
  for (const auto& c : rep.checks)
    if (c.status == OracleStatus::PaperOnly && std::isfinite(c.fitted_factor))
      factor_reported = true;
  report(8, loci_ok && factor_reported,
         std::string("singular loci at sqrt(4/15), sqrt(4/3) ") +
             (loci_ok ? "located to 1e-9" : "NOT located") +
             "; component discrepancy factors " +
             (factor_reported ? "reported" : "MISSING"));
}

// ---------------------------------------------------------------------------
// 9. Flatness claim for the entropy-representation comparison metric of the
//    charged model with area entropy.
void criterion9() {
  const ModelBundle b =
      make_model({Family::EMGB, EntropyKind::Area, Ensemble::Entropy}, {});
  const VerificationReport rep = verify_model(b, 50, 9);
  const bool ok =
      rep.has_ruppeiner && rep.ruppeiner_n >= 50 && rep.ruppeiner_max_abs_R < 1e-6;
  report(9, ok,
         "comparison-metric flatness: max |R| = " + fmt(rep.ruppeiner_max_abs_R) +
             " over " + std::to_string(rep.ruppeiner_n) + " positive-temperature points");
}

// ---------------------------------------------------------------------------
// 10. Jet engine property suite: 50 randomized composites vs Richardson
//     finite differences, and the parametric adapter vs the explicit
//     composition of the same model.
namespace gen {
inline double ln(double x) { return std::log(x); }
inline double sqrt(double x) { return std::sqrt(x); }
inline double exp(double x) { return std::exp(x); }
inline double pow(double x, double p) { return std::pow(x, p); }
using gtd::exp;
using gtd::ln;
using gtd::pow;
using gtd::sqrt;
}  // namespace gen

struct FnParams {
  double a, b, c, p;
};

template <typename T>
T formula(int k, const T& x, const T& y, const FnParams& q) {
  using namespace gen;
  switch (k) {
    case 0: return q.a * pow(x, q.p) + q.b * x * y + q.c * y * y;
    case 1: return pow(x, 2.0 / 3.0) + q.a * y * y / (3.0 * pow(x, 2.0 / 3.0));
    case 2: return exp(0.3 * q.a * x + 0.2 * q.b * y);
    case 3: return ln(q.a * x + q.b * y + q.c);
    case 4: return sqrt(q.a * x * x + q.b * y * y + q.c);
    case 5: return (q.a * x + q.b * y * y) / (q.c + x * y);
    case 6: return x * ln(x) * y + sqrt(y) * q.a;
    default: return pow(q.c + x * y, q.p);
  }
}

void criterion10() {
  SplitMix64 rng(2024);
  int bad_fd = 0;
  for (int t = 0; t < 50; ++t) {
    const int k = static_cast<int>(rng.next_u64() % 8);
    const FnParams q{0.3 + 1.2 * rng.next_double(), 0.3 + 1.2 * rng.next_double(),
                     0.3 + 1.2 * rng.next_double(), -1.5 + 4.0 * rng.next_double()};
    const double x0 = 0.8 + rng.next_double();
    const double y0 = 0.5 + 0.9 * rng.next_double();
    const Jet4 jet = formula(k, jet_var(1, x0), jet_var(2, y0), q);
    auto f = [&](double x, double y) { return formula(k, x, y, q); };
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; i + j <= 4; ++j) {
        const double expect = fd::jet_coeff(f, x0, y0, i, j);
        const double tol = (i + j <= 2) ? 1e-5 : 1e-3;
        const double denom = std::max({std::abs(expect), std::abs(jet.c[i][j]), 1.0});
        if (std::abs(jet.c[i][j] - expect) > tol * denom) ++bad_fd;
      }
  }

  // Twin descriptions of the charged modified-entropy model.
  constexpr double kSqrt3 = 1.7320508075688772;
  const double alpha = -0.1;
  FundamentalEquation ex;
  ex.rep = Representation::Entropy;
  ex.kind = FundamentalEquation::Explicit{[alpha](const Jet4& M, const Jet4& Q) {
    const Jet4 u = sqrt(M + (2.0 / kSqrt3) * Q) + sqrt(M - (2.0 / kSqrt3) * Q);
    return u * u * u / 8.0 + 3.0 * alpha * u;
  }};
  FundamentalEquation pa;
  pa.rep = Representation::Entropy;
  pa.kind = FundamentalEquation::Parametric{
      [alpha](const Jet4& r) { return r * r * r + 6.0 * alpha * r; },
      [](const Jet4& r, const Jet4& Q) { return r * r + Q * Q / (3.0 * (r * r)); },
      1e-3, 1e3};
  SplitMix64 rng2(99);
  int bad_twin = 0;
  for (int t = 0; t < 100; ++t) {
    const double M = 0.8 + 1.6 * rng2.next_double();
    const double Q = 0.55 * kSqrt3 * M / 2.0 * rng2.next_double();
    const Jet4 a = eval_jet(ex, {M, Q});
    const Jet4 b = eval_jet(pa, {M, Q});
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; i + j <= 4; ++j)
        if (std::abs(a.c[i][j] - b.c[i][j]) > 1e-8 * std::max(1.0, std::abs(a.c[i][j])))
          ++bad_twin;
  }
  report(10, bad_fd == 0 && bad_twin == 0,
         "finite-difference coefficient mismatches: " + std::to_string(bad_fd) +
             "; parametric/explicit twin mismatches: " + std::to_string(bad_twin));
}

// ---------------------------------------------------------------------------
// 11. Determinism and output contract: repeated seeded invocations are
//     byte-identical and golden files are stable.
void criterion11() {
  const std::string scan_cmd =
      "scan --model emgb --ensemble mass --params Q=1 --grid S=0.2:5:120";
  const RunResult s1 = run_cli(scan_cmd);
  const RunResult s2 = run_cli(scan_cmd);
  const RunResult v1 = run_cli("verify --model all --samples 32 --seed 9");
  const RunResult v2 = run_cli("verify --model all --samples 32 --seed 9");

  std::string golden;
  {
    std::ifstream f(std::string(GTD_GOLDEN_DIR) + "/scan_emgb_mass.csv",
                    std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    golden = ss.str();
  }
  const bool ok = s1.exit_code == 0 && v1.exit_code == 0 && s1.out == s2.out &&
                  v1.out == v2.out && !golden.empty() && s1.out == golden;
  report(11, ok,
         std::string("scan ") + (s1.out == s2.out ? "bit-identical" : "DIFFERS") +
             ", verify " + (v1.out == v2.out ? "bit-identical" : "DIFFERS") +
             ", golden file " +
             (!golden.empty() && s1.out == golden ? "stable" : "MISMATCH"));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  std::printf("%d/11 criteria passed\n", 11 - g_failures);
  return g_failures;
}
