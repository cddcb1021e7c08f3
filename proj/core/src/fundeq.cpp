#include "gtd/fundeq.hpp"

#include <cmath>
#include <vector>

#include "gtd/errors.hpp"

namespace gtd {

const RepresentationInfo& representation_info(Representation rep) {
  static const RepresentationInfo kInfo[] = {
      {"M", "S", "Q", "dM = T dS + phi dQ"},
      {"S", "M", "Q", "dS = (1/T) dM - (phi/T) dQ"},
      {"H", "S", "phi", "dH = T dS - Q dphi"},
      {"G", "T", "phi", "dG = -S dT - Q dphi"},
  };
  return kInfo[static_cast<int>(rep)];
}

namespace {

void check_domain(const FundamentalEquation& eq, const StatePoint& p) {
  if (eq.domain) {
    if (auto violated = eq.domain(p)) throw DomainError(*violated);
  }
}

double mass_value(const FundamentalEquation::Parametric& par, double r, double q) {
  return par.mass_of_r(jet_const(r), jet_const(q)).value();
}

double solve_r_impl(const FundamentalEquation::Parametric& par, double M, double Q) {
  const double tol = 1e-13 * std::max(1.0, std::abs(M));
  // Coarse log-spaced scan for sign-change brackets of M(r) - M.
  const int n = 512;
  const double llo = std::log(par.r_lo), lhi = std::log(par.r_hi);
  double prev_r = 0.0, prev_g = 0.0;
  bool have_prev = false;
  std::vector<std::pair<double, double>> brackets;
  for (int i = 0; i <= n; ++i) {
    const double r = std::exp(llo + (lhi - llo) * i / n);
    double g;
    try {
      g = mass_value(par, r, Q) - M;
    } catch (const Error&) {
      have_prev = false;
      continue;
    }
    if (!std::isfinite(g)) {
      have_prev = false;
      continue;
    }
    if (have_prev && ((prev_g < 0.0) != (g < 0.0) || g == 0.0))
      brackets.emplace_back(prev_r, r);
    prev_r = r;
    prev_g = g;
    have_prev = true;
  }
  if (brackets.empty())
    throw NoRootError("no horizon radius solves M(r, Q) = M in the bracket");
  // Outer horizon: largest root.
  auto [a, b] = brackets.back();
  double ga = mass_value(par, a, Q) - M;
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (a + b);
    const double gm = mass_value(par, m, Q) - M;
    if (std::abs(gm) <= tol || 0.5 * (b - a) < 1e-16 * m) {
      a = b = m;
      break;
    }
    if ((ga < 0.0) == (gm < 0.0)) {
      a = m;
      ga = gm;
    } else {
      b = m;
    }
  }
  double r = 0.5 * (a + b);
  // Newton polish to the full tolerance.
  for (int it = 0; it < 60; ++it) {
    const Jet4 j = par.mass_of_r(jet_var(1, r), jet_const(Q));
    const double g = j.value() - M;
    if (std::abs(g) <= tol) return r;
    const double dg = j.c[1][0];
    if (std::abs(dg) < 1e-300) break;
    r -= g / dg;
  }
  if (std::abs(mass_value(par, r, Q) - M) <= tol) return r;
  throw NoRootError("horizon-radius iteration did not converge");
}

Jet4 eval_parametric(const FundamentalEquation& eq,
                     const FundamentalEquation::Parametric& par, const StatePoint& p) {
  const double rH = solve_r_impl(par, p.e1, p.e2);
  const Jet4 A = par.mass_of_r(jet_var(1, rH), jet_var(2, p.e2));
  if (std::abs(A.c[1][0]) < 1e-12)
    throw DegenerateJacobianError("dM/dr below 1e-12 at the horizon radius");
  const Jet4 B = par.entropy_of_r(jet_var(1, rH));
  if (B.c[1][0] <= 0.0) throw DomainError("dS/dr > 0 (entropy parametrization monotone)");
  const Jet4 X = invert_first(A);         // dr as a series in (dM, dQ)
  const Jet4 V = jet_var(2, 0.0);
  return compose(B, X, V);                // S(M, Q) jet
}

// Legendre transform evaluation.  sigma = +1 for Mass -> Enthalpy (conjugate
// z = phi = +dPhi/dy), -1 for Enthalpy -> Mass (z = Q = -dPhi/dy).  In both
// directions Psi = Phi - y * dPhi/dy, i.e. Psi = Phi - sigma * y * z.
Jet4 eval_transformed(const FundamentalEquation& src, double sigma, const StatePoint& p) {
  const double x = p.e1, z = p.e2;
  // 1-D Newton for the eliminated coordinate y: sigma * dPhi/dy (x, y) = z.
  double y = 0.0;
  auto it_count = 0;
  Jet4 phi;
  for (;; ++it_count) {
    if (it_count > 200) throw NoRootError("conjugate-relation inversion did not converge");
    phi = eval_jet(src, {x, y});
    const double g = sigma * phi.c[0][1] - z;
    const double dg = sigma * 2.0 * phi.c[0][2];
    if (std::abs(g) <= 1e-13 * std::max(1.0, std::abs(z))) break;
    if (std::abs(dg) < 1e-12)
      throw DegenerateJacobianError("conjugate relation not invertible (second derivative ~ 0)");
    y -= g / dg;
    if (!std::isfinite(y)) throw NoRootError("conjugate-relation inversion diverged");
  }
  if (std::abs(2.0 * phi.c[0][2]) < 1e-12)
    throw DegenerateJacobianError("conjugate relation not invertible (second derivative ~ 0)");
  // Jet of the conjugate z(x, y), complete through total order 3.
  Jet4 P;
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; i + j <= 3; ++j) P.c[i][j] = sigma * phi.c[i][j + 1] * (j + 1);
  Jet4 Y = invert_second(P);  // dy as a series in (dx, dz)
  // The order-4 coefficients of Y would need order-5 data of Phi; their
  // contribution to Psi cancels exactly (dPhi/dy = sigma*z at the base
  // point), so zeroing them keeps the transform exact through order 4.
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; i + j <= 4; ++j)
      if (i + j == 4) Y.c[i][j] = 0.0;
  const Jet4 U = jet_var(1, 0.0);
  const Jet4 dz = jet_var(2, 0.0);
  const Jet4 yfull = Y + jet_const(y);
  const Jet4 zfull = dz + jet_const(z);
  return compose(phi, U, Y) - sigma * (yfull * zfull);
}

}  // namespace

double solve_r(const FundamentalEquation& eq, const StatePoint& p) {
  const auto* par = std::get_if<FundamentalEquation::Parametric>(&eq.kind);
  if (!par) throw WrongRepresentation("solve_r requires a parametric fundamental equation");
  return solve_r_impl(*par, p.e1, p.e2);
}

Jet4 eval_jet(const FundamentalEquation& eq, const StatePoint& p) {
  check_domain(eq, p);
  if (const auto* ex = std::get_if<FundamentalEquation::Explicit>(&eq.kind))
    return ex->f(jet_var(1, p.e1), jet_var(2, p.e2));
  if (const auto* par = std::get_if<FundamentalEquation::Parametric>(&eq.kind))
    return eval_parametric(eq, *par, p);
  const auto& tr = std::get<FundamentalEquation::Transformed>(eq.kind);
  const double sigma = (tr.source->rep == Representation::Mass) ? +1.0 : -1.0;
  return eval_transformed(*tr.source, sigma, p);
}

FundamentalEquation legendre_transform(const FundamentalEquation& eq) {
  if (eq.rep != Representation::Mass && eq.rep != Representation::Enthalpy)
    throw WrongRepresentation(
        "legendre_transform handles the Mass <-> Enthalpy pair only");
  FundamentalEquation out;
  out.rep = (eq.rep == Representation::Mass) ? Representation::Enthalpy
                                             : Representation::Mass;
  out.params = eq.params;
  out.kind = FundamentalEquation::Transformed{
      std::make_shared<FundamentalEquation>(eq)};
  return out;
}

}  // namespace gtd
