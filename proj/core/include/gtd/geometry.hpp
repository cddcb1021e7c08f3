#ifndef GTD_GEOMETRY_HPP
#define GTD_GEOMETRY_HPP

#include "gtd/fundeq.hpp"

namespace gtd {

enum class SignatureClass { Riemannian, Lorentzian, Degenerate };
enum class MetricKind { GTD, Weinhold, Ruppeiner };

// Symmetric 2x2 metric value at a point together with the order-2 jets of
// its components (the data the curvature computation needs).
struct Metric2 {
  double g11 = 0.0, g12 = 0.0, g22 = 0.0;
  Jet2 j11, j12, j22;
  SignatureClass signature = SignatureClass::Degenerate;

  double detg() const { return g11 * g22 - g12 * g12; }
};

// Legendre-invariant equilibrium-manifold metric, n = 2 specialization:
// conformal factor L = E^1 * Phi_1, g11 = -L * Phi_11, g22 = +L * Phi_22,
// g12 = 0 (the eta-weighted symmetric product cancels the mixed terms).
Metric2 gtd_metric(const FundamentalEquation& eq, const StatePoint& p);
Metric2 gtd_metric_from_jet(const StatePoint& p, const Jet4& phi);

// Weinhold: Hessian of the potential (Mass representation).
// Ruppeiner: minus the Hessian of the entropy (Entropy representation).
Metric2 comparison_metric(const FundamentalEquation& eq, const StatePoint& p, MetricKind kind);

// Ricci scalar of the 2-D metric from Christoffel symbols, signature-
// agnostic.  Sign convention calibrated against the closed-form curvature of
// the charged Gauss-Bonnet mass ensemble (the negative of the convention in
// which the unit 2-sphere has R = +2).  Throws DegenerateMetric.
double scalar_curvature(const Metric2& m);

struct LineElement {
  double ds2 = 0.0;
  enum Class { positive, null, negative } cls = null;
};
LineElement line_element(const Metric2& m, double de1, double de2);

// sqrt(|det g|) / (2 pi) * exp(ds^2 / 2)
double probability_density(const Metric2& m, double de1, double de2);

}  // namespace gtd

#endif
