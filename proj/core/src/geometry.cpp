#include "gtd/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "gtd/errors.hpp"

namespace gtd {

namespace {

SignatureClass classify(double g11, double g12, double g22) {
  const double det = g11 * g22 - g12 * g12;
  const double scale = std::max({std::abs(g11), std::abs(g12), std::abs(g22)});
  // Keep the guard tight: metrics whose determinant falls off faster than
  // their components (conformal factors vanishing at singular loci) must
  // stay evaluable as close to the locus as floating point allows, or the
  // surrounding root refinement cannot reach its accuracy target.
  if (std::abs(det) < 1e-18 * scale * scale || scale == 0.0)
    return SignatureClass::Degenerate;
  return det > 0.0 ? SignatureClass::Riemannian : SignatureClass::Lorentzian;
}

Metric2 assemble(const Jet2& j11, const Jet2& j12, const Jet2& j22) {
  Metric2 m;
  m.j11 = j11;
  m.j12 = j12;
  m.j22 = j22;
  m.g11 = j11.value();
  m.g12 = j12.value();
  m.g22 = j22.value();
  m.signature = classify(m.g11, m.g12, m.g22);
  return m;
}

}  // namespace

Metric2 gtd_metric_from_jet(const StatePoint& p, const Jet4& phi) {
  const Jet2 F1 = shift_to_derivative_jet(phi, 1, 0);
  const Jet2 F11 = shift_to_derivative_jet(phi, 2, 0);
  const Jet2 F22 = shift_to_derivative_jet(phi, 0, 2);
  const Jet2 L = jet2_var(1, p.e1) * F1;  // conformal factor E^1 Phi_1
  return assemble(-(L * F11), Jet2{}, L * F22);
}

Metric2 gtd_metric(const FundamentalEquation& eq, const StatePoint& p) {
  return gtd_metric_from_jet(p, eval_jet(eq, p));
}

Metric2 comparison_metric(const FundamentalEquation& eq, const StatePoint& p, MetricKind kind) {
  if (kind == MetricKind::GTD) return gtd_metric(eq, p);
  if (kind == MetricKind::Weinhold && eq.rep != Representation::Mass)
    throw WrongRepresentation("Weinhold metric requires the Mass representation");
  if (kind == MetricKind::Ruppeiner && eq.rep != Representation::Entropy)
    throw WrongRepresentation("Ruppeiner metric requires the Entropy representation");
  const Jet4 phi = eval_jet(eq, p);
  Jet2 h11 = shift_to_derivative_jet(phi, 2, 0);
  Jet2 h12 = shift_to_derivative_jet(phi, 1, 1);
  Jet2 h22 = shift_to_derivative_jet(phi, 0, 2);
  if (kind == MetricKind::Ruppeiner) return assemble(-h11, -h12, -h22);
  return assemble(h11, h12, h22);
}

double scalar_curvature(const Metric2& m) {
  if (m.signature == SignatureClass::Degenerate) throw DegenerateMetric();

  // Unpack component values and derivatives from the order-2 jets.
  double g[2][2], dg[2][2][2], ddg[2][2][2][2];
  const Jet2* jets[2][2] = {{&m.j11, &m.j12}, {&m.j12, &m.j22}};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const Jet2& j = *jets[a][b];
      g[a][b] = j.c[0][0];
      dg[a][b][0] = j.c[1][0];
      dg[a][b][1] = j.c[0][1];
      ddg[a][b][0][0] = 2.0 * j.c[2][0];
      ddg[a][b][0][1] = ddg[a][b][1][0] = j.c[1][1];
      ddg[a][b][1][1] = 2.0 * j.c[0][2];
    }

  const double det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
  double gi[2][2] = {{g[1][1] / det, -g[0][1] / det}, {-g[1][0] / det, g[0][0] / det}};

  // d(g^-1) = -g^-1 (dg) g^-1
  double dgi[2][2][2];
  for (int k = 0; k < 2; ++k)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        double s = 0.0;
        for (int p = 0; p < 2; ++p)
          for (int q = 0; q < 2; ++q) s += gi[a][p] * dg[p][q][k] * gi[q][b];
        dgi[a][b][k] = -s;
      }

  double Gam[2][2][2];  // Gam[a][b][c] = Gamma^a_{bc}
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        double s = 0.0;
        for (int mm = 0; mm < 2; ++mm)
          s += gi[a][mm] * (dg[mm][c][b] + dg[mm][b][c] - dg[b][c][mm]);
        Gam[a][b][c] = 0.5 * s;
      }

  double dGam[2][2][2][2];  // dGam[a][b][c][k] = d_k Gamma^a_{bc}
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int k = 0; k < 2; ++k) {
          double s = 0.0;
          for (int mm = 0; mm < 2; ++mm) {
            s += dgi[a][mm][k] * (dg[mm][c][b] + dg[mm][b][c] - dg[b][c][mm]);
            s += gi[a][mm] * (ddg[mm][c][b][k] + ddg[mm][b][c][k] - ddg[b][c][mm][k]);
          }
          dGam[a][b][c][k] = 0.5 * s;
        }

  // Ric_{bd} = d_a Gam^a_{bd} - d_d Gam^a_{ab} + Gam^a_{am} Gam^m_{bd}
  //            - Gam^a_{dm} Gam^m_{ab}
  double R = 0.0;
  for (int b = 0; b < 2; ++b)
    for (int d = 0; d < 2; ++d) {
      double ric = 0.0;
      for (int a = 0; a < 2; ++a) {
        ric += dGam[a][b][d][a] - dGam[a][a][b][d];
        for (int mm = 0; mm < 2; ++mm)
          ric += Gam[a][a][mm] * Gam[mm][b][d] - Gam[a][d][mm] * Gam[mm][a][b];
      }
      R += gi[b][d] * ric;
    }
  // Calibrated sign convention (see header).
  return -R;
}

LineElement line_element(const Metric2& m, double de1, double de2) {
  LineElement le;
  le.ds2 = m.g11 * de1 * de1 + 2.0 * m.g12 * de1 * de2 + m.g22 * de2 * de2;
  if (le.ds2 > 1e-14)
    le.cls = LineElement::positive;
  else if (le.ds2 < -1e-14)
    le.cls = LineElement::negative;
  else
    le.cls = LineElement::null;
  return le;
}

double probability_density(const Metric2& m, double de1, double de2) {
  const double det = m.detg();
  if (det == 0.0) return 0.0;
  const double ds2 = line_element(m, de1, de2).ds2;
  return std::sqrt(std::abs(det)) / (2.0 * M_PI) * std::exp(0.5 * ds2);
}

}  // namespace gtd
