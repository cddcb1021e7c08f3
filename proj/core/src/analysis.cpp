#include "gtd/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gtd/errors.hpp"
#include "gtd/geometry.hpp"
#include "gtd/rng.hpp"

namespace gtd {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double safe_eval(const std::function<double(double)>& f, double x) {
  try {
    return f(x);
  } catch (const Error&) {
    return kNaN;
  }
}

// Brent's method on a bracketing interval [a, b] with f(a) f(b) <= 0.
double brent(const std::function<double(double)>& f, double a, double b, double fa,
             double fb, double tol) {
  double c = a, fc = fa, d = b - a, e = d;
  for (int it = 0; it < 200; ++it) {
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 = 2.0 * 1e-16 * std::abs(b) + 0.5 * tol;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) return b;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p, q, r;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        q = fa / fc;
        r = fb / fc;
        p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : std::copysign(tol1, xm);
    fb = safe_eval(f, b);
    if (std::isnan(fb)) return b;
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
  }
  return b;
}

}  // namespace

std::vector<double> find_roots(const std::function<double(double)>& f, double lo,
                               double hi, int samples, double tol) {
  std::vector<double> roots;
  double px = 0.0, pf = 0.0;
  bool have_prev = false;
  for (int i = 0; i <= samples; ++i) {
    const double x = lo + (hi - lo) * i / samples;
    const double fx = safe_eval(f, x);
    if (!std::isfinite(fx)) {
      have_prev = false;
      continue;
    }
    if (fx == 0.0) {
      roots.push_back(x);
      have_prev = true;
      px = x;
      pf = fx;
      continue;
    }
    if (have_prev && (pf < 0.0) != (fx < 0.0))
      roots.push_back(brent(f, px, x, pf, fx, tol));
    px = x;
    pf = fx;
    have_prev = true;
  }
  std::sort(roots.begin(), roots.end());
  std::vector<double> out;
  for (double r : roots)
    if (out.empty() || r - out.back() > 10.0 * tol) out.push_back(r);
  return out;
}

std::string indicator_name(Indicator ind) {
  switch (ind) {
    case Indicator::CapacityDivergence: return "capacity_divergence";
    case Indicator::ZeroTemperature: return "zero_temperature";
    case Indicator::CurvatureSingularity: return "curvature_singularity";
    case Indicator::LnBreakdown: return "ln_breakdown";
    case Indicator::JetDegenerate: return "jet_degenerate";
  }
  return "";
}

namespace {

struct SweepContext {
  const ModelBundle& bundle;
  const SweepSpec& sweep;

  StatePoint point(double x) const {
    return bundle.resolve(sweep.variable, x, sweep.fixed);
  }
  Jet4 jet(double x) const { return eval_jet(bundle.eq, point(x)); }
};

double inv_or_zero(double c) {
  if (std::isinf(c)) return 0.0;
  if (c == 0.0) return kNaN;  // pole of 1/C, not a divergence of C
  return 1.0 / c;
}

}  // namespace

std::vector<TransitionLocus> locate_transitions(const ModelBundle& bundle,
                                                const SweepSpec& sweep) {
  const SweepContext ctx{bundle, sweep};
  const Representation rep = bundle.eq.rep;
  const double range = sweep.hi - sweep.lo;
  const double xtol = 1e-12 * std::max(1.0, std::max(std::abs(sweep.lo), std::abs(sweep.hi)));

  struct Channel {
    Indicator indicator;
    CapacityKind capacity;
    std::function<double(double)> f;
  };
  std::vector<Channel> channels;

  channels.push_back({Indicator::ZeroTemperature, CapacityKind::CQ, [ctx](double x) {
                        return thermo_report_from_jet(ctx.bundle.eq.rep, ctx.point(x),
                                                      ctx.jet(x)).T;
                      }});
  if (rep == Representation::Mass || rep == Representation::Entropy) {
    channels.push_back({Indicator::CapacityDivergence, CapacityKind::CQ, [ctx](double x) {
                          const auto r = thermo_report_from_jet(ctx.bundle.eq.rep,
                                                                ctx.point(x), ctx.jet(x));
                          return inv_or_zero(*r.C_Q);
                        }});
  }
  if (rep == Representation::Enthalpy) {
    channels.push_back({Indicator::CapacityDivergence, CapacityKind::Cphi, [ctx](double x) {
                          const auto r = thermo_report_from_jet(ctx.bundle.eq.rep,
                                                                ctx.point(x), ctx.jet(x));
                          return inv_or_zero(*r.C_phi);
                        }});
  }
  if (rep == Representation::Mass) {
    channels.push_back({Indicator::CapacityDivergence, CapacityKind::CS, [ctx](double x) {
                          const auto r = thermo_report_from_jet(ctx.bundle.eq.rep,
                                                                ctx.point(x), ctx.jet(x));
                          return inv_or_zero(*r.C_S);
                        }});
  }
  channels.push_back({Indicator::CurvatureSingularity, CapacityKind::CQ, [ctx](double x) {
                        const StatePoint p = ctx.point(x);
                        const double R = scalar_curvature(gtd_metric_from_jet(p, ctx.jet(x)));
                        return std::isinf(R) ? 0.0 : 1.0 / R;
                      }});
  // ln-type breakdown loci (the Yang-Mills family's logarithmic entropy).
  if (bundle.id.family == Family::EYMGB) {
    if (bundle.id.entropy == EntropyKind::Area) {
      channels.push_back({Indicator::LnBreakdown, CapacityKind::CQ, [ctx](double x) {
                            return std::log(ctx.point(x).e1);
                          }});
    } else {
      channels.push_back({Indicator::LnBreakdown, CapacityKind::CQ, [ctx](double x) {
                            return std::log(solve_r(ctx.bundle.eq, ctx.point(x)));
                          }});
    }
  }

  std::vector<TransitionLocus> loci;
  for (const auto& ch : channels) {
    auto roots = find_roots(ch.f, sweep.lo, sweep.hi, sweep.samples, xtol);
    if (ch.indicator == Indicator::CurvatureSingularity) {
      // 1/R can reach zero without changing sign (even-order curvature
      // poles); catch those as local minima of |1/R| that dip far below
      // their neighborhood, refined on the numerical derivative.
      const double h = range / sweep.samples;
      std::vector<double> fs(sweep.samples + 1);
      for (int i = 0; i <= sweep.samples; ++i)
        fs[i] = safe_eval(ch.f, sweep.lo + h * i);
      double delta = h / 8.0;
      auto deriv = [&](double x) {
        return (safe_eval(ch.f, x + delta) - safe_eval(ch.f, x - delta)) / (2.0 * delta);
      };
      for (int i = 1; i < sweep.samples; ++i) {
        if (!std::isfinite(fs[i - 1]) || !std::isfinite(fs[i]) || !std::isfinite(fs[i + 1]))
          continue;
        if ((fs[i - 1] > 0) != (fs[i] > 0) || (fs[i + 1] > 0) != (fs[i] > 0)) continue;
        if (std::abs(fs[i]) >= std::abs(fs[i - 1]) || std::abs(fs[i]) >= std::abs(fs[i + 1]))
          continue;
        const double a = sweep.lo + h * (i - 1), b = a + 2.0 * h;
        delta = h / 8.0;
        const double da = deriv(a), db = deriv(b);
        if (!std::isfinite(da) || !std::isfinite(db) || (da > 0) == (db > 0)) continue;
        double x0 = brent(deriv, a, b, da, db, xtol);
        // Second pass with a much smaller difference step: the coarse
        // central difference biases the minimum of an asymmetric dip.
        delta = h / 1024.0;
        const double a2 = x0 - h / 16.0, b2 = x0 + h / 16.0;
        const double da2 = deriv(a2), db2 = deriv(b2);
        if (std::isfinite(da2) && std::isfinite(db2) && (da2 > 0) != (db2 > 0))
          x0 = brent(deriv, a2, b2, da2, db2, xtol);
        const double f0 = safe_eval(ch.f, x0);
        const double nb = std::min(std::abs(fs[i - 1]), std::abs(fs[i + 1]));
        if (std::isfinite(f0) && std::abs(f0) <= 1e-6 * nb) roots.push_back(x0);
      }
      std::sort(roots.begin(), roots.end());
    }
    // Local scale of the indicator for the residual bound.
    double scale = 0.0;
    for (int i = 0; i <= 16; ++i) {
      const double v = safe_eval(ch.f, sweep.lo + range * i / 16);
      if (std::isfinite(v)) scale = std::max(scale, std::abs(v));
    }
    if (scale == 0.0) scale = 1.0;
    for (double r : roots) {
      TransitionLocus tl;
      tl.location = r;
      tl.indicator = ch.indicator;
      tl.capacity = ch.capacity;
      tl.residual = std::abs(safe_eval(ch.f, r));
      const double h = range / sweep.samples;
      const double flo = safe_eval(ch.f, r - h), fhi = safe_eval(ch.f, r + h);
      tl.side_sign_lo = std::isfinite(flo) ? (flo > 0) - (flo < 0) : 0;
      tl.side_sign_hi = std::isfinite(fhi) ? (fhi > 0) - (fhi < 0) : 0;
      const bool sign_change = tl.side_sign_lo * tl.side_sign_hi <= 0;
      // The refined point of the curvature channel can land exactly on the
      // degenerate locus, where 1/R itself is unevaluable; the degeneracy
      // plus the surrounding sign change is the singularity evidence.
      if (ch.indicator == Indicator::CurvatureSingularity && !std::isfinite(tl.residual) &&
          tl.side_sign_lo * tl.side_sign_hi < 0)
        tl.residual = 0.0;
      const bool residual_ok = std::isfinite(tl.residual) && tl.residual <= 1e-9 * scale;
      // Even-order touches are reported but marked unrefined: no transition
      // claim is made without a sign change.
      tl.refined = residual_ok && sign_change;
      if (residual_ok) loci.push_back(tl);
    }
  }
  // Cross-label coincidences.
  for (auto& a : loci)
    for (const auto& b : loci)
      if (&a != &b && a.indicator != b.indicator &&
          std::abs(a.location - b.location) <= 1e-6)
        a.coincident.push_back(b.indicator);
  std::sort(loci.begin(), loci.end(), [](const TransitionLocus& a, const TransitionLocus& b) {
    return a.location < b.location ||
           (a.location == b.location && a.indicator < b.indicator);
  });
  return loci;
}

std::vector<StabilityCell> stability_scan(const ModelBundle& bundle, const SweepSpec& a,
                                          const SweepSpec& b) {
  std::vector<StabilityCell> cells;
  cells.reserve(static_cast<std::size_t>(a.samples) * b.samples);
  for (int i = 0; i < a.samples; ++i) {
    const double x = a.lo + (a.hi - a.lo) * i / (a.samples - 1);
    for (int j = 0; j < b.samples; ++j) {
      const double y = b.lo + (b.hi - b.lo) * j / (b.samples - 1);
      StabilityCell cell;
      auto pool = a.fixed;
      pool[b.variable] = y;
      try {
        cell.point = bundle.resolve(a.variable, x, pool);
        const ThermoReport r = thermo_report(bundle.eq, cell.point);
        const std::optional<double>& cap =
            (bundle.eq.rep == Representation::Enthalpy) ? r.C_phi : r.C_Q;
        const double C = cap ? *cap : kNaN;
        cell.T_sign = (r.T > 0) - (r.T < 0);
        cell.C_sign = std::isfinite(C) ? (C > 0) - (C < 0) : 0;
        if (cell.T_sign < 0)
          cell.phase = StabilityCell::unphysical;
        else if (cell.T_sign == 0 || cell.C_sign == 0)
          cell.phase = StabilityCell::boundary;
        else
          cell.phase = cell.C_sign > 0 ? StabilityCell::stable : StabilityCell::unstable;
      } catch (const Error&) {
        cell.point = {x, y};
        cell.phase = StabilityCell::unphysical;  // out-of-domain recorded, not skipped
      }
      cells.push_back(cell);
    }
  }
  return cells;
}

std::vector<HelmholtzExtremum> helmholtz_extrema(const ModelBundle& bundle,
                                                 const SweepSpec& sweep) {
  if (bundle.eq.rep != Representation::Mass)
    throw WrongRepresentation("Helmholtz extrema require the Mass representation");
  const SweepContext ctx{bundle, sweep};
  // dF/dS = -S Phi_11: away from S = 0 the extrema are the zeros of Phi_11,
  // which are exactly the C_Q divergences.
  auto phi11 = [ctx](double x) { return ctx.jet(x).partial(2, 0); };
  const double xtol = 1e-12 * std::max(1.0, std::max(std::abs(sweep.lo), std::abs(sweep.hi)));
  std::vector<HelmholtzExtremum> out;
  for (double r : find_roots(phi11, sweep.lo, sweep.hi, sweep.samples, xtol)) {
    const Jet4 j = ctx.jet(r);
    HelmholtzExtremum e;
    e.location = r;
    // F_SS = -Phi_11 - S Phi_111 = -S Phi_111 at the root.
    e.is_min = -ctx.point(r).e1 * j.partial(3, 0) > 0.0;
    e.coincides_with_CQ_divergence = std::abs(j.partial(1, 0)) > 1e-9;
    out.push_back(e);
  }
  return out;
}

VerificationReport verify_model(const ModelBundle& bundle, int n_samples,
                                std::uint64_t seed) {
  VerificationReport rep;
  rep.id = bundle.id;
  rep.seed = seed;
  rep.samples = n_samples;

  struct Sample {
    std::map<std::string, double> pipeline;  // per-quantity values
  };
  std::map<std::string, std::vector<std::pair<double, double>>> pairs;  // oracle, pipeline

  Quasi2D q(seed);
  double ru_max = 0.0;
  int ru_n = 0;
  for (int k = 0; k < n_samples; ++k) {
    double u, v;
    q.next(u, v);
    const StatePoint p = bundle.sample(u, v);
    std::map<std::string, double> pipe;
    try {
      const Jet4 j = eval_jet(bundle.eq, p);
      const ThermoReport tr = thermo_report_from_jet(bundle.eq.rep, p, j);
      pipe["T"] = tr.T;
      if (bundle.eq.rep == Representation::Mass)
        pipe["phi"] = tr.conj2;
      else if (bundle.eq.rep == Representation::Entropy)
        pipe["phi"] = -tr.conj2 / tr.conj1;
      if (tr.C_Q) pipe["C_Q"] = *tr.C_Q;
      if (tr.C_phi) pipe["C_phi"] = *tr.C_phi;
      if (tr.C_S) pipe["C_S"] = *tr.C_S;
      const Metric2 m = gtd_metric_from_jet(p, j);
      pipe["g11"] = m.g11;
      pipe["g22"] = m.g22;
      try {
        pipe["R"] = scalar_curvature(m);
      } catch (const Error&) {}
      if (bundle.eq.rep == Representation::Entropy && tr.T > 0.0) {
        try {
          const double rr =
              scalar_curvature(comparison_metric(bundle.eq, p, MetricKind::Ruppeiner));
          if (std::isfinite(rr)) {
            ru_max = std::max(ru_max, std::abs(rr));
            ++ru_n;
          }
        } catch (const Error&) {}
      }
    } catch (const Error&) {
      continue;
    }
    for (const auto& [name, oracle] : bundle.oracles) {
      double ov;
      try {
        ov = oracle.f(p);
      } catch (const Error&) {
        continue;
      }
      auto it = pipe.find(name);
      if (it == pipe.end()) continue;
      const double pv = it->second;
      if (!std::isfinite(ov) || !std::isfinite(pv)) continue;
      if (std::abs(ov) > 1e6 || std::abs(pv) > 1e6) continue;  // near-singular
      pairs[name].emplace_back(ov, pv);
    }
  }
  rep.has_ruppeiner = ru_n > 0;
  rep.ruppeiner_max_abs_R = ru_max;
  rep.ruppeiner_n = ru_n;

  for (const auto& [name, oracle] : bundle.oracles) {
    OracleCheck chk;
    chk.name = name;
    chk.status = oracle.status;
    auto it = pairs.find(name);
    if (it != pairs.end()) {
      chk.n_used = static_cast<int>(it->second.size());
      for (const auto& [ov, pv] : it->second) {
        const double denom = std::max({std::abs(ov), std::abs(pv), 1e-9});
        chk.max_rel_err = std::max(chk.max_rel_err, std::abs(pv - ov) / denom);
      }
      if (oracle.status == OracleStatus::PaperOnly && !it->second.empty()) {
        std::vector<double> ratios;
        for (const auto& [ov, pv] : it->second)
          if (pv != 0.0) ratios.push_back(ov / pv);
        if (!ratios.empty()) {
          std::sort(ratios.begin(), ratios.end());
          chk.fitted_factor = ratios[ratios.size() / 2];
          for (const auto& [ov, pv] : it->second) {
            const double adj = chk.fitted_factor * pv;
            const double denom = std::max({std::abs(ov), std::abs(adj), 1e-9});
            chk.max_rel_err_after_factor =
                std::max(chk.max_rel_err_after_factor, std::abs(adj - ov) / denom);
          }
        }
      } else {
        chk.max_rel_err_after_factor = chk.max_rel_err;
      }
    }
    rep.checks.push_back(std::move(chk));
  }
  return rep;
}

}  // namespace gtd
