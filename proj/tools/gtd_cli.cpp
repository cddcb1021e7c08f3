// Command-line surface for the geometrothermodynamics engine: point
// evaluation, grid scans, transition location, stability maps, oracle
// verification, and the model catalog.  Outputs are machine-readable (CSV or
// JSON, schema "gtd/1") and bit-identical for identical invocations.
#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gtd/analysis.hpp"
#include "gtd/errors.hpp"
#include "gtd/geometry.hpp"
#include "gtd/models.hpp"
#include "gtd/thermo.hpp"

using nlohmann::json;
using namespace gtd;

namespace {

// ---- formatting ------------------------------------------------------------

std::string fmt17(double x) {
  if (std::isnan(x)) return "";  // NaN never escapes; caller clears domain_ok
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// JSON value for a double: plain number, "inf"/"-inf" strings for infinities,
// null for NaN (with domain_ok cleared by the caller).
json jnum(double x) {
  if (std::isnan(x)) return nullptr;
  if (std::isinf(x)) return x > 0 ? json("inf") : json("-inf");
  return json(x);
}

// ---- invocation ------------------------------------------------------------

struct RangeExpr {
  std::string var;
  double lo = 0.0, hi = 0.0;
  int n = 0;
};

struct Invocation {
  std::string model, entropy = "area", ensemble;
  std::vector<std::string> params, at, grid, sweep;
  std::string out, format, config;
  std::uint64_t seed = 42;
  int samples = -1;
  double tol = 1e-12;
};

[[noreturn]] void usage_error(const std::string& msg) { throw ParamError(msg); }

const std::vector<std::string> kKnownNames = {"Q", "Lambda", "alpha", "M", "S",
                                              "phi", "T", "q", "r"};

std::map<std::string, double> parse_pool(const std::vector<std::string>& lists) {
  std::map<std::string, double> pool;
  for (const auto& list : lists) {
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      const auto eq = item.find('=');
      if (eq == std::string::npos) usage_error("expected name=value, got '" + item + "'");
      const std::string name = item.substr(0, eq);
      if (std::find(kKnownNames.begin(), kKnownNames.end(), name) == kKnownNames.end())
        usage_error("unknown parameter name: " + name);
      std::size_t used = 0;
      double val;
      try {
        val = std::stod(item.substr(eq + 1), &used);
      } catch (const std::exception&) {
        usage_error("bad numeric value in '" + item + "'");
      }
      if (used != item.substr(eq + 1).size())
        usage_error("bad numeric value in '" + item + "'");
      pool[name] = val;
    }
  }
  return pool;
}

RangeExpr parse_range(const std::string& s) {
  const auto eq = s.find('=');
  if (eq == std::string::npos) usage_error("expected var=lo:hi:n, got '" + s + "'");
  RangeExpr r;
  r.var = s.substr(0, eq);
  if (std::find(kKnownNames.begin(), kKnownNames.end(), r.var) == kKnownNames.end())
    usage_error("unknown variable name: " + r.var);
  const std::string rest = s.substr(eq + 1);
  const auto c1 = rest.find(':');
  const auto c2 = rest.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    usage_error("expected var=lo:hi:n, got '" + s + "'");
  try {
    r.lo = std::stod(rest.substr(0, c1));
    r.hi = std::stod(rest.substr(c1 + 1, c2 - c1 - 1));
    r.n = std::stoi(rest.substr(c2 + 1));
  } catch (const std::exception&) {
    usage_error("bad range expression '" + s + "'");
  }
  if (!(r.lo < r.hi)) usage_error("range requires lo < hi in '" + s + "'");
  if (r.n < 2) usage_error("range requires n >= 2 in '" + s + "'");
  return r;
}

std::vector<RangeExpr> parse_ranges(const std::vector<std::string>& specs) {
  std::vector<RangeExpr> out;
  for (const auto& spec : specs) {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) out.push_back(parse_range(item));
  }
  return out;
}

// Config file: `key = value` lines, '#' comments; flags win over the file.
void apply_config(Invocation& inv, const std::map<std::string, bool>& flag_seen) {
  if (inv.config.empty()) return;
  std::ifstream in(inv.config);
  if (!in) usage_error("cannot open config file: " + inv.config);
  auto seen = [&](const std::string& k) {
    auto it = flag_seen.find(k);
    return it != flag_seen.end() && it->second;
  };
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (eq == std::string::npos) usage_error("bad config line: " + line);
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t");
      const auto b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (seen(key)) continue;
    if (key == "model") inv.model = val;
    else if (key == "entropy") inv.entropy = val;
    else if (key == "ensemble") inv.ensemble = val;
    else if (key == "params") inv.params.push_back(val);
    else if (key == "at") inv.at.push_back(val);
    else if (key == "grid") inv.grid.push_back(val);
    else if (key == "sweep") inv.sweep.push_back(val);
    else if (key == "seed") inv.seed = std::stoull(val);
    else if (key == "samples") inv.samples = std::stoi(val);
    else if (key == "tol") inv.tol = std::stod(val);
    else if (key == "format") inv.format = val;
    else if (key == "out") inv.out = val;
    else usage_error("unknown config key: " + key);
  }
}

ModelId resolve_id(const Invocation& inv) {
  if (inv.model.empty()) usage_error("--model is required");
  ModelId id;
  id.family = parse_family(inv.model);
  id.entropy = parse_entropy(inv.entropy);
  if (!inv.ensemble.empty())
    id.ensemble = parse_ensemble(inv.ensemble);
  else
    id.ensemble = id.entropy == EntropyKind::Modified ? Ensemble::Entropy : Ensemble::Mass;
  return id;
}

json model_json(const ModelBundle& b) {
  json params = json::object();
  for (const auto& [k, v] : b.eq.params) params[k] = jnum(v);
  return {{"family", family_name(b.id.family)},
          {"entropy", entropy_name(b.id.entropy)},
          {"ensemble", ensemble_name(b.id.ensemble)},
          {"params", params}};
}

// Resolves a fully specified point from the pool: picks the most specific
// sweep variable present (auxiliary variables like r or q take precedence
// over raw coordinates, hence the reverse scan).
StatePoint point_from_pool(const ModelBundle& b, const std::map<std::string, double>& pool) {
  for (auto it = b.sweep_vars.rbegin(); it != b.sweep_vars.rend(); ++it) {
    const auto found = pool.find(*it);
    if (found != pool.end()) return b.resolve(*it, found->second, pool);
  }
  std::string vars;
  for (const auto& v : b.sweep_vars) vars += (vars.empty() ? "" : ", ") + v;
  usage_error("point underdetermined: provide one of {" + vars + "} via --at/--params");
}

void emit(const Invocation& inv, const std::string& text) {
  if (inv.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(inv.out, std::ios::binary);
    if (!f) usage_error("cannot open output file: " + inv.out);
    f << text;
  }
}

// ---- row assembly (shared by eval and scan) --------------------------------

constexpr const char* kCsvHeader =
    "model,ensemble,entropy,e1,e2,T,C_Q,C_phi,C_S,M,H,F,G,g11,g22,detg,R,"
    "T_positive,stable,domain_ok";

struct Row {
  std::optional<StatePoint> point;
  std::optional<ThermoReport> report;
  std::optional<Metric2> metric;
  std::optional<double> R;
  bool domain_ok = true;
  std::string domain_message;
};

Row compute_row(const ModelBundle& b, const std::string& var, double val,
                const std::map<std::string, double>& pool) {
  Row row;
  try {
    row.point = b.resolve(var, val, pool);
    const Jet4 jet = eval_jet(b.eq, *row.point);
    row.report = thermo_report_from_jet(b.eq.rep, *row.point, jet);
    row.domain_ok = row.report->domain_ok;
    row.metric = gtd_metric_from_jet(*row.point, jet);
    try {
      row.R = scalar_curvature(*row.metric);
      if (std::isnan(*row.R)) {
        row.R.reset();
        row.domain_ok = false;
      }
    } catch (const DegenerateMetric& e) {
      row.domain_ok = false;
      row.domain_message = e.what();
    }
  } catch (const Error& e) {
    row.domain_ok = false;
    row.domain_message = e.what();
  }
  return row;
}

std::string csv_row(const ModelBundle& b, const Row& row) {
  std::vector<std::string> f(20);
  f[0] = family_name(b.id.family);
  f[1] = ensemble_name(b.id.ensemble);
  f[2] = entropy_name(b.id.entropy);
  bool ok = row.domain_ok;
  auto put = [&](int i, double v) {
    f[i] = fmt17(v);
    if (std::isnan(v)) ok = false;
  };
  if (row.point) {
    put(3, row.point->e1);
    put(4, row.point->e2);
  }
  if (row.report) {
    const ThermoReport& r = *row.report;
    put(5, r.T);
    if (r.C_Q) put(6, *r.C_Q);
    if (r.C_phi) put(7, *r.C_phi);
    if (r.C_S) put(8, *r.C_S);
    put(9, r.potentials.at("M"));
    put(10, r.potentials.at("H"));
    put(11, r.potentials.at("F"));
    put(12, r.potentials.at("G"));
    f[17] = r.T_positive ? "true" : "false";
    f[18] = r.stable ? "true" : "false";
  }
  if (row.metric) {
    put(13, row.metric->g11);
    put(14, row.metric->g22);
    put(15, row.metric->detg());
  }
  if (row.R) put(16, *row.R);
  f[19] = ok ? "true" : "false";
  std::string line;
  for (int i = 0; i < 20; ++i) {
    if (i) line += ',';
    line += f[i];
  }
  return line + "\n";
}

json row_json(const ModelBundle& b, const Row& row) {
  json j = {{"schema", "gtd/1"}, {"command", "eval"}, {"model", model_json(b)}};
  const auto& info = representation_info(b.eq.rep);
  bool ok = row.domain_ok;
  auto num = [&](double v) {
    if (std::isnan(v)) ok = false;
    return jnum(v);
  };
  if (row.point)
    j["point"] = {{info.coord1, num(row.point->e1)}, {info.coord2, num(row.point->e2)}};
  if (row.report) {
    const ThermoReport& r = *row.report;
    json t = {{"T", num(r.T)},
              {"conj1", num(r.conj1)},
              {"conj2", num(r.conj2)},
              {"T_positive", r.T_positive},
              {"stable", r.stable}};
    if (r.C_Q) t["C_Q"] = num(*r.C_Q);
    if (r.C_phi) t["C_phi"] = num(*r.C_phi);
    if (r.C_S) t["C_S"] = num(*r.C_S);
    json pots = json::object();
    for (const auto& [k, v] : r.potentials) pots[k] = num(v);
    t["potentials"] = pots;
    j["thermo"] = t;
  }
  if (row.metric)
    j["metric"] = {{"g11", num(row.metric->g11)},
                   {"g22", num(row.metric->g22)},
                   {"detg", num(row.metric->detg())}};
  if (row.R) j["R"] = num(*row.R);
  if (!row.domain_message.empty()) j["message"] = row.domain_message;
  j["domain_ok"] = ok;
  return j;
}

// ---- commands --------------------------------------------------------------

int cmd_eval(const Invocation& inv) {
  const ModelId id = resolve_id(inv);
  auto pool = parse_pool(inv.params);
  for (const auto& [k, v] : parse_pool(inv.at)) pool[k] = v;
  const ModelBundle b = make_model(id, pool);
  const StatePoint p = point_from_pool(b, pool);  // throws DomainError via eval below
  // Re-run through the shared row pipeline keyed on coord1 for uniformity.
  Row row;
  row.point = p;
  const Jet4 jet = eval_jet(b.eq, p);  // DomainError -> exit 2 in main
  row.report = thermo_report_from_jet(b.eq.rep, p, jet);
  row.domain_ok = row.report->domain_ok;
  row.metric = gtd_metric_from_jet(p, jet);
  try {
    row.R = scalar_curvature(*row.metric);
  } catch (const DegenerateMetric& e) {
    row.domain_ok = false;
    row.domain_message = e.what();
  }
  if (inv.format == "csv")
    emit(inv, std::string(kCsvHeader) + "\n" + csv_row(b, row));
  else
    emit(inv, row_json(b, row).dump(2) + "\n");
  return 0;
}

int cmd_scan(const Invocation& inv) {
  if (inv.format == "json") usage_error("scan emits CSV only");
  const ModelId id = resolve_id(inv);
  auto pool = parse_pool(inv.params);
  for (const auto& [k, v] : parse_pool(inv.at)) pool[k] = v;
  const ModelBundle b = make_model(id, pool);
  const auto ranges = parse_ranges(inv.grid);
  if (ranges.empty() || ranges.size() > 2)
    usage_error("--grid requires one or two var=lo:hi:n ranges");
  std::string text(kCsvHeader);
  text += "\n";
  auto value = [](const RangeExpr& r, int i) {
    return r.lo + (r.hi - r.lo) * i / (r.n - 1);
  };
  if (ranges.size() == 1) {
    const RangeExpr& r = ranges[0];
    for (int i = 0; i < r.n; ++i)
      text += csv_row(b, compute_row(b, r.var, value(r, i), pool));
  } else {
    const RangeExpr& ra = ranges[0];
    const RangeExpr& rb = ranges[1];
    for (int i = 0; i < ra.n; ++i)
      for (int j = 0; j < rb.n; ++j) {
        auto p = pool;
        p[rb.var] = value(rb, j);
        text += csv_row(b, compute_row(b, ra.var, value(ra, i), p));
      }
  }
  emit(inv, text);
  return 0;
}

SweepSpec sweep_from(const Invocation& inv, const ModelBundle& b,
                     const std::map<std::string, double>& pool) {
  const auto ranges = parse_ranges(inv.sweep);
  if (ranges.size() != 1) usage_error("--sweep requires exactly one var=lo:hi:n range");
  if (std::find(b.sweep_vars.begin(), b.sweep_vars.end(), ranges[0].var) ==
      b.sweep_vars.end())
    usage_error("variable '" + ranges[0].var + "' is not sweepable for this model");
  SweepSpec sw;
  sw.variable = ranges[0].var;
  sw.lo = ranges[0].lo;
  sw.hi = ranges[0].hi;
  sw.samples = ranges[0].n;
  sw.fixed = pool;
  return sw;
}

int cmd_transitions(const Invocation& inv) {
  const ModelId id = resolve_id(inv);
  auto pool = parse_pool(inv.params);
  for (const auto& [k, v] : parse_pool(inv.at)) pool[k] = v;
  const ModelBundle b = make_model(id, pool);
  const SweepSpec sw = sweep_from(inv, b, pool);
  json loci = json::array();
  for (const auto& t : locate_transitions(b, sw)) {
    json c = json::array();
    for (auto ind : t.coincident) c.push_back(indicator_name(ind));
    json l = {{"location", jnum(t.location)},
              {"indicator", indicator_name(t.indicator)},
              {"side_sign_lo", t.side_sign_lo},
              {"side_sign_hi", t.side_sign_hi},
              {"refined", t.refined},
              {"residual", jnum(t.residual)},
              {"coincident", c}};
    if (t.indicator == Indicator::CapacityDivergence)
      l["capacity"] = t.capacity == CapacityKind::CQ    ? "C_Q"
                      : t.capacity == CapacityKind::Cphi ? "C_phi"
                                                         : "C_S";
    loci.push_back(l);
  }
  json j = {{"schema", "gtd/1"},
            {"command", "transitions"},
            {"model", model_json(b)},
            {"sweep", {{"variable", sw.variable},
                       {"lo", jnum(sw.lo)},
                       {"hi", jnum(sw.hi)},
                       {"samples", sw.samples}}},
            {"loci", loci}};
  emit(inv, j.dump(2) + "\n");
  return 0;
}

int cmd_stability(const Invocation& inv) {
  const ModelId id = resolve_id(inv);
  auto pool = parse_pool(inv.params);
  for (const auto& [k, v] : parse_pool(inv.at)) pool[k] = v;
  const ModelBundle b = make_model(id, pool);
  const auto ranges = parse_ranges(inv.grid);
  if (ranges.size() != 2) usage_error("stability requires --grid with two var=lo:hi:n ranges");
  SweepSpec a{ranges[0].var, ranges[0].lo, ranges[0].hi, ranges[0].n, pool};
  SweepSpec bb{ranges[1].var, ranges[1].lo, ranges[1].hi, ranges[1].n, pool};
  static const char* phase_names[] = {"stable", "unstable", "unphysical", "boundary"};
  json cells = json::array();
  for (const auto& c : stability_scan(b, a, bb))
    cells.push_back({{"e1", jnum(c.point.e1)},
                     {"e2", jnum(c.point.e2)},
                     {"T_sign", c.T_sign},
                     {"C_sign", c.C_sign},
                     {"phase", phase_names[c.phase]}});
  json j = {{"schema", "gtd/1"},
            {"command", "stability"},
            {"model", model_json(b)},
            {"grid", {{ranges[0].var, {{"lo", jnum(a.lo)}, {"hi", jnum(a.hi)}, {"samples", a.samples}}},
                      {ranges[1].var, {{"lo", jnum(bb.lo)}, {"hi", jnum(bb.hi)}, {"samples", bb.samples}}}}},
            {"cells", cells}};
  emit(inv, j.dump(2) + "\n");
  return 0;
}

// Defaults that make every catalog entry constructible (overridden by any
// user-supplied parameter).
std::map<std::string, double> default_params(const CatalogEntry& ce) {
  std::map<std::string, double> p;
  for (const auto& ps : ce.params) {
    if (ps.name == "Lambda") p["Lambda"] = -1.0;
    if (ps.name == "alpha") p["alpha"] = ps.constraint == "alpha < 0" ? -0.25 : 1.0;
  }
  return p;
}

json verify_json(const ModelBundle& b, int samples, std::uint64_t seed) {
  const VerificationReport rep = verify_model(b, samples, seed);
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json cj = {{"name", c.name},
               {"status", c.status == OracleStatus::VerifiedAgainstRule ? "verified"
                                                                        : "printed-form"},
               {"n_used", c.n_used},
               {"max_rel_err", jnum(c.max_rel_err)}};
    if (c.status == OracleStatus::PaperOnly) {
      cj["fitted_factor"] = jnum(c.fitted_factor);
      cj["max_rel_err_after_factor"] = jnum(c.max_rel_err_after_factor);
    }
    checks.push_back(cj);
  }
  json j = {{"model", model_json(b)}, {"samples", rep.samples}, {"checks", checks}};
  if (rep.has_ruppeiner) {
    json ru = {{"n", rep.ruppeiner_n},
               {"max_abs_R", jnum(rep.ruppeiner_max_abs_R)},
               {"flat", rep.ruppeiner_max_abs_R < 1e-6}};
    // Flatness of the minus-entropy-Hessian metric is only asserted for the
    // charged Gauss-Bonnet model with area entropy; elsewhere the statistics
    // are informational.
    if (b.id == ModelId{Family::EMGB, EntropyKind::Area, Ensemble::Entropy})
      ru["flatness_claim"] = rep.ruppeiner_max_abs_R < 1e-6 ? "pass" : "fail";
    j["ruppeiner"] = ru;
  }
  return j;
}

int cmd_verify(const Invocation& inv) {
  const int samples = inv.samples > 0 ? inv.samples : 100;
  auto user = parse_pool(inv.params);
  json reports = json::array();
  if (inv.model == "all") {
    for (const auto& ce : model_catalog()) {
      auto p = default_params(ce);
      for (const auto& [k, v] : user) p[k] = v;
      reports.push_back(verify_json(make_model(ce.id, p), samples, inv.seed));
    }
  } else {
    const ModelId id = resolve_id(inv);
    // Fill required parameters from catalog defaults when absent.
    auto p = user;
    for (const auto& ce : model_catalog())
      if (ce.id == id)
        for (const auto& [k, v] : default_params(ce))
          if (!p.count(k)) p[k] = v;
    reports.push_back(verify_json(make_model(id, p), samples, inv.seed));
  }
  json j = {{"schema", "gtd/1"},
            {"command", "verify"},
            {"seed", inv.seed},
            {"samples", samples},
            {"reports", reports}};
  emit(inv, j.dump(2) + "\n");
  return 0;
}

int cmd_models(const Invocation& inv) {
  const auto catalog = model_catalog();
  if (inv.format == "json") {
    json arr = json::array();
    for (const auto& ce : catalog) {
      json params = json::array();
      for (const auto& ps : ce.params)
        params.push_back({{"name", ps.name},
                          {"required", ps.required},
                          {"constraint", ps.constraint}});
      arr.push_back({{"family", family_name(ce.id.family)},
                     {"entropy", entropy_name(ce.id.entropy)},
                     {"ensemble", ensemble_name(ce.id.ensemble)},
                     {"coords", {ce.coord1, ce.coord2}},
                     {"params", params},
                     {"oracles", ce.oracle_names},
                     {"sweep_vars", ce.sweep_vars}});
    }
    emit(inv, json{{"schema", "gtd/1"}, {"command", "models"}, {"models", arr}}.dump(2) + "\n");
    return 0;
  }
  std::string text;
  for (const auto& ce : catalog) {
    text += family_name(ce.id.family) + " --entropy " + entropy_name(ce.id.entropy) +
            " --ensemble " + ensemble_name(ce.id.ensemble);
    text += "  coords(" + ce.coord1 + "," + ce.coord2 + ")";
    if (!ce.params.empty()) {
      text += "  params[";
      bool first = true;
      for (const auto& ps : ce.params) {
        if (!first) text += "; ";
        first = false;
        text += ps.name;
        if (!ps.constraint.empty()) text += ": " + ps.constraint;
        text += ps.required ? " (required)" : " (optional)";
      }
      text += "]";
    }
    text += "  sweep{";
    for (std::size_t i = 0; i < ce.sweep_vars.size(); ++i)
      text += (i ? "," : "") + ce.sweep_vars[i];
    text += "}  reference{";
    for (std::size_t i = 0; i < ce.oracle_names.size(); ++i)
      text += (i ? "," : "") + ce.oracle_names[i];
    text += "}\n";
  }
  emit(inv, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometrothermodynamics engine for two-degree-of-freedom black-hole "
               "equilibrium manifolds"};
  app.require_subcommand(1);

  Invocation inv;
  std::map<std::string, bool> flag_seen;
  std::vector<std::pair<CLI::App*, std::string>> tracked;

  auto add_common = [&](CLI::App* sub, bool with_model) {
    if (with_model) {
      tracked.push_back({sub, "model"});
      sub->add_option("--model", inv.model, "Model family: emgb | emgb-lambda | eymgb");
      sub->add_option("--entropy", inv.entropy, "Entropy prescription: area | modified");
      sub->add_option("--ensemble", inv.ensemble,
                      "Ensemble: mass | entropy | enthalpy | gibbs");
      sub->add_option("--params", inv.params, "Model parameters, name=value[,name=value]");
      sub->add_option("--at", inv.at, "Point coordinates, name=value[,name=value]");
    }
    sub->add_option("--config", inv.config, "Config file (key = value lines; flags win)");
    sub->add_option("--out", inv.out, "Output file (default stdout)");
    sub->add_option("--format", inv.format, "Output format: csv | json");
    sub->add_option("--seed", inv.seed, "Deterministic sampling seed");
    sub->add_option("--samples", inv.samples, "Sample count override");
    sub->add_option("--tol", inv.tol, "Root-refinement tolerance");
    return sub;
  };

  CLI::App* eval = add_common(app.add_subcommand("eval", "Evaluate one state point"), true);
  CLI::App* scan = add_common(app.add_subcommand("scan", "CSV grid scan"), true);
  scan->add_option("--grid", inv.grid, "Grid ranges, var=lo:hi:n (one or two)");
  CLI::App* trans = add_common(
      app.add_subcommand("transitions", "Locate transition and singularity loci"), true);
  trans->add_option("--sweep", inv.sweep, "Sweep range, var=lo:hi:n");
  CLI::App* stab = add_common(app.add_subcommand("stability", "Phase-stability grid"), true);
  stab->add_option("--grid", inv.grid, "Grid ranges, var=lo:hi:n (two)");
  CLI::App* verify = add_common(
      app.add_subcommand("verify", "Cross-check against closed-form references"), true);
  CLI::App* models = add_common(app.add_subcommand("models", "List available models"), false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    // Track which flags were given so the config file cannot override them.
    for (CLI::App* sub : {eval, scan, trans, stab, verify, models}) {
      if (!sub->parsed()) continue;
      for (const char* name : {"--model", "--entropy", "--ensemble", "--params", "--at",
                               "--grid", "--sweep", "--seed", "--samples", "--tol",
                               "--format", "--out"}) {
        const auto* opt = sub->get_option_no_throw(name);
        if (opt && opt->count() > 0) flag_seen[std::string(name).substr(2)] = true;
      }
    }
    apply_config(inv, flag_seen);
    if (eval->parsed()) return cmd_eval(inv);
    if (scan->parsed()) return cmd_scan(inv);
    if (trans->parsed()) return cmd_transitions(inv);
    if (stab->parsed()) return cmd_stability(inv);
    if (verify->parsed()) return cmd_verify(inv);
    if (models->parsed()) return cmd_models(inv);
  } catch (const ParamError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const WrongRepresentation& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
