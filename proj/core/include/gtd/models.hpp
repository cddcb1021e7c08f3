#ifndef GTD_MODELS_HPP
#define GTD_MODELS_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gtd/fundeq.hpp"

namespace gtd {

enum class Family { EMGB, EMGB_Lambda, EYMGB };
enum class EntropyKind { Area, Modified };
enum class Ensemble { Mass, Entropy, Enthalpy, Gibbs };

struct ModelId {
  Family family = Family::EMGB;
  EntropyKind entropy = EntropyKind::Area;
  Ensemble ensemble = Ensemble::Mass;

  bool operator==(const ModelId&) const = default;
};

// CLI spellings: family "emgb" | "emgb-lambda" | "eymgb", entropy
// "area" | "modified", ensemble "mass" | "entropy" | "enthalpy" | "gibbs".
std::string family_name(Family f);
std::string entropy_name(EntropyKind e);
std::string ensemble_name(Ensemble e);
Family parse_family(const std::string& s);
EntropyKind parse_entropy(const std::string& s);
Ensemble parse_ensemble(const std::string& s);

enum class OracleStatus { VerifiedAgainstRule, PaperOnly };

struct Oracle {
  OracleStatus status = OracleStatus::VerifiedAgainstRule;
  std::function<double(const StatePoint&)> f;
};

struct ModelBundle {
  ModelId id;
  FundamentalEquation eq;
  // Closed-form scalar reference functions of the state point, evaluated
  // with plain floating point (no jets); used as verification oracles.
  std::map<std::string, Oracle> oracles;
  // Maps the unit square into a representative patch of the validity region
  // (used by the quasi-random verification harness).
  std::function<StatePoint(double, double)> sample;
  // Resolves a named sweep variable (a coordinate, or an auxiliary variable
  // such as the horizon radius r or the rescaled charge q) plus a pool of
  // fixed named values into a state point.
  std::function<StatePoint(const std::string&, double,
                           const std::map<std::string, double>&)> resolve;
  std::vector<std::string> sweep_vars;  // accepted variable names
};

// Parameter names follow the CLI spelling exactly: Q, Lambda, alpha, M, S,
// phi, T, q, r; `alpha` always denotes the rescaled quadratic-curvature
// coupling.  Throws ParamError for missing/out-of-range parameters or a
// non-constructible id combination.
ModelBundle make_model(ModelId id, const std::map<std::string, double>& params);

double oracle_eval(const ModelBundle& bundle, const std::string& name, const StatePoint& p);

struct ParamSpec {
  std::string name;
  bool required = false;
  std::string constraint;  // human-readable, e.g. "Lambda < 0"
};

struct CatalogEntry {
  ModelId id;
  std::vector<ParamSpec> params;
  std::vector<std::string> oracle_names;
  std::string coord1, coord2;
  std::vector<std::string> sweep_vars;
};

// Complete, stable-ordered listing of every constructible id.
std::vector<CatalogEntry> model_catalog();

}  // namespace gtd

#endif
