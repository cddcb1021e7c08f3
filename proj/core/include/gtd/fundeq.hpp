#ifndef GTD_FUNDEQ_HPP
#define GTD_FUNDEQ_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "gtd/jets.hpp"

namespace gtd {

// Which variable serves as the potential.  Each representation fixes a first
// law and with it the sign table used by the thermodynamic layer:
//   Mass     Phi=M(S,Q):   dM = T dS + phi dQ
//   Entropy  Phi=S(M,Q):   dS = (1/T) dM - (phi/T) dQ
//   Enthalpy Phi=H(S,phi): dH = T dS - Q dphi
//   Gibbs    Phi=G(T,phi): dG = -S dT - Q dphi
enum class Representation { Mass, Entropy, Enthalpy, Gibbs };

struct RepresentationInfo {
  const char* potential;
  const char* coord1;
  const char* coord2;
  const char* first_law;
};

const RepresentationInfo& representation_info(Representation rep);

// A point of the two-dimensional equilibrium manifold; the meaning of
// (e1, e2) is fixed by the representation.
struct StatePoint {
  double e1 = 0.0;
  double e2 = 0.0;
};

using JetFn1 = std::function<Jet4(const Jet4&)>;
using JetFn2 = std::function<Jet4(const Jet4&, const Jet4&)>;
// Returns the violated predicate's description, or nothing when the point is
// admissible.
using DomainFn = std::function<std::optional<std::string>(const StatePoint&)>;

struct FundamentalEquation {
  // Potential given directly as a jet-evaluable expression of the two
  // coordinates (closed under +,-,*,/,pow,ln,sqrt,exp).
  struct Explicit {
    JetFn2 f;
  };

  // Potential given through the horizon radius: entropy S(r) and an auxiliary
  // mass M(r, e2).  Evaluation solves M(r, Q) = M for r, then obtains the
  // (M, Q)-jet of S by series reversion.  S(r) must be strictly increasing at
  // the solution.
  struct Parametric {
    JetFn1 entropy_of_r;
    JetFn2 mass_of_r;
    double r_lo = 1e-6;
    double r_hi = 1e6;
  };

  // Numeric Legendre transform of `source` in the second coordinate:
  // Mass -> Enthalpy (eliminate Q in favor of phi = dM/dQ) or the inverse
  // Enthalpy -> Mass (eliminate phi in favor of Q = -dH/dphi).
  struct Transformed {
    std::shared_ptr<const FundamentalEquation> source;
  };

  Representation rep = Representation::Mass;
  std::map<std::string, double> params;
  std::variant<Explicit, Parametric, Transformed> kind;
  DomainFn domain;  // optional extra validity predicate
};

// Order-4 jet of the potential in the representation's coordinates at p.
// Throws DomainError / NoRootError / DegenerateJacobianError.
Jet4 eval_jet(const FundamentalEquation& eq, const StatePoint& p);

// Horizon radius for a Parametric equation at p = (M, Q); picks the largest
// root in the bracket (the outer horizon) when several exist.
double solve_r(const FundamentalEquation& eq, const StatePoint& p);

// Legendre transform in the second coordinate pair.  The result evaluates
// jets by 1-D Newton plus series reversion; exact to order 4 (the unknown
// top-order coefficients of the inverted conjugate series cancel).
FundamentalEquation legendre_transform(const FundamentalEquation& eq);

}  // namespace gtd

#endif
