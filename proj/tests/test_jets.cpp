#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "gtd/errors.hpp"
#include "gtd/jets.hpp"
#include "gtd/rng.hpp"

#include "fd_oracle.hpp"

using namespace gtd;

namespace {

// Type-generic elementary functions so the same formula can be evaluated
// both as a jet and as plain doubles (for the finite-difference oracle).
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

struct Params {
  double a, b, c, p;
};

template <typename T>
T formula(int k, const T& x, const T& y, const Params& q) {
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

Jet4 random_jet(SplitMix64& rng, double base) {
  Jet4 a;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; i + j <= 4; ++j) a.c[i][j] = 2.0 * rng.next_double() - 1.0;
  a.c[0][0] = base;
  return a;
}

}  // namespace

TEST_CASE("jet of a monomial has the expected Taylor coefficients") {
  const Jet4 x = jet_var(1, 2.0), y = jet_var(2, 3.0);
  const Jet4 f = x * x * y;  // x^2 y at (2, 3)
  CHECK(f.value() == doctest::Approx(12.0).epsilon(1e-15));
  CHECK(f.partial(1, 0) == doctest::Approx(12.0).epsilon(1e-15));  // 2xy
  CHECK(f.partial(0, 1) == doctest::Approx(4.0).epsilon(1e-15));   // x^2
  CHECK(f.partial(2, 0) == doctest::Approx(6.0).epsilon(1e-15));   // 2y
  CHECK(f.partial(1, 1) == doctest::Approx(4.0).epsilon(1e-15));   // 2x
  CHECK(f.c[2][1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(f.c[3][0] == 0.0);
  CHECK(f.c[0][2] == 0.0);
}

TEST_CASE("elementary-function coefficients: ln, exp, sqrt, pow") {
  const Jet4 x = jet_var(1, 2.0);
  const Jet4 l = ln(x);
  for (int k = 1; k <= 4; ++k)
    CHECK(l.c[k][0] ==
          doctest::Approx((k % 2 ? 1.0 : -1.0) / (k * std::pow(2.0, k))).epsilon(1e-14));

  const Jet4 e = exp(jet_var(1, 1.0));
  for (int k = 0; k <= 4; ++k) {
    static const double fact[5] = {1, 1, 2, 6, 24};
    CHECK(e.c[k][0] == doctest::Approx(std::exp(1.0) / fact[k]).epsilon(1e-14));
  }

  const Jet4 s = sqrt(jet_var(1, 4.0));
  CHECK(s.value() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(s.partial(1, 0) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(s.partial(2, 0) == doctest::Approx(-1.0 / 32.0).epsilon(1e-14));

  const Jet4 p = pow(jet_var(1, 1.5), 2.5);
  CHECK(p.partial(1, 0) == doctest::Approx(2.5 * std::pow(1.5, 1.5)).epsilon(1e-14));
}

TEST_CASE("pow of a non-positive base throws unless the exponent is integral") {
  CHECK_THROWS_AS(pow(jet_var(1, -1.0), 0.5), DomainError);
  CHECK_THROWS_AS(ln(jet_var(1, -2.0)), DomainError);
  CHECK_THROWS_AS(sqrt(jet_var(1, -4.0)), DomainError);
  const Jet4 p = pow(jet_var(1, -2.0), 2.0);  // integral exponent is fine
  CHECK(p.value() == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(p.partial(1, 0) == doctest::Approx(-4.0).epsilon(1e-14));
}

TEST_CASE("product rule holds coefficientwise for random jets") {
  SplitMix64 rng(101);
  for (int t = 0; t < 20; ++t) {
    const Jet4 a = random_jet(rng, 2.0 * rng.next_double() - 1.0);
    const Jet4 b = random_jet(rng, 2.0 * rng.next_double() - 1.0);
    const Jet4 ab = a * b;
    // first partials: (ab)_x = a_x b + a b_x
    CHECK(ab.partial(1, 0) ==
          doctest::Approx(a.partial(1, 0) * b.value() + a.value() * b.partial(1, 0))
              .epsilon(1e-13));
    CHECK(ab.partial(0, 1) ==
          doctest::Approx(a.partial(0, 1) * b.value() + a.value() * b.partial(0, 1))
              .epsilon(1e-13));
  }
}

TEST_CASE("division is the exact inverse of multiplication") {
  SplitMix64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const Jet4 a = random_jet(rng, 2.0 * rng.next_double() - 1.0);
    Jet4 b = random_jet(rng, 0.0);
    b.c[0][0] = 1.0 + rng.next_double();  // bounded away from zero
    const Jet4 r = (a * b) / b;
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; i + j <= 4; ++j)
        CHECK(std::abs(r.c[i][j] - a.c[i][j]) <=
              1e-12 * std::max(1.0, std::abs(a.c[i][j])));
  }
}

TEST_CASE("division by a zero-valued jet throws") {
  Jet4 b = jet_var(1, 0.0);
  CHECK_THROWS_AS(jet_const(1.0) / b, DivisionByZeroJet);
}

TEST_CASE("50 random composite functions match Richardson finite differences") {
  SplitMix64 rng(2024);
  static const double tol_low = 1e-5, tol_high = 1e-3;
  for (int t = 0; t < 50; ++t) {
    const int k = static_cast<int>(rng.next_u64() % 8);
    const Params q{0.3 + 1.2 * rng.next_double(), 0.3 + 1.2 * rng.next_double(),
                   0.3 + 1.2 * rng.next_double(), -1.5 + 4.0 * rng.next_double()};
    const double x0 = 0.8 + rng.next_double();
    const double y0 = 0.5 + 0.9 * rng.next_double();
    const Jet4 jet = formula(k, jet_var(1, x0), jet_var(2, y0), q);
    auto f = [&](double x, double y) { return formula(k, x, y, q); };
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; i + j <= 4; ++j) {
        const double expect = fd::jet_coeff(f, x0, y0, i, j);
        const double got = jet.c[i][j];
        const double tol = (i + j <= 2) ? tol_low : tol_high;
        // relative with a unit floor: the formulas are O(1) and the
        // finite-difference oracle cannot resolve coefficients much below
        // its own truncation error
        const double denom = std::max({std::abs(expect), std::abs(got), 1.0});
        INFO("formula ", k, " trial ", t, " coeff (", i, ",", j, "): jet ", got,
             " fd ", expect);
        CHECK(std::abs(got - expect) <= tol * denom);
      }
  }
}

TEST_CASE("shift_to_derivative_jet produces the exact jet of a partial") {
  // f = x^3 y^2; d2f/dxdy = 6 x^2 y
  const Jet4 f = [&] {
    const Jet4 x = jet_var(1, 2.0), y = jet_var(2, 3.0);
    return x * x * x * y * y;
  }();
  const Jet2 d = shift_to_derivative_jet(f, 1, 1);
  CHECK(d.c[0][0] == doctest::Approx(72.0).epsilon(1e-15));   // 6 x^2 y
  CHECK(d.c[1][0] == doctest::Approx(72.0).epsilon(1e-15));   // 12 x y
  CHECK(d.c[0][1] == doctest::Approx(24.0).epsilon(1e-15));   // 6 x^2
  CHECK(d.c[2][0] == doctest::Approx(18.0).epsilon(1e-15));   // (1/2) 12 y
  CHECK(d.c[1][1] == doctest::Approx(24.0).epsilon(1e-15));   // 12 x
  CHECK(d.c[0][2] == 0.0);
}

TEST_CASE("series reversion inverts the first variable") {
  // A = 2x + x^2 + y at (0, 0); A(X(du, dy), dy) - A0 == du identically.
  const Jet4 A = [&] {
    const Jet4 x = jet_var(1, 0.0), y = jet_var(2, 0.0);
    return 2.0 * x + x * x + y;
  }();
  const Jet4 X = invert_first(A);
  Jet4 dA = A;
  dA.c[0][0] = 0.0;
  const Jet4 round = compose(dA, X, jet_var(2, 0.0));
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; i + j <= 4; ++j) {
      const double expect = (i == 1 && j == 0) ? 1.0 : 0.0;
      CHECK(std::abs(round.c[i][j] - expect) <= 1e-12);
    }
}

TEST_CASE("reversion with a vanishing leading derivative throws") {
  const Jet4 A = [&] {
    const Jet4 x = jet_var(1, 0.0), y = jet_var(2, 0.0);
    return x * x + y;  // dA/dx = 0 at the base point
  }();
  CHECK_THROWS_AS(invert_first(A), DegenerateJacobianError);
}
