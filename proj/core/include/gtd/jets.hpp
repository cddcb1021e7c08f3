#ifndef GTD_JETS_HPP
#define GTD_JETS_HPP

#include <array>

namespace gtd {

// Bivariate truncated Taylor jet of total order 4.
//
// c[i][j] = (1/(i! j!)) * d^{i+j} f / dx^i dy^j at the expansion point,
// stored only for i+j <= 4; the remaining slots of the 5x5 table are kept
// at zero and never read.  Taylor normalization keeps the Cauchy product
// free of binomial factors.
struct Jet4 {
  std::array<std::array<double, 5>, 5> c{};

  double value() const { return c[0][0]; }
  // Raw mixed partial d^{i+j}f/dx^i dy^j (undoes the factorial scaling).
  double partial(int i, int j) const;
};

// Order-2 jet (6 coefficients), used for metric components whose own first
// and second derivatives feed the curvature computation.
struct Jet2 {
  std::array<std::array<double, 3>, 3> c{};

  double value() const { return c[0][0]; }
  double partial(int i, int j) const;
};

// --- construction -----------------------------------------------------------

Jet4 jet_const(double v);
// Jet of the coordinate function x (index 1) or y (index 2) at `value`.
Jet4 jet_var(int index, double value);

Jet2 jet2_const(double v);
Jet2 jet2_var(int index, double value);

// --- arithmetic -------------------------------------------------------------

Jet4 operator+(const Jet4& a, const Jet4& b);
Jet4 operator-(const Jet4& a, const Jet4& b);
Jet4 operator-(const Jet4& a);
Jet4 operator*(const Jet4& a, const Jet4& b);
// Reciprocal via the geometric-series recurrence; throws DivisionByZeroJet
// when |b.value| < epsilon (default denies only zero-scale denominators:
// near-singular evaluation is precisely the interesting regime).
Jet4 operator/(const Jet4& a, const Jet4& b);

Jet4 operator+(const Jet4& a, double s);
Jet4 operator+(double s, const Jet4& a);
Jet4 operator-(const Jet4& a, double s);
Jet4 operator-(double s, const Jet4& a);
Jet4 operator*(const Jet4& a, double s);
Jet4 operator*(double s, const Jet4& a);
Jet4 operator/(const Jet4& a, double s);
Jet4 operator/(double s, const Jet4& a);

Jet2 operator+(const Jet2& a, const Jet2& b);
Jet2 operator-(const Jet2& a, const Jet2& b);
Jet2 operator-(const Jet2& a);
Jet2 operator*(const Jet2& a, const Jet2& b);
Jet2 operator*(const Jet2& a, double s);
Jet2 operator*(double s, const Jet2& a);

// --- elementary functions ---------------------------------------------------
// Univariate Taylor series of the host function about a.value, composed with
// the nilpotent part of the jet.  pow/ln/sqrt require a.value > 0 (DomainError
// otherwise; integer exponents with nonzero base are admitted for pow).

Jet4 pow(const Jet4& a, double r);
Jet4 ln(const Jet4& a);
Jet4 sqrt(const Jet4& a);
Jet4 exp(const Jet4& a);

// --- derivative extraction --------------------------------------------------

// Order-2 jet of the mixed partial d^{i+j}f/dx^i dy^j (i+j <= 2, else
// IndexError).  Exact: the needed coefficients live at total order <= 4.
Jet2 shift_to_derivative_jet(const Jet4& a, int i, int j);

// Order-2 truncation (identity case of the shift).
Jet2 truncate2(const Jet4& a);

// --- composition / reversion (used by implicit and transformed equations) ---

// Sum of A.c[i][j] * X^i * Y^j over i+j <= 4; X and Y must have zero value
// (their constant terms are the expansion point shift, already absorbed).
Jet4 compose(const Jet4& A, const Jet4& X, const Jet4& Y);

// Swap the roles of the two variables: c[i][j] <-> c[j][i].
Jet4 transpose(const Jet4& a);

// Series reversion in the first variable: given the jet A of u(x,y) with
// A.c[1][0] != 0, returns the jet X of x as a function of (du, y) where
// du = u - A.value.  Throws DegenerateJacobianError when |A.c[1][0]| < 1e-12.
Jet4 invert_first(const Jet4& A);

// Same for the second variable, via the transpose trick.
Jet4 invert_second(const Jet4& A);

}  // namespace gtd

#endif
