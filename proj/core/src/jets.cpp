#include "gtd/jets.hpp"

#include <cmath>

#include "gtd/errors.hpp"

namespace gtd {

namespace {

constexpr double kRecipEps = 1e-300;

bool nearly_integer(double r) {
  return std::abs(r - std::round(r)) < 1e-12;
}

}  // namespace

double Jet4::partial(int i, int j) const {
  static const double fact[5] = {1, 1, 2, 6, 24};
  if (i < 0 || j < 0 || i + j > 4) throw IndexError("Jet4::partial: i+j must be <= 4");
  return c[i][j] * fact[i] * fact[j];
}

double Jet2::partial(int i, int j) const {
  static const double fact[3] = {1, 1, 2};
  if (i < 0 || j < 0 || i + j > 2) throw IndexError("Jet2::partial: i+j must be <= 2");
  return c[i][j] * fact[i] * fact[j];
}

Jet4 jet_const(double v) {
  Jet4 r;
  r.c[0][0] = v;
  return r;
}

Jet4 jet_var(int index, double value) {
  if (index != 1 && index != 2) throw IndexError("jet_var: index must be 1 or 2");
  Jet4 r;
  r.c[0][0] = value;
  if (index == 1)
    r.c[1][0] = 1.0;
  else
    r.c[0][1] = 1.0;
  return r;
}

Jet2 jet2_const(double v) {
  Jet2 r;
  r.c[0][0] = v;
  return r;
}

Jet2 jet2_var(int index, double value) {
  if (index != 1 && index != 2) throw IndexError("jet2_var: index must be 1 or 2");
  Jet2 r;
  r.c[0][0] = value;
  if (index == 1)
    r.c[1][0] = 1.0;
  else
    r.c[0][1] = 1.0;
  return r;
}

Jet4 operator+(const Jet4& a, const Jet4& b) {
  Jet4 r;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; i + j <= 4; ++j) r.c[i][j] = a.c[i][j] + b.c[i][j];
  return r;
}

Jet4 operator-(const Jet4& a, const Jet4& b) {
  Jet4 r;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; i + j <= 4; ++j) r.c[i][j] = a.c[i][j] - b.c[i][j];
  return r;
}

Jet4 operator-(const Jet4& a) {
  Jet4 r;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; i + j <= 4; ++j) r.c[i][j] = -a.c[i][j];
  return r;
}

Jet4 operator*(const Jet4& a, const Jet4& b) {
  Jet4 r;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; i + j <= 4; ++j) {
      double s = 0.0;
      for (int p = 0; p <= i; ++p)
        for (int q = 0; q <= j; ++q) s += a.c[p][q] * b.c[i - p][j - q];
      r.c[i][j] = s;
    }
  return r;
}

Jet4 operator/(const Jet4& a, const Jet4& b) {
  const double b0 = b.c[0][0];
  if (std::abs(b0) < kRecipEps) throw DivisionByZeroJet();
  // 1/b = (1/b0) * (1 - w + w^2 - w^3 + w^4), w = b/b0 - 1 (nilpotent).
  Jet4 w = b * (1.0 / b0);
  w.c[0][0] = 0.0;
  Jet4 inv = jet_const(1.0) - w;
  inv = jet_const(1.0) - w * inv;
  inv = jet_const(1.0) - w * inv;
  inv = jet_const(1.0) - w * inv;
  return a * inv * (1.0 / b0);
}

Jet4 operator+(const Jet4& a, double s) { return a + jet_const(s); }
Jet4 operator+(double s, const Jet4& a) { return a + jet_const(s); }
Jet4 operator-(const Jet4& a, double s) { return a - jet_const(s); }
Jet4 operator-(double s, const Jet4& a) { return jet_const(s) - a; }
Jet4 operator*(const Jet4& a, double s) {
  Jet4 r;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; i + j <= 4; ++j) r.c[i][j] = a.c[i][j] * s;
  return r;
}
Jet4 operator*(double s, const Jet4& a) { return a * s; }
Jet4 operator/(const Jet4& a, double s) { return a * (1.0 / s); }
Jet4 operator/(double s, const Jet4& a) { return jet_const(s) / a; }

Jet2 operator+(const Jet2& a, const Jet2& b) {
  Jet2 r;
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; i + j <= 2; ++j) r.c[i][j] = a.c[i][j] + b.c[i][j];
  return r;
}

Jet2 operator-(const Jet2& a, const Jet2& b) {
  Jet2 r;
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; i + j <= 2; ++j) r.c[i][j] = a.c[i][j] - b.c[i][j];
  return r;
}

Jet2 operator-(const Jet2& a) {
  Jet2 r;
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; i + j <= 2; ++j) r.c[i][j] = -a.c[i][j];
  return r;
}

Jet2 operator*(const Jet2& a, const Jet2& b) {
  Jet2 r;
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; i + j <= 2; ++j) {
      double s = 0.0;
      for (int p = 0; p <= i; ++p)
        for (int q = 0; q <= j; ++q) s += a.c[p][q] * b.c[i - p][j - q];
      r.c[i][j] = s;
    }
  return r;
}

Jet2 operator*(const Jet2& a, double s) {
  Jet2 r;
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; i + j <= 2; ++j) r.c[i][j] = a.c[i][j] * s;
  return r;
}
Jet2 operator*(double s, const Jet2& a) { return a * s; }

namespace {

// Compose the univariate series sum_m k[m] u^m (u = nilpotent part of a)
// by Horner with jet multiplications.
Jet4 univariate(const Jet4& a, const double k[5]) {
  Jet4 u = a;
  u.c[0][0] = 0.0;
  Jet4 r = jet_const(k[4]);
  for (int m = 3; m >= 0; --m) r = r * u + jet_const(k[m]);
  return r;
}

}  // namespace

Jet4 pow(const Jet4& a, double r) {
  const double a0 = a.c[0][0];
  if (a0 <= 0.0 && !(nearly_integer(r) && a0 != 0.0))
    throw DomainError("argument of pow must be > 0");
  // k[m] = binom(r, m) a0^{r-m}
  double k[5];
  k[0] = std::pow(a0, r);
  double binom = 1.0;
  for (int m = 1; m <= 4; ++m) {
    binom *= (r - (m - 1)) / m;
    k[m] = binom * std::pow(a0, r - m);
  }
  return univariate(a, k);
}

Jet4 ln(const Jet4& a) {
  const double a0 = a.c[0][0];
  if (a0 <= 0.0) throw DomainError("argument of ln must be > 0");
  double k[5];
  k[0] = std::log(a0);
  double p = 1.0;  // a0^{-m} accumulator with alternating sign
  for (int m = 1; m <= 4; ++m) {
    p /= a0;
    k[m] = ((m % 2) ? 1.0 : -1.0) * p / m;
  }
  return univariate(a, k);
}

Jet4 sqrt(const Jet4& a) {
  const double a0 = a.c[0][0];
  if (a0 <= 0.0) throw DomainError("argument of sqrt must be > 0");
  double k[5];
  k[0] = std::sqrt(a0);
  double binom = 1.0;
  for (int m = 1; m <= 4; ++m) {
    binom *= (0.5 - (m - 1)) / m;
    k[m] = binom * k[0] / std::pow(a0, m);
  }
  return univariate(a, k);
}

Jet4 exp(const Jet4& a) {
  const double e0 = std::exp(a.c[0][0]);
  double k[5];
  double f = 1.0;
  for (int m = 0; m <= 4; ++m) {
    if (m > 0) f *= m;
    k[m] = e0 / f;
  }
  return univariate(a, k);
}

Jet2 shift_to_derivative_jet(const Jet4& a, int i, int j) {
  if (i < 0 || j < 0 || i + j > 2)
    throw IndexError("shift_to_derivative_jet: i+j must be <= 2");
  static const double fact[5] = {1, 1, 2, 6, 24};
  Jet2 r;
  // d[p][q] = (1/(p! q!)) d^{p+q}(d^{i+j}f) = c[p+i][q+j] * (p+i)!(q+j)! / (p! q!)
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; p + q <= 2; ++q)
      r.c[p][q] = a.c[p + i][q + j] * (fact[p + i] / fact[p]) * (fact[q + j] / fact[q]);
  return r;
}

Jet2 truncate2(const Jet4& a) { return shift_to_derivative_jet(a, 0, 0); }

Jet4 compose(const Jet4& A, const Jet4& X, const Jet4& Y) {
  Jet4 xp[5], yp[5];
  xp[0] = jet_const(1.0);
  yp[0] = jet_const(1.0);
  for (int m = 1; m <= 4; ++m) {
    xp[m] = xp[m - 1] * X;
    yp[m] = yp[m - 1] * Y;
  }
  Jet4 r;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; i + j <= 4; ++j) {
      if (A.c[i][j] == 0.0) continue;
      r = r + xp[i] * yp[j] * A.c[i][j];
    }
  return r;
}

Jet4 transpose(const Jet4& a) {
  Jet4 r;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; i + j <= 4; ++j) r.c[i][j] = a.c[j][i];
  return r;
}

Jet4 invert_first(const Jet4& A) {
  const double a10 = A.c[1][0];
  if (std::abs(a10) < 1e-12)
    throw DegenerateJacobianError("series reversion: first-variable derivative below 1e-12");
  // Solve a10*x + G(x,y) = du for x(du, y) by fixed point; G collects every
  // term of A except the constant and the linear a10*x term.  Each iteration
  // gains one Taylor order, so five suffice for order 4.
  Jet4 G = A;
  G.c[0][0] = 0.0;
  G.c[1][0] = 0.0;
  const Jet4 du = jet_var(1, 0.0);
  const Jet4 y = jet_var(2, 0.0);
  Jet4 X;  // zero
  for (int it = 0; it < 5; ++it) X = (du - compose(G, X, y)) * (1.0 / a10);
  return X;
}

Jet4 invert_second(const Jet4& A) { return transpose(invert_first(transpose(A))); }

}  // namespace gtd
