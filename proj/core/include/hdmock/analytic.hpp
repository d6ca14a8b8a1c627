#pragma once

#include <complex>
#include <vector>

#include "hdmock/gamma.hpp"
#include "hdmock/qseries.hpp"

namespace hdmock {

using Complex = std::complex<double>;

/// A point of the upper half plane.
class HPoint {
 public:
  /// Throws hdmock::Error unless y > 0.
  HPoint(double x, double y);
  explicit HPoint(Complex tau) : HPoint(tau.real(), tau.imag()) {}

  double x() const { return x_; }
  double y() const { return y_; }
  Complex tau() const { return {x_, y_}; }

 private:
  double x_, y_;
};

/// A numeric value together with an estimate of the truncation error.
struct Evaluation {
  Complex value;
  double error_bound = 0.0;
};

struct Residual {
  double value = 0.0;
  double error_bound = 0.0;
};

/// Minimum of 2 pi y prec accepted by every evaluation.
inline constexpr double kEvaluationGuard = 40.0;

/// sum_n c_n e^{2 pi i n tau} over the known coefficients. Throws
/// hdmock::Error("insufficient precision for this tau") when 2 pi y prec < 40.
Evaluation eval_series(const QSeries& f, const HPoint& tau);

/// |f(g tau) - (c tau + d)^k f(tau)|.
Residual modular_residual(const QSeries& f, int k, const GammaMatrix& g, const HPoint& tau);

/// Period polynomial r(X) = int_0^{i oo} g(t) (X - t)^k dt; coeffs[j] multiplies X^j.
struct PeriodPolynomial {
  int degree = 0;
  std::vector<Complex> coeffs;
  double tolerance = 0.0;     // truncation estimate on the coefficients
  double s_residual = 0.0;    // ||P_S|(1 + S)||
  double u_residual = 0.0;    // ||P_U|(1 + U + U^2)||

  /// The cocycle with z(T) = 0 and z(S) = r; in the (S, U = ST) generator
  /// convention this is (r, r|T).
  std::vector<Complex> cocycle_s() const { return coeffs; }
  std::vector<Complex> cocycle_u() const;
};

struct PeriodOptions {
  /// Number of q-coefficients used; 0 uses all known coefficients.
  int terms = 0;
};

/// Splits the path at i and maps [0, i] onto [i, i oo] with g(-1/t) = t^{k+2} g(t),
/// so every piece is a rapidly convergent incomplete gamma sum.
/// Throws hdmock::Error for non-cuspidal g.
PeriodPolynomial period_polynomial(const QSeries& g, int k, const PeriodOptions& opts = {});

/// int_{i t0}^{i t1} g(t) t^m dt by term-wise integration (t1 < 0 means infinity).
Complex period_segment(const QSeries& g, int m, double t0, double t1);

/// Non-holomorphic Eichler integral
/// g*(tau) = (2i)^{-k} int_{-conj(tau)}^{i oo} conj(g(-conj(z))) (z + tau)^k dz,
/// normalized so that d/d(conj tau) g* = y^k conj(g).
Evaluation eichler_star(const QSeries& g, int k, const HPoint& tau);

/// Central-difference estimate of d/d(conj tau) g* with the given step.
Complex eichler_star_dbar(const QSeries& g, int k, const HPoint& tau, double step);

/// |dbar g*(tau) - y^k conj(g(tau))| from the finite-difference estimate.
Residual dbar_residual(const QSeries& g, int k, const HPoint& tau, double step);

struct PolynomialFit {
  std::vector<Complex> coeffs;  // ascending powers of tau
  double residual = 0.0;        // max abs deviation at the sample points
};

/// Samples (g*|_{-k} gamma - g*)(tau) = (c tau + d)^k g*(gamma tau) - g*(tau) at
/// k + 2 points and fits a polynomial of degree <= k in tau by least squares.
PolynomialFit star_cocycle_fit(const QSeries& g, int k, const GammaMatrix& gamma);

/// Coordinates of a numeric cocycle (flattened as (P_S, P_U)) along the
/// representatives of an exact H^1 presentation, by least squares against
/// [coboundaries | representatives].
std::vector<Complex> project_to_h1(const H1Presentation& h1, const std::vector<Complex>& cocycle);

/// Singular values of the matrix whose columns are the given vectors, descending.
std::vector<double> singular_values(const std::vector<std::vector<double>>& columns);

/// Quasi-modular E2 completed by -3/(pi y): |E2^(g tau) - (c tau + d)^2 E2^(tau)|.
Residual e2_completion_residual(const GammaMatrix& g, const HPoint& tau);

}  // namespace hdmock
