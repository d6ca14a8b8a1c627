#include "hdmock/analytic.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <string>

#include "hdmock/error.hpp"
#include "hdmock/modular_forms.hpp"

namespace hdmock {

namespace {

using LComplex = std::complex<long double>;
constexpr long double kTwoPi = 2.0L * std::numbers::pi_v<long double>;

void check_guard(const QSeries& f, double y) {
  if (kTwoPi * y * f.prec() < kEvaluationGuard) {
    throw Error("insufficient precision for this tau: 2*pi*y*prec = " +
                std::to_string(static_cast<double>(kTwoPi * y * f.prec())) + " < 40");
  }
}

// Tail estimate: the largest of the last few known |c_n|, continued geometrically.
double tail_estimate(const QSeries& f, long double y, long double scale_at_prec) {
  long double a = 0;
  for (int n = std::max(f.valuation(), f.prec() - 5); n < f.prec(); ++n) {
    a = std::max(a, std::fabs(to_long_double(f.coeff(n))));
  }
  const long double ratio = std::exp(-kTwoPi * y);
  return static_cast<double>(a * scale_at_prec / (1.0L - ratio));
}

// sum_{s<=m} x^s / s!
long double partial_exp_sum(int m, long double x) {
  long double term = 1.0L, sum = 1.0L;
  for (int s = 1; s <= m; ++s) {
    term *= x / s;
    sum += term;
  }
  return sum;
}

// Gamma(m+1, x) / m! for integer m.
long double regularized_upper_gamma(int m, long double x) {
  return std::exp(-x) * partial_exp_sum(m, x);
}

Complex ipow(Complex z, int k) {
  Complex r = 1.0;
  for (int i = 0; i < std::abs(k); ++i) r *= z;
  return k < 0 ? 1.0 / r : r;
}

LComplex i_power(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

long double factorial(int m) {
  long double f = 1.0L;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

long double binomial(int n, int r) {
  long double b = 1.0L;
  for (int i = 1; i <= r; ++i) b = b * (n - r + i) / i;
  return b;
}

void require_cusp_form(const QSeries& g) {
  const auto lead = g.leading_exponent();
  if (lead && *lead < 1) throw Error("input is not a cusp form: nonzero coefficient at q^" +
                                     std::to_string(*lead));
}

}  // namespace

HPoint::HPoint(double x, double y) : x_(x), y_(y) {
  if (!(y > 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
    throw Error("tau must lie in the upper half plane (y > 0)");
  }
}

Evaluation eval_series(const QSeries& f, const HPoint& tau) {
  check_guard(f, tau.y());
  const long double x = tau.x(), y = tau.y();
  LComplex acc = 0;
  long double abs_sum = 0;
  for (int n = f.valuation(); n < f.prec(); ++n) {
    const QRational& c = f.coeff(n);
    if (c == 0) continue;
    const long double mag = std::exp(-kTwoPi * n * y);
    const long double phase = kTwoPi * n * x;
    const long double cv = to_long_double(c);
    acc += cv * mag * LComplex(std::cos(phase), std::sin(phase));
    abs_sum += std::fabs(cv) * mag;
  }
  const Complex value(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
  const double bound = tail_estimate(f, y, std::exp(-kTwoPi * f.prec() * y)) +
                       static_cast<double>(abs_sum * 64 * LDBL_EPSILON) +
                       std::abs(value) * DBL_EPSILON;
  return {value, bound};
}

Residual modular_residual(const QSeries& f, int k, const GammaMatrix& g, const HPoint& tau) {
  const HPoint image(g.act(tau.tau()));
  const Evaluation lhs = eval_series(f, image);
  const Evaluation rhs = eval_series(f, tau);
  const Complex factor = ipow(g.automorphy(tau.tau()), k);
  return {std::abs(lhs.value - factor * rhs.value),
          lhs.error_bound + std::abs(factor) * rhs.error_bound};
}

Complex period_segment(const QSeries& g, int m, double t0, double t1) {
  require_cusp_form(g);
  if (m < 0) throw Error("moment order must be nonnegative");
  if (!(t0 > 0.0) || (t1 >= 0.0 && t1 < t0)) throw Error("invalid integration segment");
  LComplex sum = 0;
  const long double mfact = factorial(m);
  for (int n = std::max(1, g.valuation()); n < g.prec(); ++n) {
    const QRational& a = g.coeff(n);
    if (a == 0) continue;
    const long double c = kTwoPi * n;
    long double piece = regularized_upper_gamma(m, c * t0);
    if (t1 >= 0.0) piece -= regularized_upper_gamma(m, c * t1);
    sum += to_long_double(a) * mfact * piece / std::pow(c, static_cast<long double>(m + 1));
  }
  // dt = i ds and t^m = i^m s^m along the imaginary axis.
  const LComplex r = i_power(m + 1) * sum;
  return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

std::vector<Complex> PeriodPolynomial::cocycle_u() const {
  return slash_coefficients<Complex>(coeffs, GammaMatrix::T());
}

PeriodPolynomial period_polynomial(const QSeries& g_in, int k, const PeriodOptions& opts) {
  if (k < 0 || k % 2 != 0) throw Error("period polynomials need even k >= 0");
  require_cusp_form(g_in);
  const QSeries g = opts.terms > 0 ? g_in.truncated(opts.terms) : g_in;
  PeriodPolynomial out;
  out.degree = k;
  out.coeffs.assign(static_cast<std::size_t>(k + 1), Complex(0));
  if (g.is_zero()) return out;

  // Upper half moments I_m = int_i^{i oo} g(t) t^m dt.
  std::vector<Complex> upper(static_cast<std::size_t>(k + 1));
  for (int m = 0; m <= k; ++m) upper[static_cast<std::size_t>(m)] = period_segment(g, m, 1.0, -1.0);
  // Lower half via t = -1/w: int_0^i g(t) t^m dt = (-1)^{m+1} I_{k-m}.
  std::vector<Complex> moment(static_cast<std::size_t>(k + 1));
  for (int m = 0; m <= k; ++m) {
    const double sign = (m % 2 == 0) ? -1.0 : 1.0;
    moment[static_cast<std::size_t>(m)] =
        upper[static_cast<std::size_t>(m)] + sign * upper[static_cast<std::size_t>(k - m)];
  }
  for (int j = 0; j <= k; ++j) {
    const double sign = ((k - j) % 2 == 0) ? 1.0 : -1.0;
    out.coeffs[static_cast<std::size_t>(j)] = static_cast<double>(binomial(k, j)) * sign *
                                              moment[static_cast<std::size_t>(k - j)];
  }

  // Truncation: the first omitted term of every moment, continued geometrically.
  long double a = 0;
  for (int n = std::max(1, g.prec() - 5); n < g.prec(); ++n) {
    a = std::max(a, std::fabs(to_long_double(g.coeff(n))));
  }
  long double worst = 0;
  const long double c = kTwoPi * g.prec();
  for (int m = 0; m <= k; ++m) {
    const long double t = a * factorial(m) * regularized_upper_gamma(m, c) /
                          std::pow(c, static_cast<long double>(m + 1));
    worst = std::max(worst, 2 * binomial(k, k / 2) * t / (1.0L - std::exp(-kTwoPi)));
  }
  out.tolerance = static_cast<double>(worst);

  // Relator residuals in extended precision so the slash expansions (binomial
  // coefficients up to 2^k) do not swamp the rounding of the coefficients.
  using WideComplex = std::complex<long double>;
  auto widen = [](const std::vector<Complex>& v) {
    return std::vector<WideComplex>(v.begin(), v.end());
  };
  auto max_norm = [](const std::vector<WideComplex>& v) {
    long double n = 0;
    for (const auto& z : v) n = std::max(n, std::abs(z));
    return static_cast<double>(n);
  };
  const auto r = widen(out.coeffs);
  std::vector<WideComplex> rel_s = r;
  const auto rs = slash_coefficients<WideComplex>(r, GammaMatrix::S());
  for (std::size_t i = 0; i < rel_s.size(); ++i) rel_s[i] += rs[i];
  out.s_residual = max_norm(rel_s);

  const auto pu = slash_coefficients<WideComplex>(r, GammaMatrix::T());
  std::vector<WideComplex> rel_u = pu;
  const auto u1 = slash_coefficients<WideComplex>(pu, GammaMatrix::U());
  const auto u2 = slash_coefficients<WideComplex>(pu, GammaMatrix::U() * GammaMatrix::U());
  for (std::size_t i = 0; i < rel_u.size(); ++i) rel_u[i] += u1[i] + u2[i];
  out.u_residual = max_norm(rel_u);
  return out;
}

Evaluation eichler_star(const QSeries& g, int k, const HPoint& tau) {
  if (k < 0) throw Error("k must be nonnegative");
  require_cusp_form(g);
  check_guard(g, tau.y());
  const long double x = tau.x(), y = tau.y();
  const long double kfact = factorial(k);
  LComplex acc = 0;
  long double last = 0;
  for (int n = std::max(1, g.valuation()); n < g.prec(); ++n) {
    const QRational& a = g.coeff(n);
    if (a == 0) continue;
    const long double c = kTwoPi * n;
    // e^{2 pi n y} Gamma(k+1, 4 pi n y) = k! e^{-2 pi n y} sum_s (4 pi n y)^s / s!
    const long double mag = kfact * std::exp(-c * y) * partial_exp_sum(k, 2 * c * y) /
                            std::pow(c, static_cast<long double>(k + 1));
    const long double phase = -c * x;
    const long double term = to_long_double(a) * mag;
    acc += term * LComplex(std::cos(phase), std::sin(phase));
    if (n >= g.prec() - 5) last = std::max(last, std::fabs(term));
  }
  // (2i)^{-k} i^{k+1} = i 2^{-k}
  acc *= LComplex(0, std::ldexp(1.0L, -k));
  const Complex value(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
  const long double ratio = std::exp(-kTwoPi * y);
  const double bound = static_cast<double>(std::ldexp(last, -k) * ratio / (1 - ratio)) +
                       std::abs(value) * 4 * DBL_EPSILON;
  return {value, bound};
}

Complex eichler_star_dbar(const QSeries& g, int k, const HPoint& tau, double step) {
  if (!(step > 0.0) || step >= tau.y()) throw Error("finite-difference step must be in (0, y)");
  auto at = [&](double dx, double dy) {
    return eichler_star(g, k, HPoint(tau.x() + dx, tau.y() + dy)).value;
  };
  const Complex fx = (at(step, 0) - at(-step, 0)) / (2 * step);
  const Complex fy = (at(0, step) - at(0, -step)) / (2 * step);
  return 0.5 * (fx + Complex(0, 1) * fy);
}

Residual dbar_residual(const QSeries& g, int k, const HPoint& tau, double step) {
  const Complex fd = eichler_star_dbar(g, k, tau, step);
  const Evaluation gv = eval_series(g, tau);
  const double yk = std::pow(tau.y(), k);
  return {std::abs(fd - yk * std::conj(gv.value)), yk * gv.error_bound};
}

PolynomialFit star_cocycle_fit(const QSeries& g, int k, const GammaMatrix& gamma) {
  const int points = k + 2;
  // Samples on the arc |tau| = 1, pi/6 <= arg tau <= 5 pi/6, where both tau and
  // S tau keep y >= 1/2.
  Eigen::MatrixXcd v(points, k + 1);
  Eigen::VectorXcd rhs(points);
  for (int p = 0; p < points; ++p) {
    const double theta = std::numbers::pi * (1.0 / 6 + (2.0 / 3) * p / (points - 1));
    const Complex tau = std::polar(1.0, theta);
    const HPoint pt(tau);
    const Complex image = eichler_star(g, k, HPoint(gamma.act(tau))).value;
    rhs(p) = ipow(gamma.automorphy(tau), k) * image - eichler_star(g, k, pt).value;
    Complex pw = 1.0;
    for (int j = 0; j <= k; ++j) {
      v(p, j) = pw;
      pw *= tau;
    }
  }
  const Eigen::VectorXcd c = v.completeOrthogonalDecomposition().solve(rhs);
  PolynomialFit fit;
  fit.coeffs.assign(c.data(), c.data() + c.size());
  fit.residual = (v * c - rhs).cwiseAbs().maxCoeff();
  return fit;
}

std::vector<Complex> project_to_h1(const H1Presentation& h1, const std::vector<Complex>& cocycle) {
  const auto rows = static_cast<Eigen::Index>(2 * (h1.degree + 1));
  if (static_cast<Eigen::Index>(cocycle.size()) != rows) {
    throw Error("cocycle length does not match the H^1 presentation");
  }
  const auto nb = static_cast<Eigen::Index>(h1.coboundaries.size());
  const auto nh = static_cast<Eigen::Index>(h1.representatives.size());
  Eigen::MatrixXcd a(rows, nb + nh);
  for (Eigen::Index j = 0; j < nb; ++j)
    for (Eigen::Index i = 0; i < rows; ++i)
      a(i, j) = static_cast<double>(to_long_double(h1.coboundaries[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]));
  for (Eigen::Index j = 0; j < nh; ++j)
    for (Eigen::Index i = 0; i < rows; ++i)
      a(i, nb + j) = static_cast<double>(to_long_double(h1.representatives[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]));
  Eigen::VectorXcd z(rows);
  for (Eigen::Index i = 0; i < rows; ++i) z(i) = cocycle[static_cast<std::size_t>(i)];
  const Eigen::VectorXcd x = a.completeOrthogonalDecomposition().solve(z);
  return std::vector<Complex>(x.data() + nb, x.data() + nb + nh);
}

std::vector<double> singular_values(const std::vector<std::vector<double>>& columns) {
  if (columns.empty()) return {};
  const auto rows = static_cast<Eigen::Index>(columns.front().size());
  Eigen::MatrixXd m(rows, static_cast<Eigen::Index>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (static_cast<Eigen::Index>(columns[j].size()) != rows) throw Error("ragged columns");
    for (Eigen::Index i = 0; i < rows; ++i) m(i, static_cast<Eigen::Index>(j)) = columns[j][static_cast<std::size_t>(i)];
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  return std::vector<double>(s.data(), s.data() + s.size());
}

Residual e2_completion_residual(const GammaMatrix& g, const HPoint& tau) {
  const HPoint image(g.act(tau.tau()));
  const double ymin = std::min(tau.y(), image.y());
  const int prec = static_cast<int>(std::ceil(60.0 / (2 * std::numbers::pi * ymin))) + 10;
  const QSeries e2 = eisenstein(2, prec);
  const Evaluation at_image = eval_series(e2, image);
  const Evaluation at_tau = eval_series(e2, tau);
  const Complex hat_image = at_image.value - 3.0 / (std::numbers::pi * image.y());
  const Complex hat_tau = at_tau.value - 3.0 / (std::numbers::pi * tau.y());
  const Complex factor = ipow(g.automorphy(tau.tau()), 2);
  return {std::abs(hat_image - factor * hat_tau),
          at_image.error_bound + std::abs(factor) * at_tau.error_bound};
}

}  // namespace hdmock
