#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "hdmock/analytic.hpp"
#include "hdmock/error.hpp"
#include "hdmock/gamma.hpp"
#include "hdmock/modular_forms.hpp"
#include "oracles.hpp"

using namespace hdmock;

namespace {

constexpr double kPi = std::numbers::pi;

// g(i s) for real s > 0, summed directly in double.
double on_imaginary_axis(const QSeries& g, double s) {
  double v = 0;
  for (int n = g.valuation(); n < g.prec(); ++n) v += g.coeff(n).get_d() * std::exp(-2 * kPi * n * s);
  return v;
}

}  // namespace

TEST_CASE("evaluation") {
  const QSeries one = QSeries::constant(1, 10);
  CHECK(std::abs(eval_series(one, HPoint(0.3, 1.7)).value - Complex(1, 0)) < 1e-15);

  const Evaluation d = eval_series(delta(40), HPoint(0, 1));
  CHECK(d.value.real() == doctest::Approx(oracle::delta_at_i()).epsilon(1e-12));
  CHECK(std::abs(d.value.imag()) < 1e-15);
  CHECK(d.error_bound < 1e-12);

  const Evaluation j = eval_series(j_invariant(60), HPoint(0, 1));
  CHECK(std::abs(j.value - Complex(1728, 0)) < 1e-8);
  CHECK(std::abs(eval_series(eisenstein(6, 40), HPoint(0, 1)).value) < 1e-12);

  CHECK_THROWS_WITH_AS(eval_series(delta(5), HPoint(0, 0.1)), doctest::Contains("insufficient precision for this tau"), Error);
}

TEST_CASE("modularity residuals") {
  CHECK(modular_residual(eisenstein(4, 40), 4, GammaMatrix::S(), HPoint(0, 2)).value < 1e-8);
  CHECK(modular_residual(j_invariant(80), 0, GammaMatrix::S(), HPoint(1, 1)).value < 1e-6);
  const double e2_defect = modular_residual(eisenstein(2, 60), 2, GammaMatrix::S(), HPoint(0, 1)).value;
  CHECK(e2_defect == doctest::Approx(6 / kPi).epsilon(1e-10));

  // Every basis element of small weight spaces transforms correctly.
  for (int k = 4; k <= 16; k += 2) {
    const FormSpace sp = basis_space(k, 0, 80);
    for (const auto& f : sp.basis) {
      CHECK(modular_residual(f, k, GammaMatrix::S(), HPoint(0.2, 1.1)).value < 1e-8);
      CHECK(modular_residual(f, k, GammaMatrix::parse("STS"), HPoint(-0.3, 0.9)).value < 1e-8);
    }
  }
}

TEST_CASE("segment integrals against adaptive quadrature") {
  const QSeries g = delta(60);
  for (int m = 0; m <= 10; ++m) {
    // int_{i/5}^{5i} g(t) t^m dt with t = i s: i^{m+1} int_{1/5}^{5} g(is) s^m ds.
    const double real_integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        [&](double s) { return on_imaginary_axis(g, s) * std::pow(s, m); }, 0.2, 5.0, 15, 1e-14);
    Complex expected = real_integral;
    for (int i = 0; i <= m; ++i) expected *= Complex(0, 1);
    const Complex got = period_segment(g, m, 0.2, 5.0);
    CHECK(std::abs(got - expected) < 1e-7);
  }
}

TEST_CASE("period polynomial of Delta") {
  const PeriodPolynomial r = period_polynomial(delta(60), 10);
  CHECK(r.degree == 10);
  CHECK(r.coeffs.size() == 11);
  CHECK(r.s_residual < 1e-8);
  CHECK(r.u_residual < 1e-8);

  // Classical shape of the period polynomial of Delta: the even part is
  // proportional to (36/691)(X^10 - 1) - X^2 (X^2 - 1)^3 and the odd part to
  // 4X^9 - 25X^7 + 42X^5 - 25X^3 + 4X.
  const double even[11] = {-36.0 / 691, 0, 1, 0, -3, 0, 3, 0, -1, 0, 36.0 / 691};
  const double odd[11] = {0, 4, 0, -25, 0, 42, 0, -25, 0, 4, 0};
  const Complex even_scale = r.coeffs[2] / even[2];
  const Complex odd_scale = r.coeffs[1] / odd[1];
  for (int j = 0; j <= 10; ++j) {
    const Complex expected = (j % 2 == 0 ? even_scale * even[j] : odd_scale * odd[j]);
    CHECK(std::abs(r.coeffs[static_cast<std::size_t>(j)] - expected) < 1e-10);
  }

  const PeriodPolynomial zero = period_polynomial(QSeries(30), 10);
  for (const auto& c : zero.coeffs) CHECK(c == Complex(0, 0));

  CHECK_THROWS_AS(period_polynomial(eisenstein(12, 30), 10), Error);
}

TEST_CASE("period polynomial is linear in the form") {
  const QSeries d = delta(80), e4 = eisenstein(4, 80);
  const QSeries a = d * e4 * e4 * e4, b = d * d;
  const QRational c(3, 7);
  const PeriodPolynomial ra = period_polynomial(a, 22), rb = period_polynomial(b, 22);
  const PeriodPolynomial rs = period_polynomial(a + c * b, 22);
  for (std::size_t j = 0; j < rs.coeffs.size(); ++j) {
    const Complex expected = ra.coeffs[j] + c.get_d() * rb.coeffs[j];
    CHECK(std::abs(rs.coeffs[j] - expected) < 1e-10 * (1 + std::abs(expected)));
  }
  for (const PeriodPolynomial* p : {&ra, &rb, &rs}) {
    double scale = 1;
    for (const auto& z : p->coeffs) scale = std::max(scale, std::abs(z));
    CHECK(p->s_residual < 1e-9 * scale);
    CHECK(p->u_residual < 1e-9 * scale);
  }
}

TEST_CASE("Eichler integral") {
  const QSeries g = delta(80);
  for (const HPoint tau : {HPoint(0, 1), HPoint(0.5, 1), HPoint(0, 2)}) {
    CHECK(dbar_residual(g, 10, tau, 1e-4).value < 1e-5);
  }
  // Second order convergence.
  const HPoint tau(0.5, 1);
  const double e1 = dbar_residual(g, 10, tau, 1e-2).value;
  const double e2 = dbar_residual(g, 10, tau, 5e-3).value;
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.05));

  // Decay along the imaginary axis.
  const double a2 = std::abs(eichler_star(g, 10, HPoint(0, 2)).value);
  const double a4 = std::abs(eichler_star(g, 10, HPoint(0, 4)).value);
  const double a8 = std::abs(eichler_star(g, 10, HPoint(0, 8)).value);
  CHECK(a2 > a4);
  CHECK(a4 > a8);
  CHECK(a8 < 1e-12);
}

TEST_CASE("cocycle fit") {
  const QSeries g = delta(80);
  const PolynomialFit fit = star_cocycle_fit(g, 10, GammaMatrix::S());
  CHECK(fit.residual < 1e-6);
  CHECK(fit.coeffs.size() == 11);
  // The fitted polynomial is -(2i)^{-10} r(-tau).
  const PeriodPolynomial r = period_polynomial(g, 10);
  Complex scale = -std::pow(Complex(0, 2), -10);
  for (int j = 0; j <= 10; ++j) {
    const Complex expected = scale * r.coeffs[static_cast<std::size_t>(j)] * (j % 2 ? -1.0 : 1.0);
    CHECK(std::abs(fit.coeffs[static_cast<std::size_t>(j)] - expected) < 1e-9);
  }
  // Negative control: with the wrong weight the difference is no longer a
  // polynomial and the misfit grows by many orders of magnitude.
  const PolynomialFit wrong = star_cocycle_fit(g, 8, GammaMatrix::S());
  CHECK(wrong.residual > 1e6 * std::max(fit.residual, 1e-18));
}

TEST_CASE("E2 completion") {
  CHECK(e2_completion_residual(GammaMatrix::T(), HPoint(0.3, 0.8)).value < 1e-12);
  CHECK(e2_completion_residual(GammaMatrix::S(), HPoint(0, 1)).value < 1e-8);
  CHECK(e2_completion_residual(GammaMatrix::S(), HPoint(0.5, 2)).value < 1e-8);
  CHECK(e2_completion_residual(GammaMatrix::parse("STS"), HPoint(0.1, 0.9)).value < 1e-8);
}

TEST_CASE("period cocycle in cohomology coordinates") {
  const PeriodPolynomial r = period_polynomial(delta(60), 10);
  const H1Presentation h = h1_presentation(10);
  std::vector<Complex> flat;
  for (const auto& c : r.cocycle_s()) flat.push_back(c);
  for (const auto& c : r.cocycle_u()) flat.push_back(c);
  const auto coords = project_to_h1(h, flat);
  REQUIRE(coords.size() == 3);
  std::vector<double> re, im;
  for (const auto& c : coords) {
    re.push_back(c.real());
    im.push_back(c.imag());
  }
  const auto sv = singular_values({re, im});
  REQUIRE(sv.size() == 2);
  CHECK(sv[1] > 1e-6);

  // A coboundary projects to zero.
  const Cocycle z = coboundary(RepElement(10, QVector{1, 2, 0, 0, 0, -1, 0, 0, 3, 0, 1}));
  std::vector<Complex> cb;
  for (const auto& x : flatten(z)) cb.emplace_back(x.get_d(), 0);
  for (const auto& c : project_to_h1(h, cb)) CHECK(std::abs(c) < 1e-10);
}
