#include <doctest.h>

#include <random>

#include "hdmock/bol.hpp"
#include "hdmock/error.hpp"
#include "hdmock/modular_forms.hpp"
#include "oracles.hpp"

using namespace hdmock;

TEST_CASE("Bol operator on monomials") {
  const QSeries img = bol_operator(QSeries::monomial(-1, 1, 5), 2);
  CHECK(img.coeff(-1) == -1);
  for (int k = 0; k <= 6; ++k) CHECK(bol_operator(QSeries::constant(1, 8), k).is_zero());
  CHECK(bol_operator(QSeries::monomial(2, 3, 5), 4).coeff(2) == 3 * 32);
}

TEST_CASE("Bol's lemma on the weight -2 polar form") {
  const QSeries f = eisenstein(4, 40) * eisenstein(6, 40) * series_invert(delta(41));
  const Reduction r = reduce_in_space(bol_operator(f, 2), basis_space(4, 1, 35));
  CHECK(r.in_span());
}

TEST_CASE("Bol operator is linear and injective off the constants") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 2 * (trial % 6);
    const QSeries a = oracle::random_series(rng, -3, 2, 8, 6);
    const QSeries b = oracle::random_series(rng, -3, 2, 8, 6);
    const QRational c = QRational(trial - 50) / 7;
    CHECK(agree_within_precision(bol_operator(a + b, k), bol_operator(a, k) + bol_operator(b, k)));
    CHECK(agree_within_precision(bol_operator(c * a, k), c * bol_operator(a, k)));
    // Kernel is the constants: only the q^0 coefficient may vanish.
    const QSeries img = bol_operator(a, k);
    for (int n = a.valuation(); n < a.prec(); ++n) {
      if (n != 0) CHECK((img.coeff(n) == 0) == (a.coeff(n) == 0));
      else CHECK(img.coeff(n) == 0);
    }
  }
}

TEST_CASE("Bol quotient dimensions") {
  CHECK(bol_quotient_dim(10, 1).quotient_dim == 3);
  CHECK(bol_quotient_dim(2, 2).quotient_dim == 1);
  CHECK(bol_quotient_dim(14, 1).quotient_dim == 3);
  for (int k = 2; k <= 20; k += 2) {
    for (int p = 1; p <= 3; ++p) {
      const BolQuotientReport r = bol_quotient_dim(k, p);
      CHECK(r.dim_source == oracle::count_monomials(12 * p - k));
      CHECK(r.dim_target == oracle::count_monomials(12 * p + k + 2));
      CHECK(r.quotient_dim == r.dim_target - r.dim_image);
      CHECK(r.quotient_dim >= 0);
      // Bol's operator kills only constants, which weight -k < 0 spaces do not hold.
      CHECK(r.dim_image == r.dim_source);
    }
  }
  CHECK_THROWS_AS(bol_quotient_dim(3, 1), Error);
  CHECK_THROWS_AS(bol_quotient_dim(4, 0), Error);
}

TEST_CASE("Bol equivariance residuals") {
  const FormSpace sp = basis_space(-2, 1, 60);
  const QSeries& f = sp.basis[0];
  CHECK(bol_equivariance_residual(f, 2, GammaMatrix::T(), HPoint(0, 1), 60).value < 1e-9);
  CHECK(bol_equivariance_residual(f, 2, GammaMatrix::S(), HPoint(0, 2), 60).value < 1e-8);
  CHECK(bol_equivariance_residual(QSeries::constant(1, 60), 0, GammaMatrix::S(), HPoint(0, 2), 60).value == 0.0);
  CHECK_THROWS_AS(HPoint(0, -1), Error);
}
