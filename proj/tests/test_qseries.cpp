#include <doctest.h>

#include <random>

#include "hdmock/error.hpp"
#include "hdmock/linalg.hpp"
#include "hdmock/modular_forms.hpp"
#include "hdmock/qseries.hpp"
#include "oracles.hpp"

using namespace hdmock;

namespace {

QSeries poly(int v, std::vector<QRational> c, int prec) {
  c.resize(static_cast<std::size_t>(prec - v));
  return QSeries(v, prec, c);
}

}  // namespace

TEST_CASE("rationals print with an explicit denominator and parse back") {
  CHECK(to_string(QRational(3)) == "3/1");
  CHECK(to_string(QRational(-2, 4)) == "-1/2");
  CHECK(parse_rational("6/-4") == QRational(-3, 2));
  CHECK(parse_rational("17") == 17);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK(static_cast<double>(to_long_double(QRational(1, 3))) == doctest::Approx(1.0 / 3));
}

TEST_CASE("addition") {
  const QSeries a = poly(0, {1, 1}, 5), b = poly(0, {1, -1}, 5);
  const QSeries s = a + b;
  CHECK(s.coeff(0) == 2);
  for (int n = 1; n < 5; ++n) CHECK(s.coeff(n) == 0);

  const QSeries inv_q = QSeries::monomial(-1, 1, 4);
  const QSeries sum = inv_q + QSeries(4);
  CHECK(sum.leading_exponent() == -1);
  CHECK(sum.coeff(-1) == 1);

  // E4 + E6 at q^1.
  CHECK((eisenstein(4, 3) + eisenstein(6, 3)).coeff(1) == -264);

  // Precision of a sum is the smaller one.
  CHECK((poly(0, {1}, 3) + poly(0, {1}, 7)).prec() == 3);
}

TEST_CASE("multiplication") {
  const QSeries p = poly(0, {1, 1}, 6) * poly(0, {1, -1}, 6);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 0);
  CHECK(p.coeff(2) == -1);
  CHECK(p.coeff(3) == 0);

  const QSeries one = QSeries::monomial(-1, 1, 5) * QSeries::monomial(1, 1, 7);
  CHECK(one.leading_exponent() == 0);
  CHECK(one.coeff(0) == 1);

  // E4^2 = E8 through q^10.
  const QSeries e4sq = eisenstein(4, 11) * eisenstein(4, 11);
  const auto e8 = oracle::eisenstein_coeffs(8, 11);
  REQUIRE(e4sq.prec() >= 11);
  for (int n = 0; n <= 10; ++n) CHECK(e4sq.coeff(n) == e8[static_cast<std::size_t>(n)]);
}

TEST_CASE("product precision follows the Laurent rule") {
  // (q^-1 + O(q^3)) * (q^2 + O(q^5)): known through min(3 + 2, 5 - 1) = 4.
  const QSeries a = QSeries::monomial(-1, 1, 3);
  const QSeries b = QSeries::monomial(2, 1, 5);
  CHECK((a * b).prec() == 4);
  CHECK_THROWS_AS((a * b).coeff(4), Error);
}

TEST_CASE("q d/dq") {
  CHECK(series_Dq(QSeries::monomial(3, 1, 6)).coeff(3) == 3);
  CHECK(series_Dq(QSeries::constant(1, 6)).is_zero());
  const QSeries dd = series_Dq(delta(5));
  CHECK(dd.coeff(1) == 1);
  CHECK(dd.coeff(2) == -48);
}

TEST_CASE("inversion") {
  const QSeries g = series_invert(poly(0, {1, -1}, 8));
  for (int n = 0; n < 8; ++n) CHECK(g.coeff(n) == 1);

  const QSeries iq = series_invert(QSeries::monomial(1, 1, 6));
  CHECK(iq.leading_exponent() == -1);
  CHECK(iq.coeff(-1) == 1);

  const QSeries id = series_invert(delta(6));
  CHECK(id.coeff(-1) == 1);
  CHECK(id.coeff(0) == 24);
  CHECK(id.coeff(1) == 324);

  CHECK_THROWS_WITH_AS(series_invert(QSeries(5)), "not invertible at this precision", Error);
}

TEST_CASE("coefficients past the precision are not reported") {
  const QSeries a = poly(0, {1, 2, 3}, 3);
  CHECK_THROWS_AS(a.coeff(3), Error);
  CHECK(a.coeff(-5) == 0);
  CHECK(a.truncated(2).prec() == 2);
  CHECK_THROWS_AS(QSeries(2, 2), Error);
}

TEST_CASE("ring axioms on random Laurent series") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const QSeries a = oracle::random_series(rng, -3, 3, 8, 9);
    const QSeries b = oracle::random_series(rng, -3, 3, 8, 9);
    const QSeries c = oracle::random_series(rng, -3, 3, 8, 9);

    CHECK(agree_within_precision(a + b, b + a));
    CHECK(agree_within_precision(a * b, b * a));
    CHECK(agree_within_precision((a * b) * c, a * (b * c)));
    CHECK(agree_within_precision(a * (b + c), a * b + a * c));
    CHECK(agree_within_precision(series_Dq(a * b), series_Dq(a) * b + a * series_Dq(b)));

    const QSeries ai = series_invert(a);
    const QSeries unit = a * ai;
    CHECK(agree_within_precision(unit, QSeries::constant(1, unit.prec())));

    // Against a sparse schoolbook product on the exponents both sides know.
    oracle::Sparse sa, sb;
    for (int n = a.valuation(); n < a.prec(); ++n) sa[n] = a.coeff(n);
    for (int n = b.valuation(); n < b.prec(); ++n) sb[n] = b.coeff(n);
    const auto ref = oracle::sparse_mul(sa, sb);
    const QSeries ab = a * b;
    const int known = std::min(a.prec() + b.valuation(), b.prec() + a.valuation());
    CHECK(ab.prec() == known);
    for (int n = ab.valuation(); n < ab.prec(); ++n) {
      const auto it = ref.find(n);
      CHECK(ab.coeff(n) == (it == ref.end() ? QRational(0) : it->second));
    }
  }
}

TEST_CASE("series powers") {
  const QSeries d = delta(6);
  CHECK(agree_within_precision(series_pow(d, 2), d * d));
  CHECK(agree_within_precision(series_pow(d, -1), series_invert(d)));
  CHECK(agree_within_precision(series_pow(d, 0), QSeries::constant(1, 6)));
}

TEST_CASE("rank agrees with reduced echelon form on random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dim(1, 7), entry(-3, 3), sparsity(0, 2);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
    QMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = sparsity(rng) == 0 ? QRational(0) : QRational(QRational(entry(rng)) / 2);
    std::vector<std::size_t> pivots;
    const QMatrix e = rref(m, &pivots);
    CHECK(rank(m) == pivots.size());
    const auto ns = nullspace(m);
    CHECK(ns.size() + rank(m) == c);
    for (const auto& v : ns) {
      for (const auto& x : m * v) CHECK(x == 0);
    }
    // Solving for a vector in the column space succeeds and reproduces it.
    QVector x0(c);
    for (auto& x : x0) x = entry(rng);
    const QVector b = m * x0;
    QVector x;
    REQUIRE(solve(m, b, x));
    CHECK(m * x == b);
  }
}

TEST_CASE("inconsistent systems are reported") {
  const QMatrix m = QMatrix::from_rows({{1, 1}, {2, 2}}, 2);
  QVector x;
  CHECK_FALSE(solve(m, {1, 3}, x));
}
