#include <doctest.h>

#include <random>
#include <string>

#include "hdmock/error.hpp"
#include "hdmock/gamma.hpp"
#include "hdmock/linalg.hpp"
#include "oracles.hpp"

using namespace hdmock;

namespace {

GammaMatrix word(const std::string& w) {
  GammaMatrix g;
  for (char c : w) g = g * (c == 'S' ? GammaMatrix::S() : GammaMatrix::T());
  return g;
}

// Evaluates P(x, y) directly from its coefficients.
QRational evaluate(const RepElement& p, const QRational& x, const QRational& y) {
  QRational s = 0;
  for (int j = 0; j <= p.degree; ++j) {
    QRational term = p.coeffs[static_cast<std::size_t>(j)];
    for (int i = 0; i < j; ++i) term *= x;
    for (int i = j; i < p.degree; ++i) term *= y;
    s += term;
  }
  return s;
}

RepElement random_rep(std::mt19937& rng, int k) {
  std::uniform_int_distribution<int> c(-5, 5);
  QVector v(static_cast<std::size_t>(k + 1));
  for (auto& x : v) x = c(rng);
  return RepElement(k, v);
}

}  // namespace

TEST_CASE("matrices") {
  CHECK_THROWS_AS(GammaMatrix(1, 1, 1, 1), Error);
  CHECK(GammaMatrix::parse("S") == GammaMatrix::S());
  CHECK(GammaMatrix::parse("STS") == word("STS"));
  CHECK(GammaMatrix::parse("2,1,1,1") == GammaMatrix(2, 1, 1, 1));
  CHECK_THROWS_AS(GammaMatrix::parse("Q"), Error);
  CHECK(GammaMatrix::S() * GammaMatrix::S() == GammaMatrix(-1, 0, 0, -1));
  const GammaMatrix u = GammaMatrix::U();
  CHECK(u * u * u == GammaMatrix(-1, 0, 0, -1));
}

TEST_CASE("slash action on small polynomials") {
  // X | S = -Y.
  const RepElement xs = slash_rep(RepElement::basis(1, 1), GammaMatrix::S());
  CHECK(xs.coeffs == QVector{-1, 0});
  // X^2 | T = (X + Y)^2.
  const RepElement x2t = slash_rep(RepElement::basis(2, 2), GammaMatrix::T());
  CHECK(x2t.coeffs == QVector{1, 2, 1});
}

TEST_CASE("slash is substitution (P|g)(X, Y) = P(aX + bY, cX + dY)") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pt(-4, 4);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = trial % 7;
    const RepElement p = random_rep(rng, k);
    const GammaMatrix g = word(trial % 2 ? "STTS" : "TTST");
    const RepElement pg = slash_rep(p, g);
    const QRational x = pt(rng), y = pt(rng);
    CHECK(evaluate(pg, x, y) == evaluate(p, g.a() * x + g.b() * y, g.c() * x + g.d() * y));
  }
}

TEST_CASE("right action law on words of length <= 6") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> len(0, 6), bit(0, 1);
  auto random_word = [&] {
    std::string w;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) w += bit(rng) ? 'S' : 'T';
    return w;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const int k = trial % 9;
    const RepElement p = random_rep(rng, k);
    const GammaMatrix g = word(random_word()), h = word(random_word());
    CHECK(slash_rep(slash_rep(p, g), h) == slash_rep(p, g * h));
    CHECK(slash_matrix(k, g * h) == slash_matrix(k, h) * slash_matrix(k, g));
  }
}

TEST_CASE("coboundaries satisfy the relators") {
  std::mt19937 rng(5);
  // -I acts by (-1)^k, so the PSL2 relators only hold for even k.
  for (int k = 0; k <= 12; k += 2) {
    const Cocycle z = coboundary(random_rep(rng, k));
    CHECK(z.satisfies_relations());
  }
  // A random pair almost never does.
  std::mt19937 rng2(6);
  Cocycle bad{4, random_rep(rng2, 4), random_rep(rng2, 4)};
  bad.ps.coeffs[0] += 1;
  CHECK_FALSE(bad.satisfies_relations());
}

TEST_CASE("invariants") {
  CHECK(h0_dim(0) == 1);
  CHECK(h0_dim(2) == 0);
  CHECK(h0_dim(12) == 0);
  for (int k = 1; k <= 20; ++k) CHECK(h0_dim(k) == 0);
}

TEST_CASE("first cohomology") {
  CHECK(h1_dim(10) == 3);
  CHECK(h1_dim(2) == 1);
  CHECK(h1_dim(3) == 0);
  CHECK(h1_dim(0) == 0);
  for (int k = 2; k <= 24; k += 2) {
    const int expected = oracle::count_monomials(k + 2) + oracle::cusp_count(k + 2);
    CHECK(h1_dim(k) == expected);
    const H1Presentation h = h1_presentation(k);
    CHECK(h.dim() == static_cast<std::size_t>(expected));
    CHECK(h.coboundaries.size() + h.representatives.size() == h.cocycles.size());
    // B^1 has dimension k + 1 since H^0 vanishes.
    CHECK(h.coboundaries.size() == static_cast<std::size_t>(k + 1));
    for (const auto& v : h.cocycles) {
      const std::size_t n = static_cast<std::size_t>(k + 1);
      const Cocycle z{k, RepElement(k, QVector(v.begin(), v.begin() + static_cast<long>(n))),
                      RepElement(k, QVector(v.begin() + static_cast<long>(n), v.end()))};
      CHECK(z.satisfies_relations());
      CHECK(flatten(z) == v);
    }
  }
}

TEST_CASE("invariants of quotients") {
  CHECK(quotient_invariants_dim({2, 4}, {2}) == 0);
  CHECK(quotient_invariants_dim({10}, {}) == 0);
  CHECK(quotient_invariants_dim({2}, {2}) == 0);
  CHECK(quotient_invariants_dim({0, 2}, {2}) == 1);
  CHECK(quotient_invariants_dim({0, 0, 4}, {}) == 2);
  CHECK_THROWS_AS(quotient_invariants_dim({2}, {4}), Error);
}
