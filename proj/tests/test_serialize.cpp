#include <doctest.h>

#include <random>

#include "hdmock/error.hpp"
#include "hdmock/serialize.hpp"
#include "oracles.hpp"

using namespace hdmock;
using nlohmann::json;

TEST_CASE("series round trip") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const QSeries s = oracle::random_series(rng, -4, 4, 10, 1000);
    const json j = s;
    CHECK(j.at("coeffs").size() == static_cast<std::size_t>(s.prec() - s.valuation()));
    CHECK(json::parse(j.dump()).get<QSeries>() == s);
  }
  const json d = delta(3);
  CHECK(d.dump() == R"({"coeffs":["0/1","1/1","-24/1"],"prec":3,"valuation":0})");
}

TEST_CASE("malformed input is a domain error") {
  CHECK_THROWS_AS(json::parse(R"({"valuation":0,"prec":2,"coeffs":["1/1"]})").get<QSeries>(), Error);
  CHECK_THROWS_AS(json::parse(R"({"valuation":0,"prec":1,"coeffs":["a"]})").get<QSeries>(), Error);
  CHECK_THROWS_AS(json::parse(R"({"degree":2,"coeffs":["1/1"]})").get<RepElement>(), Error);
}

TEST_CASE("structured values round trip") {
  const FormSpace sp = basis_space(0, 1);
  const FormSpace back = json(sp).get<FormSpace>();
  CHECK(back.weight == 0);
  CHECK(back.pole_bound == 1);
  CHECK(back.prec == sp.prec);
  CHECK(back.basis == sp.basis);

  const RepElement p(3, {1, QRational(-1, 2), 0, 7});
  CHECK(json(p).get<RepElement>() == p);

  const BolQuotientReport r = bol_quotient_dim(10, 1);
  const BolQuotientReport rb = json(r).get<BolQuotientReport>();
  CHECK(rb.quotient_dim == 3);
  CHECK(rb.dim_target == r.dim_target);
  json tampered = r;
  tampered["quotient_dim"] = 5;
  CHECK_THROWS_AS(tampered.get<BolQuotientReport>(), Error);

  const PeriodPolynomial pp = period_polynomial(delta(40), 10);
  const PeriodPolynomial ppb = json::parse(json(pp).dump()).get<PeriodPolynomial>();
  CHECK(ppb.coeffs == pp.coeffs);
  CHECK(ppb.u_residual == pp.u_residual);

  const Evaluation e{Complex(0.1, -2.5), 1e-17};
  const Evaluation eb = json::parse(json(e).dump()).get<Evaluation>();
  CHECK(eb.value == e.value);
  CHECK(eb.error_bound == e.error_bound);

  const GrDims t = gr_dims(Variant::weak(2), 10, -4, 6, 2);
  const GrDims tb = json(t).get<GrDims>();
  CHECK(tb.variant == t.variant);
  CHECK(tb.table == t.table);
}

TEST_CASE("graded combinations round trip") {
  const GradedModel model(Variant::holomorphic(), 12);
  GrCombination c;
  c[make_label(10, {{10, 2}}, 0)] = QRational(3, 4);
  c[make_label(16, {{4, 0}, {10, 1}}, 1)] = -2;
  CHECK(combination_from_json(json::parse(combination_to_json(c).dump())) == c);
  const ShadowCombination s = model.shadow(c);
  CHECK(shadow_from_json(json::parse(shadow_to_json(s).dump())) == s);
}
