#include "hdmock/serialize.hpp"

#include <algorithm>

#include "hdmock/error.hpp"

namespace hdmock {

using nlohmann::json;

namespace {

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

void to_json(json& j, const QSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_string(c));
  j = json{{"valuation", s.valuation()}, {"prec", s.prec()}, {"coeffs", std::move(coeffs)}};
}

void from_json(const json& j, QSeries& s) {
  guarded([&] {
    std::vector<QRational> c;
    for (const auto& x : j.at("coeffs")) c.push_back(parse_rational(x.get<std::string>()));
    s = QSeries(j.at("valuation").get<int>(), j.at("prec").get<int>(), std::move(c));
    return 0;
  });
}

void to_json(json& j, const FormSpace& s) {
  j = json{{"weight", s.weight}, {"pole_bound", s.pole_bound}, {"prec", s.prec}, {"basis", s.basis}};
}

void from_json(const json& j, FormSpace& s) {
  guarded([&] {
    s.weight = j.at("weight").get<int>();
    s.pole_bound = j.at("pole_bound").get<int>();
    s.prec = j.at("prec").get<int>();
    s.basis = j.at("basis").get<std::vector<QSeries>>();
    return 0;
  });
}

void to_json(json& j, const RepElement& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs) coeffs.push_back(to_string(c));
  j = json{{"degree", p.degree}, {"coeffs", std::move(coeffs)}};
}

void from_json(const json& j, RepElement& p) {
  guarded([&] {
    QVector c;
    for (const auto& x : j.at("coeffs")) c.push_back(parse_rational(x.get<std::string>()));
    p = RepElement(j.at("degree").get<int>(), std::move(c));
    return 0;
  });
}

void to_json(json& j, const BolQuotientReport& r) {
  j = json{{"k", r.k},
           {"p", r.p},
           {"prec", r.prec},
           {"dim_source", r.dim_source},
           {"dim_target", r.dim_target},
           {"dim_image", r.dim_image},
           {"quotient_dim", r.quotient_dim}};
}

void from_json(const json& j, BolQuotientReport& r) {
  guarded([&] {
    r.k = j.at("k").get<int>();
    r.p = j.at("p").get<int>();
    r.prec = j.at("prec").get<int>();
    r.dim_source = j.at("dim_source").get<int>();
    r.dim_target = j.at("dim_target").get<int>();
    r.dim_image = j.at("dim_image").get<int>();
    r.quotient_dim = j.at("quotient_dim").get<int>();
    if (r.quotient_dim != r.dim_target - r.dim_image || r.quotient_dim < 0) {
      throw Error("inconsistent Bol quotient report");
    }
    return 0;
  });
}

json complex_to_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const json& j) {
  return guarded([&] { return Complex(j.at("re").get<double>(), j.at("im").get<double>()); });
}

void to_json(json& j, const Evaluation& e) {
  j = json{{"value", complex_to_json(e.value)}, {"error_bound", e.error_bound}};
}

void from_json(const json& j, Evaluation& e) {
  e.value = complex_from_json(j.at("value"));
  e.error_bound = guarded([&] { return j.at("error_bound").get<double>(); });
}

void to_json(json& j, const PeriodPolynomial& p) {
  json coeffs = json::array();
  for (const auto& z : p.coeffs) coeffs.push_back(complex_to_json(z));
  j = json{{"degree", p.degree},
           {"coeffs", std::move(coeffs)},
           {"tolerance", p.tolerance},
           {"s_residual", p.s_residual},
           {"u_residual", p.u_residual}};
}

void from_json(const json& j, PeriodPolynomial& p) {
  guarded([&] {
    p.degree = j.at("degree").get<int>();
    p.coeffs.clear();
    for (const auto& z : j.at("coeffs")) p.coeffs.push_back(complex_from_json(z));
    if (p.coeffs.size() != static_cast<std::size_t>(p.degree + 1)) {
      throw Error("period polynomial coefficient count does not match degree");
    }
    p.tolerance = j.at("tolerance").get<double>();
    p.s_residual = j.at("s_residual").get<double>();
    p.u_residual = j.at("u_residual").get<double>();
    return 0;
  });
}

void to_json(json& j, const GrDims& d) {
  json rows = json::array();
  for (int k = d.kmin; k <= d.kmax; ++k)
    for (int i = 0; i <= d.max_depth; ++i) rows.push_back(json::array({k, i, d.at(k, i)}));
  j = json{{"variant", d.variant.name()},
           {"shadow", d.variant.shadow == ShadowKind::analytic ? "analytic" : "full"},
           {"pole_bound", d.variant.pole_bound},
           {"cutoff", d.cutoff},
           {"kmin", d.kmin},
           {"kmax", d.kmax},
           {"max_depth", d.max_depth},
           {"rows", std::move(rows)}};
}

void from_json(const json& j, GrDims& d) {
  guarded([&] {
    const auto shadow = j.at("shadow").get<std::string>();
    d.variant = {shadow == "analytic" ? ShadowKind::analytic : ShadowKind::full,
                 j.at("pole_bound").get<int>()};
    d.cutoff = j.at("cutoff").get<int>();
    d.kmin = j.at("kmin").get<int>();
    d.kmax = j.at("kmax").get<int>();
    d.max_depth = j.at("max_depth").get<int>();
    d.table.clear();
    for (const auto& row : j.at("rows")) d.table.push_back(row.at(2).get<std::int64_t>());
    if (d.table.size() != static_cast<std::size_t>((d.kmax - d.kmin + 1) * (d.max_depth + 1))) {
      throw Error("graded table has the wrong number of rows");
    }
    return 0;
  });
}

void to_json(json& j, const GrBasisLabel& l) {
  json slots = json::array();
  for (const auto& s : l.slots) slots.push_back(json::array({s.l, s.index}));
  j = json{{"weight", l.weight},
           {"slots", std::move(slots)},
           {"pole_bound", l.pole_bound},
           {"base_index", l.base_index}};
}

void from_json(const json& j, GrBasisLabel& l) {
  guarded([&] {
    l.weight = j.at("weight").get<int>();
    l.slots.clear();
    for (const auto& s : j.at("slots")) l.slots.push_back({s.at(0).get<int>(), s.at(1).get<int>()});
    std::sort(l.slots.begin(), l.slots.end());
    l.pole_bound = j.value("pole_bound", 0);
    l.base_index = j.at("base_index").get<int>();
    return 0;
  });
}

json combination_to_json(const GrCombination& c) {
  json out = json::array();
  for (const auto& [label, coeff] : c) out.push_back(json{{"label", label}, {"coeff", to_string(coeff)}});
  return out;
}

GrCombination combination_from_json(const json& j) {
  return guarded([&] {
    GrCombination c;
    for (const auto& term : j) {
      const QRational coeff = parse_rational(term.value("coeff", std::string("1")));
      if (coeff == 0) continue;
      auto [it, inserted] = c.emplace(term.at("label").get<GrBasisLabel>(), coeff);
      if (!inserted) {
        it->second += coeff;
        if (it->second == 0) c.erase(it);
      }
    }
    return c;
  });
}

json shadow_to_json(const ShadowCombination& c) {
  json out = json::array();
  for (const auto& [term, coeff] : c) {
    out.push_back(json{{"slot", json::array({term.slot.l, term.slot.index})},
                       {"rest", term.rest},
                       {"coeff", to_string(coeff)}});
  }
  return out;
}

ShadowCombination shadow_from_json(const json& j) {
  return guarded([&] {
    ShadowCombination c;
    for (const auto& t : j) {
      ShadowTerm term{{t.at("slot").at(0).get<int>(), t.at("slot").at(1).get<int>()},
                      t.at("rest").get<GrBasisLabel>()};
      c[term] += parse_rational(t.at("coeff").get<std::string>());
    }
    return c;
  });
}

}  // namespace hdmock
