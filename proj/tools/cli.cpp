#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>

#include "hdmock/analytic.hpp"
#include "hdmock/bol.hpp"
#include "hdmock/error.hpp"
#include "hdmock/gamma.hpp"
#include "hdmock/graded.hpp"
#include "hdmock/modular_forms.hpp"
#include "hdmock/serialize.hpp"
#include "hdmock/version.hpp"

namespace hdmock::cli {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json envelope(const std::string& command, json params, json result) {
  return json{{"command", command},
              {"params", std::move(params)},
              {"result", std::move(result)},
              {"version", kVersion}};
}

HPoint parse_tau(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--tau expects x,y");
  try {
    return HPoint(std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1)));
  } catch (const std::invalid_argument&) {
    throw UsageError("--tau expects two numbers x,y, got \"" + text + "\"");
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("expected a comma separated list of integers, got \"" + text + "\"");
    }
  }
  return out;
}

json read_json(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(std::string("cannot parse JSON from standard input: ") + e.what());
  }
}

// Precision keeping 2 pi y prec comfortably above the evaluation guard.
int analytic_precision(int requested, double ymin) {
  const int needed = static_cast<int>(std::ceil(60.0 / (2 * std::numbers::pi * ymin))) + 10;
  return requested > 0 ? requested : std::max(60, needed);
}

// delta, j, e2/e4/..., eisenstein (with weight), cusp (with weight, index).
struct NamedForm {
  QSeries series;
  int weight;
};

NamedForm named_form(const std::string& name, int weight, int index, int prec) {
  if (name == "delta") return {delta(prec), 12};
  if (name == "j") return {j_invariant(prec), 0};
  if (name == "eisenstein") return {eisenstein(weight, prec), weight};
  if (name.size() > 1 && name[0] == 'e' &&
      std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    const int k = std::stoi(name.substr(1));
    return {eisenstein(k, prec), k};
  }
  if (name == "cusp") {
    if (dim_S(weight) == 0) throw Error("no cusp forms of weight " + std::to_string(weight));
    if (index < 1 || index > dim_S(weight)) {
      throw Error("cusp index must be in 1.." + std::to_string(dim_S(weight)));
    }
    const FormSpace sp = basis_space(weight, 0, std::max(prec, default_precision(weight, 0)));
    // Echelon elements with leading exponent >= 1 are the cusp forms.
    return {sp.basis.at(static_cast<std::size_t>(index)).truncated(prec), weight};
  }
  throw UsageError("unknown form \"" + name + "\" (delta, j, eK, eisenstein, cusp)");
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Plain rendering of a result payload.
void render_table(const json& result, std::ostream& out) {
  if (!result.is_object()) {
    out << scalar_text(result) << '\n';
    return;
  }
  if (result.contains("rows") && result["rows"].is_array() && !result["rows"].empty() &&
      result["rows"][0].is_object()) {
    std::vector<std::string> cols;
    for (const auto& [key, _] : result["rows"][0].items()) cols.push_back(key);
    std::vector<std::size_t> width(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
    for (const auto& row : result["rows"])
      for (std::size_t c = 0; c < cols.size(); ++c)
        width[c] = std::max(width[c], scalar_text(row[cols[c]]).size());
    for (std::size_t c = 0; c < cols.size(); ++c) out << std::setw(static_cast<int>(width[c] + 2)) << cols[c];
    out << '\n';
    for (const auto& row : result["rows"]) {
      for (std::size_t c = 0; c < cols.size(); ++c)
        out << std::setw(static_cast<int>(width[c] + 2)) << scalar_text(row[cols[c]]);
      out << '\n';
    }
    for (const auto& [key, value] : result.items()) {
      if (key != "rows") out << key << ": " << scalar_text(value) << '\n';
    }
    return;
  }
  if (result.contains("coeffs") && result.contains("valuation")) {
    const int v = result["valuation"].get<int>();
    out << "prec: " << result["prec"].get<int>() << '\n';
    int n = v;
    for (const auto& c : result["coeffs"]) out << std::setw(6) << n++ << "  " << scalar_text(c) << '\n';
    return;
  }
  std::size_t w = 0;
  for (const auto& [key, _] : result.items()) w = std::max(w, key.size());
  for (const auto& [key, value] : result.items()) {
    out << std::left << std::setw(static_cast<int>(w + 2)) << key << std::right << scalar_text(value) << '\n';
  }
}

struct Globals {
  int prec = 0;
  int cutoff = 12;
  int pole_bound = 0;
  bool table = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact and numeric computations with modular forms, Bol's operator, cohomology "
               "of SL2(Z), Eichler integrals and depth-graded dimension tables.",
               "hdmock"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kVersion));

  Globals g;
  app.add_option("--prec", g.prec, "Series precision (number of q-exponents)");
  app.add_option("--cutoff", g.cutoff, "Largest shadow weight l in graded tables");
  app.add_option("--pole-bound,--p", g.pole_bound, "Pole order bound for weakly holomorphic spaces");
  app.add_flag("--table", g.table, "Human-readable table instead of JSON");

  // qexp
  auto* qexp = app.add_subcommand("qexp", "q-expansion of a named form");
  std::string form_name;
  int weight = 0, index = 1;
  qexp->add_option("form", form_name, "delta | j | eK | eisenstein | cusp")->required();
  qexp->add_option("--weight", weight, "Weight for eisenstein/cusp");
  qexp->add_option("--index", index, "Cusp form index (leading exponent)");

  // dims
  auto* dims = app.add_subcommand("dims", "dim M_k and dim S_k");
  dims->add_option("--weight,--k", weight, "Weight")->required();

  // basis
  auto* basis = app.add_subcommand("basis", "Echelon basis of Delta^{-p} M_{k+12p}");
  basis->add_option("--weight,--k", weight, "Weight")->required();

  // bol
  auto* bol = app.add_subcommand("bol", "Bol's operator D^{k+1}");
  bol->require_subcommand(1);
  int k = 0;
  auto* bol_quot = bol->add_subcommand("quotient", "dim M^!_{k+2} / D^{k+1} M^!_{-k} at pole order <= p");
  bol_quot->add_option("--k", k, "Even k >= 2")->required();
  auto* bol_apply = bol->add_subcommand("apply", "Apply D^{k+1} to a QSeries JSON read from stdin");
  bol_apply->add_option("--k", k, "k >= 0")->required();
  auto* bol_res = bol->add_subcommand("residual", "Numeric slash equivariance of D^{k+1} on a basis form");
  std::string gamma_text = "S", tau_text;
  bol_res->add_option("--k", k, "Even k >= 2")->required();
  bol_res->add_option("--index", index, "Index into the basis of weight -k, pole order <= p");
  bol_res->add_option("--gamma", gamma_text, "S, T, a word in S/T/U, or a,b,c,d");
  bol_res->add_option("--tau", tau_text, "x,y")->required();

  // cohomology
  auto* coh = app.add_subcommand("cohomology", "Cohomology of SL2(Z) with coefficients in V^k");
  coh->require_subcommand(1);
  auto* coh_h0 = coh->add_subcommand("h0", "dim H^0(SL2(Z), V^k)");
  coh_h0->add_option("--k", k, "k >= 0")->required();
  auto* coh_h1 = coh->add_subcommand("h1", "dim H^1(SL2(Z), V^k)");
  coh_h1->add_option("--k", k, "k >= 0")->required();
  int kmax = 20, kmin = 0, depth = 2;
  auto* coh_es = coh->add_subcommand("check-es", "Compare cocycle rank, dimension formula and Bol quotient");
  coh_es->add_option("--kmax", kmax, "Largest even k")->required();
  std::string summands_text, drop_text;
  auto* coh_quot = coh->add_subcommand("quotient-h0", "Invariants of a quotient of a sum of V^l");
  coh_quot->add_option("--summands", summands_text, "Comma separated degrees")->required();
  coh_quot->add_option("--drop", drop_text, "Comma separated degrees to quotient by");
  auto* coh_slash = coh->add_subcommand("slash", "Slash a RepElement JSON from stdin by --gamma");
  coh_slash->add_option("--gamma", gamma_text, "S, T, a word in S/T/U, or a,b,c,d");

  // analytic
  auto* an = app.add_subcommand("analytic", "Numerics on the upper half plane");
  an->require_subcommand(1);
  form_name = "";
  auto* an_eval = an->add_subcommand("eval", "Evaluate a named form");
  an_eval->add_option("--form", form_name)->required();
  an_eval->add_option("--weight", weight);
  an_eval->add_option("--index", index);
  an_eval->add_option("--tau", tau_text)->required();
  auto* an_res = an->add_subcommand("residual", "|f(g tau) - (c tau + d)^k f(tau)| for a named form");
  an_res->add_option("--form", form_name)->required();
  an_res->add_option("--weight", weight);
  an_res->add_option("--index", index);
  an_res->add_option("--gamma", gamma_text);
  an_res->add_option("--tau", tau_text)->required();
  double step = 1e-4;
  auto* an_star = an->add_subcommand("star", "Non-holomorphic Eichler integral g*(tau) of a cusp form");
  an_star->add_option("--form", form_name, "delta or cusp (default cusp)");
  an_star->add_option("--weight", weight, "Weight k+2 of the cusp form")->default_val(12);
  an_star->add_option("--index", index);
  an_star->add_option("--tau", tau_text)->required();
  an_star->add_option("--step", step, "Finite-difference step for the dbar check");
  auto* an_per = an->add_subcommand("periods", "Period polynomial of a cusp form");
  an_per->add_option("--form", form_name, "delta or cusp (default cusp)");
  an_per->add_option("--weight", weight, "Weight k+2 of the cusp form")->default_val(12);
  an_per->add_option("--index", index);
  auto* an_fit = an->add_subcommand("fit", "Polynomial fit of g*|_{-k}gamma - g*");
  an_fit->add_option("--form", form_name);
  an_fit->add_option("--weight", weight)->default_val(12);
  an_fit->add_option("--index", index);
  an_fit->add_option("--gamma", gamma_text);
  auto* an_e2 = an->add_subcommand("e2hat", "Modularity residual of E2 - 3/(pi y)");
  an_e2->add_option("--gamma", gamma_text);
  an_e2->add_option("--tau", tau_text)->required();

  // gr
  auto* gr = app.add_subcommand("gr", "Depth-graded dimension calculus");
  gr->require_subcommand(1);
  std::string variant_text = "holomorphic";
  auto* gr_dims_cmd = gr->add_subcommand("dims", "CSV table of (weight, depth, dim)");
  gr_dims_cmd->add_option("--variant", variant_text, "holomorphic | weak | analytic");
  gr_dims_cmd->add_option("--depth", depth, "Largest depth");
  gr_dims_cmd->add_option("--kmin", kmin, "Smallest weight")->required();
  gr_dims_cmd->add_option("--kmax", kmax, "Largest weight")->required();
  int l = 0;
  auto* gr_mult = gr->add_subcommand("h1mult", "Multiplicity of weight -l shadow classes");
  gr_mult->add_option("--l", l)->required();
  gr_mult->add_option("--variant", variant_text);
  auto* gr_product_cmd = gr->add_subcommand("product", "Product of {\"a\": combo, \"b\": combo} from stdin");
  gr_product_cmd->add_option("--variant", variant_text);
  auto* gr_shadow_cmd = gr->add_subcommand("shadow", "Shadow of a combination read from stdin");
  gr_shadow_cmd->add_option("--variant", variant_text);
  auto* gr_pure_cmd = gr->add_subcommand("pure", "Purity test of a combination read from stdin");
  gr_pure_cmd->add_option("--k", k)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  auto emit = [&](const std::string& command, json params, json result) {
    if (g.table) {
      render_table(result, out);
    } else {
      out << envelope(command, std::move(params), std::move(result)).dump() << '\n';
    }
  };

  try {
    if (qexp->parsed()) {
      const int prec = g.prec > 0 ? g.prec : 10;
      const NamedForm f = named_form(form_name, weight, index, prec);
      emit("qexp", {{"form", form_name}, {"weight", f.weight}, {"prec", prec}}, f.series);
    } else if (dims->parsed()) {
      emit("dims", {{"weight", weight}}, {{"dim_M", dim_M(weight)}, {"dim_S", dim_S(weight)}});
    } else if (basis->parsed()) {
      const FormSpace sp = basis_space(weight, g.pole_bound, g.prec);
      emit("basis", {{"weight", weight}, {"pole_bound", g.pole_bound}, {"prec", sp.prec}}, sp);
    } else if (bol_quot->parsed()) {
      const int p = std::max(g.pole_bound, 1);
      const BolQuotientReport rep = bol_quotient_dim(k, p, g.prec);
      emit("bol quotient", {{"k", k}, {"p", p}, {"prec", rep.prec}}, rep);
    } else if (bol_apply->parsed()) {
      const QSeries f = read_json(in).get<QSeries>();
      emit("bol apply", {{"k", k}}, bol_operator(f, k));
    } else if (bol_res->parsed()) {
      const int p = std::max(g.pole_bound, 1);
      const int prec = g.prec > 0 ? g.prec : 60;
      const FormSpace sp = basis_space(-k, p, std::max(prec, default_precision(-k, p)));
      if (index < 0 || index >= static_cast<int>(sp.dim())) {
        throw Error("basis index out of range; the space has dimension " + std::to_string(sp.dim()));
      }
      const HPoint tau = parse_tau(tau_text);
      const Residual r = bol_equivariance_residual(sp.basis[static_cast<std::size_t>(index)], k,
                                                   GammaMatrix::parse(gamma_text), tau, prec);
      emit("bol residual",
           {{"k", k}, {"p", p}, {"index", index}, {"gamma", gamma_text}, {"tau", tau_text}, {"prec", prec}},
           {{"residual", r.value}, {"error_bound", r.error_bound}});
    } else if (coh_h0->parsed()) {
      emit("cohomology h0", {{"k", k}}, {{"h0", h0_dim(k)}});
    } else if (coh_h1->parsed()) {
      emit("cohomology h1", {{"k", k}}, {{"h1", h1_dim(k)}});
    } else if (coh_es->parsed()) {
      json rows = json::array();
      bool all = true;
      for (int kk = 2; kk <= kmax; kk += 2) {
        const int h1 = h1_dim(kk);
        const int formula = dim_M(kk + 2) + dim_S(kk + 2);
        json bols = json::array();
        bool agree = h1 == formula;
        for (int p = 1; p <= 3; ++p) {
          const int q = bol_quotient_dim(kk, p).quotient_dim;
          bols.push_back(q);
          agree = agree && q == h1;
        }
        all = all && agree;
        rows.push_back({{"k", kk}, {"h1", h1}, {"formula", formula}, {"bol_p1_p3", bols}, {"agree", agree}});
      }
      emit("cohomology check-es", {{"kmax", kmax}}, {{"rows", rows}, {"all_agree", all}});
      if (!all) return kDomainError;
    } else if (coh_quot->parsed()) {
      const auto summands = parse_int_list(summands_text);
      const auto drop = parse_int_list(drop_text);
      emit("cohomology quotient-h0", {{"summands", summands}, {"drop", drop}},
           {{"h0", quotient_invariants_dim(summands, drop)}});
    } else if (coh_slash->parsed()) {
      const RepElement p = read_json(in).get<RepElement>();
      emit("cohomology slash", {{"gamma", gamma_text}}, slash_rep(p, GammaMatrix::parse(gamma_text)));
    } else if (an_eval->parsed() || an_res->parsed()) {
      const HPoint tau = parse_tau(tau_text);
      const GammaMatrix gm = GammaMatrix::parse(gamma_text);
      double ymin = tau.y();
      if (an_res->parsed()) ymin = std::min(ymin, HPoint(gm.act(tau.tau())).y());
      const int prec = analytic_precision(g.prec, ymin);
      const NamedForm f = named_form(form_name, weight, index, prec);
      json params = {{"form", form_name}, {"weight", f.weight}, {"tau", tau_text}, {"prec", prec}};
      if (an_eval->parsed()) {
        emit("analytic eval", params, eval_series(f.series, tau));
      } else {
        params["gamma"] = gamma_text;
        const Residual r = modular_residual(f.series, f.weight, gm, tau);
        emit("analytic residual", params, {{"residual", r.value}, {"error_bound", r.error_bound}});
      }
    } else if (an_star->parsed() || an_per->parsed() || an_fit->parsed()) {
      if (form_name == "delta") weight = 12;
      const int kk = weight - 2;
      double ymin = 0.5;
      HPoint tau(0, 1);
      if (an_star->parsed()) {
        tau = parse_tau(tau_text);
        ymin = std::min(0.5, tau.y() - step);
        if (ymin <= 0) throw UsageError("--step must be smaller than Im tau");
      }
      const int prec = analytic_precision(g.prec, ymin);
      const NamedForm f = named_form("cusp", weight, index, prec);
      json params = {{"weight", weight}, {"k", kk}, {"index", index}, {"prec", prec}};
      if (an_star->parsed()) {
        params["tau"] = tau_text;
        params["step"] = step;
        const Evaluation v = eichler_star(f.series, kk, tau);
        const Residual d = dbar_residual(f.series, kk, tau, step);
        emit("analytic star", params,
             {{"value", complex_to_json(v.value)},
              {"error_bound", v.error_bound},
              {"dbar_residual", d.value},
              {"dbar_error_bound", d.error_bound}});
      } else if (an_per->parsed()) {
        emit("analytic periods", params, period_polynomial(f.series, kk));
      } else {
        params["gamma"] = gamma_text;
        const PolynomialFit fit = star_cocycle_fit(f.series, kk, GammaMatrix::parse(gamma_text));
        json coeffs = json::array();
        for (const auto& c : fit.coeffs) coeffs.push_back(complex_to_json(c));
        emit("analytic fit", params, {{"coeffs", coeffs}, {"residual", fit.residual}});
      }
    } else if (an_e2->parsed()) {
      const Residual r = e2_completion_residual(GammaMatrix::parse(gamma_text), parse_tau(tau_text));
      emit("analytic e2hat", {{"gamma", gamma_text}, {"tau", tau_text}},
           {{"residual", r.value}, {"error_bound", r.error_bound}});
    } else if (gr_dims_cmd->parsed()) {
      const Variant v = Variant::parse(variant_text, g.pole_bound);
      const GrDims table = gr_dims(v, g.cutoff, kmin, kmax, depth);
      const json header = {{"command", "gr dims"},
                           {"variant", v.name()},
                           {"cutoff", g.cutoff},
                           {"pole_bound", v.pole_bound},
                           {"kmin", kmin},
                           {"kmax", kmax},
                           {"depth", depth},
                           {"version", kVersion}};
      if (g.table) {
        out << "# variant " << v.name() << ", cutoff " << g.cutoff << '\n';
        out << std::setw(8) << "weight" << std::setw(8) << "depth" << std::setw(14) << "dim" << '\n';
        for (int kk = kmin; kk <= kmax; ++kk)
          for (int i = 0; i <= depth; ++i)
            out << std::setw(8) << kk << std::setw(8) << i << std::setw(14) << table.at(kk, i) << '\n';
      } else {
        out << header.dump() << '\n' << "weight,depth,dim\n";
        for (int kk = kmin; kk <= kmax; ++kk)
          for (int i = 0; i <= depth; ++i) out << kk << ',' << i << ',' << table.at(kk, i) << '\n';
      }
    } else if (gr_mult->parsed()) {
      const Variant v = Variant::parse(variant_text, 0);
      emit("gr h1mult", {{"l", l}, {"variant", v.name()}}, {{"h1_mult", h1_mult(l, v.shadow)}});
    } else if (gr_product_cmd->parsed() || gr_shadow_cmd->parsed()) {
      const GradedModel model(Variant::parse(variant_text, g.pole_bound), g.cutoff);
      const json input = read_json(in);
      json params = {{"variant", model.variant().name()}, {"cutoff", g.cutoff}};
      if (gr_product_cmd->parsed()) {
        const GrCombination a = combination_from_json(input.at("a"));
        const GrCombination b = combination_from_json(input.at("b"));
        emit("gr product", params, combination_to_json(model.product(a, b)));
      } else {
        emit("gr shadow", params, shadow_to_json(model.shadow(combination_from_json(input))));
      }
    } else if (gr_pure_cmd->parsed()) {
      const GrCombination a = combination_from_json(read_json(in));
      emit("gr pure", {{"k", k}}, {{"pure", is_pure(a, k)}});
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}

}  // namespace hdmock::cli
