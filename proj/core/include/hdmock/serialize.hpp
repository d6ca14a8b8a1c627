#pragma once

#include <nlohmann/json.hpp>

#include "hdmock/analytic.hpp"
#include "hdmock/bol.hpp"
#include "hdmock/gamma.hpp"
#include "hdmock/graded.hpp"
#include "hdmock/modular_forms.hpp"
#include "hdmock/qseries.hpp"

// nlohmann::json hooks. Rationals are written as "num/den" strings, complex
// numbers as {"re": ..., "im": ...}. Every writer has a matching reader.
namespace hdmock {

void to_json(nlohmann::json& j, const QSeries& s);
void from_json(const nlohmann::json& j, QSeries& s);

void to_json(nlohmann::json& j, const FormSpace& s);
void from_json(const nlohmann::json& j, FormSpace& s);

void to_json(nlohmann::json& j, const RepElement& p);
void from_json(const nlohmann::json& j, RepElement& p);

void to_json(nlohmann::json& j, const BolQuotientReport& r);
void from_json(const nlohmann::json& j, BolQuotientReport& r);

void to_json(nlohmann::json& j, const Evaluation& e);
void from_json(const nlohmann::json& j, Evaluation& e);

void to_json(nlohmann::json& j, const PeriodPolynomial& p);
void from_json(const nlohmann::json& j, PeriodPolynomial& p);

void to_json(nlohmann::json& j, const GrDims& d);
void from_json(const nlohmann::json& j, GrDims& d);

void to_json(nlohmann::json& j, const GrBasisLabel& l);
void from_json(const nlohmann::json& j, GrBasisLabel& l);

/// Combinations are arrays of {"label": ..., "coeff": "num/den"}.
nlohmann::json combination_to_json(const GrCombination& c);
GrCombination combination_from_json(const nlohmann::json& j);
nlohmann::json shadow_to_json(const ShadowCombination& c);
ShadowCombination shadow_from_json(const nlohmann::json& j);

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

}  // namespace hdmock
