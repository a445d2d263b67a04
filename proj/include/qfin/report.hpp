#pragma once

#include <json.hpp>

#include "qfin/frobenius.hpp"
#include "qfin/gram.hpp"
#include "qfin/qspec.hpp"

namespace qfin {

inline constexpr const char* kVersion = "qfin 0.1.0";

/// Canonical rational rendering: "p" when the denominator is 1, else "p/q".
std::string render_rational(const Rational& r);

/// Weight as a comma-joined list of canonical rationals.
std::string render_weight(const Weight& w);

/// Cyclotomic as {conductor, coeffs, approx}; approx is a display annotation.
nlohmann::json render_cyclotomic(const Cyclotomic& x);

nlohmann::json render_spec(const RootSystem& rs, const RootOfUnitySpec& spec);
nlohmann::json render_gram_block(const GramBlock& blk);
nlohmann::json render_module_report(const ModuleReport& rep);
nlohmann::json render_reality_algebra(const RealityAlgebra& ra);

/// One row per (lambda, form) with dims flattened to "weight:rank" pairs.
std::string module_reports_csv(const std::vector<ModuleReport>& reports);

}  // namespace qfin
