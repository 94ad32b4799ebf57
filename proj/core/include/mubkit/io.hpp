// JSON interchange for basis sets, designs, measure reports, and QKD
// outcomes, plus the flat CSV form of a measure report. JSON is the single
// canonical format; parsers ignore unknown keys so tools may embed run
// metadata alongside the payload.
//
// Schemas:
//   BasisSet    {"d": int, "provenance": str,
//                "bases": [{"label": str, "vectors": [[[re, im], ...]]}]}
//   Design      {"d": int, "classes": [[[point indices]]], "provenance": str}
//   QkdOutcome  {"raw_rate": real, "sift_error": real, "trials": int,
//                "std_error": real, "seed": int}
#pragma once

#include <string>

#include "json.hpp"

#include "mubkit/designs.hpp"
#include "mubkit/linalg.hpp"
#include "mubkit/measures.hpp"
#include "mubkit/qkd.hpp"

namespace mubkit {

nlohmann::json basis_set_to_json(const BasisSet& s);
BasisSet basis_set_from_json(const nlohmann::json& j);

nlohmann::json design_to_json(const ResolvableDesign& d);
ResolvableDesign design_from_json(const nlohmann::json& j);

nlohmann::json qkd_outcome_to_json(const QkdOutcome& o);
QkdOutcome qkd_outcome_from_json(const nlohmann::json& j);

nlohmann::json measure_report_to_json(const MeasureReport& r);

// One row per pair (l, m, omega_2, tau, sigma, d2, gamma2) and a trailing
// set-summary row labelled l = m = "*".
std::string measure_report_to_csv(const MeasureReport& r);

// File helpers; throw std::runtime_error with the path on failure.
void save_json(const nlohmann::json& j, const std::string& path);
nlohmann::json load_json(const std::string& path);

}  // namespace mubkit
