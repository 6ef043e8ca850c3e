#pragma once

#include <string>

#include "posetcodes/analysis.hpp"
#include "posetcodes/closed_form.hpp"
#include "posetcodes/codebuild.hpp"
#include "posetcodes/verify.hpp"

namespace posetcodes {

/// {"length":..,"dimension":..,"distribution":[{"weight":..,"count":..},...],
///  "w_min":..,"w_max":..,"source":"...","certificate":{...}}
/// The certificate block is omitted when cert is null.
std::string report_to_json(const CodeReport& report, const Certificate* cert);

/// {"table":..,"params":{...},"row_weight_expr":"...","predicted":..,"observed":..}
std::string discrepancy_to_json(const closed_form::Discrepancy& d);

std::string verify_report_to_json(const verify::Report& report);

}  // namespace posetcodes
