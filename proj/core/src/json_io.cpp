#include "posetcodes/json_io.hpp"

#include <json.hpp>

namespace posetcodes {

namespace {

using nlohmann::json;

json distribution_json(const WeightDistribution& dist) {
  json rows = json::array();
  for (auto [w, count] : dist.entries()) {
    rows.push_back({{"weight", w}, {"count", count}});
  }
  return rows;
}

json certificate_json(const Certificate& cert) {
  json j{
      {"griesmer_sum_at_d", cert.griesmer_sum_at_d},
      {"is_griesmer", cert.is_griesmer},
      {"griesmer_distance_optimal", cert.griesmer_distance_optimal},
      {"griesmer_almost_optimal", cert.griesmer_almost_optimal},
      {"ab_ratio", {{"w_min", cert.w_min}, {"w_max", cert.w_max}}},
      {"ab_sufficient", cert.ab_sufficient},
      {"minimal_exhaustive", cert.minimal_exhaustive},
      {"ab_violating_minimal", cert.ab_violating_minimal},
  };
  if (cert.witness) {
    j["witness"] = {cert.witness->first, cert.witness->second};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

json report_json(const CodeReport& report, const Certificate* cert) {
  json j{
      {"length", report.length},
      {"dimension", report.dimension},
      {"distribution", distribution_json(report.distribution)},
      {"w_min", report.w_min},
      {"w_max", report.w_max},
      {"source", to_string(report.source)},
  };
  if (cert != nullptr) j["certificate"] = certificate_json(*cert);
  return j;
}

json discrepancy_json(const closed_form::Discrepancy& d) {
  json params = json::object();
  for (const auto& [key, value] : d.params) params[key] = value;
  return json{
      {"table", d.table},
      {"params", params},
      {"row_weight_expr", d.row_weight_expr},
      {"predicted", d.predicted},
      {"observed", d.observed},
  };
}

}  // namespace

std::string report_to_json(const CodeReport& report, const Certificate* cert) {
  return report_json(report, cert).dump(2);
}

std::string discrepancy_to_json(const closed_form::Discrepancy& d) {
  return discrepancy_json(d).dump();
}

std::string verify_report_to_json(const verify::Report& report) {
  json checks = json::array();
  for (const auto& check : report.checks) {
    checks.push_back({{"fixture", check.fixture},
                      {"name", check.name},
                      {"pass", check.pass},
                      {"detail", check.detail}});
  }
  json discrepancies = json::array();
  for (const auto& d : report.discrepancies) discrepancies.push_back(discrepancy_json(d));
  return json{{"checks", checks}, {"discrepancies", discrepancies}}.dump(2);
}

}  // namespace posetcodes
