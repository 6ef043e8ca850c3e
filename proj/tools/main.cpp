#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "posetcodes/analysis.hpp"
#include "posetcodes/codebuild.hpp"
#include "posetcodes/json_io.hpp"
#include "posetcodes/parse.hpp"
#include "posetcodes/scan.hpp"
#include "posetcodes/verify.hpp"

namespace {

using namespace posetcodes;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_certificate_text(const CodeReport& report, const Certificate* cert) {
  std::cout << "[" << report.length << ", " << report.dimension << ", " << report.w_min
            << "]\n";
  std::cout << weight_enumerator_string(report) << "\n";
  long long gs = griesmer_sum(report.dimension, report.w_min);
  std::cout << "griesmer_sum(" << report.dimension << "," << report.w_min
            << ")=" << gs << "  is_griesmer=" << yes_no(gs == report.length)
            << "  griesmer_distance_optimal="
            << yes_no(griesmer_sum(report.dimension, report.w_min + 1) > report.length);
  if (cert != nullptr) {
    std::cout << "  griesmer_almost_optimal=" << yes_no(cert->griesmer_almost_optimal);
  }
  std::cout << "\n";
  std::cout << "w_min/w_max=" << report.w_min << "/" << report.w_max;
  if (cert != nullptr) {
    std::cout << "  ab_sufficient=" << yes_no(cert->ab_sufficient)
              << "  minimal_exhaustive=" << yes_no(cert->minimal_exhaustive)
              << "  ab_violating_minimal=" << yes_no(cert->ab_violating_minimal);
    if (cert->witness) {
      std::cout << "  witness=(" << cert->witness->first << ","
                << cert->witness->second << ")";
    }
  } else {
    std::cout << "  (minimality not checked: ground set exceeds the oracle cap)";
  }
  std::cout << "\n";
}

int cmd_construct(const std::string& poset_spec, const std::string& ideal_spec,
                  const std::string& kind_str, const std::string& format,
                  bool with_oracle) {
  Poset poset = parse_poset(poset_spec);
  IdealFamily family = parse_ideal_family(poset, ideal_spec);
  CodeSpec spec{poset, family, parse_kind(kind_str)};
  CodeReport report = analytic_code(spec);

  std::optional<Certificate> cert;
  if (poset.size() <= oracle_cap()) {
    cert = certify(report, spec);
  }
  if (with_oracle) {
    if (poset.size() > oracle_cap()) {
      std::cerr << "construct: --oracle requested but the ground set exceeds the "
                   "enumeration cap\n";
      return 2;
    }
    CodeReport check = oracle_code(spec);
    if (check.length != report.length || check.dimension != report.dimension ||
        !(check.distribution == report.distribution)) {
      std::cerr << "construct: analytic report disagrees with the oracle\n";
      return 1;
    }
  }

  if (format == "json") {
    std::cout << report_to_json(report, cert ? &*cert : nullptr) << "\n";
  } else if (format == "csv") {
    std::cout << "length,k,d,w_max,is_griesmer,griesmer_distance_optimal,minimal,"
                 "ab_violating\n";
    std::cout << report.length << ',' << report.dimension << ',' << report.w_min << ','
              << report.w_max;
    long long gs = griesmer_sum(report.dimension, report.w_min);
    std::cout << ',' << (gs == report.length ? 1 : 0) << ','
              << (griesmer_sum(report.dimension, report.w_min + 1) > report.length ? 1
                                                                                   : 0);
    if (cert) {
      std::cout << ',' << (cert->minimal_exhaustive ? 1 : 0) << ','
                << (cert->ab_violating_minimal ? 1 : 0);
    } else {
      std::cout << ",,";
    }
    std::cout << "\n";
  } else {
    print_certificate_text(report, cert ? &*cert : nullptr);
  }
  return 0;
}

int cmd_verify(const verify::Options& options, const std::string& format) {
  verify::Report report = verify::run(options);
  if (format == "json") {
    std::cout << verify_report_to_json(report) << "\n";
  } else {
    for (const auto& check : report.checks) {
      std::cout << (check.pass ? "PASS" : "FAIL") << "  [" << check.fixture << "] "
                << check.name;
      if (!check.pass && !check.detail.empty()) std::cout << "  -- " << check.detail;
      std::cout << "\n";
    }
    if (!report.discrepancies.empty()) {
      std::cout << "\nknown discrepancies against the published values "
                   "(enumeration is authoritative):\n";
      for (const auto& d : report.discrepancies) {
        std::cout << "  " << discrepancy_to_json(d) << "\n";
      }
    }
    std::size_t failed = 0;
    for (const auto& check : report.checks) {
      if (!check.pass) ++failed;
    }
    std::cout << "\n" << (report.checks.size() - failed) << "/" << report.checks.size()
              << " fixtures passed, " << report.discrepancies.size()
              << " recorded discrepancies\n";
  }
  return report.all_pass(options.strict) ? 0 : 1;
}

int cmd_scan(const ScanOptions& options, const std::string& format) {
  std::vector<ScanRow> rows = run_scan(options);
  if (format == "json") {
    std::cout << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const ScanRow& row = rows[i];
      std::cout << "  {\"m\":" << row.m << ",\"n\":" << row.n << ",\"a1\":" << row.a1
                << ",\"b1\":" << row.b1 << ",\"a2\":" << row.a2 << ",\"b2\":" << row.b2
                << ",\"i12\":" << row.inter << ",\"kind\":\"" << to_string(row.kind)
                << "\",\"length\":" << row.length << ",\"k\":" << row.k
                << ",\"d\":" << row.d << ",\"is_griesmer\":" << row.is_griesmer
                << ",\"griesmer_optimal\":" << row.griesmer_optimal;
      if (row.minimal) std::cout << ",\"minimal\":" << *row.minimal;
      if (row.ab_violating) std::cout << ",\"ab_violating\":" << *row.ab_violating;
      std::cout << "}" << (i + 1 < rows.size() ? "," : "") << "\n";
    }
    std::cout << "]\n";
  } else {
    std::cout << scan_csv_header() << "\n";
    for (const ScanRow& row : rows) std::cout << scan_row_csv(row) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binary linear codes from order ideals of posets"};
  app.require_subcommand(1);

  std::string poset_spec, ideal_spec, kind_str = "D", format = "text";
  bool with_oracle = false;
  CLI::App* construct = app.add_subcommand("construct", "build one code and certify it");
  construct->add_option("--poset", poset_spec, "poset spec, e.g. hier:2,5 or n=4; cover=1<2,3<4")
      ->required();
  construct->add_option("--ideals", ideal_spec,
                        "semicolon-separated generator lists, closed downward")
      ->required();
  construct->add_option("--kind", kind_str, "construction kind: D or f");
  construct->add_option("--format", format, "output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  construct->add_flag("--oracle", with_oracle, "cross-check against full enumeration");

  verify::Options verify_options;
  std::string verify_format = "text";
  CLI::App* verify_cmd = app.add_subcommand("verify", "replay the reference checks");
  verify_cmd->add_flag("--strict", verify_options.strict,
                       "recorded discrepancies also fail the run");
  verify_cmd->add_option("--only", verify_options.only,
                         "run only the fixture with this tag (e.g. thm61)");
  verify_cmd->add_option("--samples", verify_options.random_poset_samples,
                         "random posets drawn for the identity sweep");
  verify_cmd->add_option("--seed", verify_options.seed, "random seed");
  verify_cmd->add_option("--n-max", verify_options.table_sweep_n_max,
                         "ground-set bound for the table sweeps")
      ->check(CLI::Range(2, 10));
  verify_cmd->add_option("--format", verify_format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  ScanOptions scan_options;
  std::string scan_kind, scan_format = "csv";
  std::vector<std::string> filters;
  CLI::App* scan_cmd = app.add_subcommand("scan", "sweep parameters and certify codes");
  scan_cmd->add_option("--n-max", scan_options.n_max, "largest ground-set size")
      ->required();
  scan_cmd->add_option("--kind", scan_kind, "restrict to one construction: D or f");
  scan_cmd->add_option("--filter", filters,
                       "keep only rows with this property (repeatable): "
                       "griesmer, griesmer-optimal, minimal, ab-violating");
  scan_cmd->add_flag("--oracle", scan_options.oracle_crosscheck,
                     "cross-check every analytic report against enumeration");
  scan_cmd->add_option("--format", scan_format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (construct->parsed()) {
      return cmd_construct(poset_spec, ideal_spec, kind_str, format, with_oracle);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(verify_options, verify_format);
    }
    if (scan_cmd->parsed()) {
      if (!scan_kind.empty()) scan_options.kind = parse_kind(scan_kind);
      for (const std::string& f : filters) {
        if (f == "griesmer") {
          scan_options.filter_griesmer = true;
        } else if (f == "griesmer-optimal") {
          scan_options.filter_griesmer_optimal = true;
        } else if (f == "minimal") {
          scan_options.filter_minimal = true;
        } else if (f == "ab-violating") {
          scan_options.filter_ab_violating = true;
        } else {
          std::cerr << "scan: unknown filter '" << f << "'\n";
          return 2;
        }
      }
      return cmd_scan(scan_options, scan_format);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
