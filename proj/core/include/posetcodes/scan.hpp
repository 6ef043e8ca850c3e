#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posetcodes/analysis.hpp"
#include "posetcodes/codebuild.hpp"

namespace posetcodes {

/// One certified code in a parameter sweep. Size parameters are zero when
/// the corresponding set is absent (a one-ideal family leaves a2/b2/inter
/// at zero; a bottom-level ideal leaves b1 at zero).
struct ScanRow {
  int m = 0, n = 0;
  int a1 = 0, b1 = 0, a2 = 0, b2 = 0, inter = 0;
  CodeKind kind = CodeKind::DefiningSet;
  long long length = 0;
  int k = 0;
  long long d = 0;
  bool is_griesmer = false;
  bool griesmer_optimal = false;
  /// Unset when the ground set exceeds the oracle cap (the exhaustive
  /// pairwise check needs materialized codewords).
  std::optional<bool> minimal;
  std::optional<bool> ab_violating;
};

struct ScanOptions {
  int n_max = 6;
  std::optional<CodeKind> kind;  // both kinds when unset
  bool filter_griesmer = false;
  bool filter_griesmer_optimal = false;
  bool filter_minimal = false;
  bool filter_ab_violating = false;
  /// Cross-check every analytic report against the oracle; mismatches throw.
  bool oracle_crosscheck = false;
};

/// Enumerates two-level parameters (m <= n <= n_max) and one- or two-ideal
/// families up to size-equivalence, certifies each realized code, and
/// returns the rows passing the filters, sorted by (n, m, kind, sizes).
std::vector<ScanRow> run_scan(const ScanOptions& options);

/// Builds the CodeSpec realizing a row's size parameters with the canonical
/// witness sets.
CodeSpec scan_row_spec(const ScanRow& row);

std::string scan_csv_header();
std::string scan_row_csv(const ScanRow& row);

}  // namespace posetcodes
