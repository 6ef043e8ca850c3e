#pragma once

#include <map>
#include <string>
#include <vector>

#include "posetcodes/distribution.hpp"

namespace posetcodes::closed_form {

/// One weight/frequency row of a closed-form distribution, before merging
/// and normalization. weight_expr is a human-readable form of the weight
/// formula for reporting.
struct TableRow {
  std::string weight_expr;
  long long weight = 0;
  long long freq = 0;
};

/// A spot where a published closed-form value disagrees with enumeration.
/// The verify pipeline emits these instead of silently matching either side.
struct Discrepancy {
  int table = 0;  // 1..8, or 0 for non-table records
  std::map<std::string, long long> params;
  std::string row_weight_expr;
  long long predicted = 0;  // as published
  long long observed = 0;   // as enumerated / derived
};

// Closed-form weight distributions of the defining-set codes over the
// two-level poset, as functions of the size parameters only.
//
//   table1: one ideal inside the bottom level (size a).
//   table2: one ideal covering the bottom level plus b top elements.
//   table3: two incomparable ideals inside the bottom level.
//   table4: two incomparable ideals each covering the bottom level.
//
// tables 5-8 are the same four cases for the Boolean-function codes.
//
// The rows below are the derived (enumeration-checked) forms. Where the
// published rows differ, *_rows_printed preserves the published form and
// discrepancies() reports the differences.

std::vector<TableRow> table1_rows(int n, int a);
std::vector<TableRow> table2_rows(int n, int m, int b);
std::vector<TableRow> table3_rows(int n, int a1, int a2, int a12);
std::vector<TableRow> table4_rows(int n, int m, int b1, int b2, int b12);
std::vector<TableRow> table5_rows(int n, int a);
std::vector<TableRow> table6_rows(int n, int m, int b);
std::vector<TableRow> table7_rows(int n, int a1, int a2, int a12);
std::vector<TableRow> table8_rows(int n, int m, int b1, int b2, int b12);

std::vector<TableRow> table3_rows_printed(int n, int a1, int a2, int a12);
std::vector<TableRow> table4_rows_printed(int n, int m, int b1, int b2, int b12);
std::vector<TableRow> table7_rows_printed(int n, int a1, int a2, int a12);
std::vector<TableRow> table8_rows_printed(int n, int m, int b1, int b2, int b12);

WeightDistribution table1(int n, int a);
WeightDistribution table2(int n, int m, int b);
WeightDistribution table3(int n, int a1, int a2, int a12);
WeightDistribution table4(int n, int m, int b1, int b2, int b12);
WeightDistribution table5(int n, int a);
WeightDistribution table6(int n, int m, int b);
WeightDistribution table7(int n, int a1, int a2, int a12);
WeightDistribution table8(int n, int m, int b1, int b2, int b12);

// Code lengths. The function codes always have length 2^n - 1; the
// defining-set lengths equal 2^n minus the down-set collection size.
long long table1_length(int n, int a);
long long table2_length(int n, int m, int b);
long long table3_length(int n, int a1, int a2, int a12);
long long table4_length(int n, int m, int b1, int b2, int b12);
long long table3_length_printed(int n, int a1, int a2, int a12);
long long table4_length_printed(int n, int m, int b1, int b2, int b12);

/// Published-vs-derived differences for the given parameters: row frequency
/// swaps, the B2\B2 frequency misprints, one misprinted row weight, and the
/// two length formulas. Empty when the published values happen to agree.
std::vector<Discrepancy> discrepancies_table3(int n, int a1, int a2, int a12);
std::vector<Discrepancy> discrepancies_table4(int n, int m, int b1, int b2, int b12);
std::vector<Discrepancy> discrepancies_table7(int n, int a1, int a2, int a12);
std::vector<Discrepancy> discrepancies_table8(int n, int m, int b1, int b2, int b12);

}  // namespace posetcodes::closed_form
