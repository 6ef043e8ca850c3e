#include "posetcodes/scan.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace posetcodes {

namespace {

Mask range_mask(int lo, int hi) {
  Mask m = 0;
  for (int e = lo; e <= hi; ++e) m |= singleton(e);
  return m;
}

auto sort_key(const ScanRow& row) {
  return std::tuple(row.n, row.m, static_cast<int>(row.kind), row.a1, row.b1, row.a2,
                    row.b2, row.inter);
}

bool passes(const ScanRow& row, const ScanOptions& opt) {
  if (opt.filter_griesmer && !row.is_griesmer) return false;
  if (opt.filter_griesmer_optimal && !row.griesmer_optimal) return false;
  if (opt.filter_minimal && !(row.minimal && *row.minimal)) return false;
  if (opt.filter_ab_violating && !(row.ab_violating && *row.ab_violating)) return false;
  return true;
}

std::string opt_bool(const std::optional<bool>& value) {
  if (!value) return "";
  return *value ? "1" : "0";
}

}  // namespace

CodeSpec scan_row_spec(const ScanRow& row) {
  Poset p = make_hierarchical(row.m, row.n);
  std::vector<Mask> ideals;
  if (row.b1 == 0 && row.a2 == 0) {
    ideals = {range_mask(1, row.a1)};
  } else if (row.b1 > 0 && row.b2 == 0) {
    ideals = {range_mask(1, row.m) | range_mask(row.m + 1, row.m + row.b1)};
  } else if (row.b1 == 0 && row.a2 > 0) {
    ideals = {range_mask(1, row.a1),
              range_mask(1, row.inter) |
                  range_mask(row.a1 + 1, row.a1 + row.a2 - row.inter)};
  } else {
    Mask lower = range_mask(1, row.m);
    int base = row.m;
    ideals = {lower | range_mask(base + 1, base + row.b1),
              lower | (range_mask(base + 1, base + row.inter) |
                       range_mask(base + row.b1 + 1,
                                  base + row.b1 + row.b2 - row.inter))};
  }
  return CodeSpec{p, IdealFamily(p, ideals), row.kind};
}

std::vector<ScanRow> run_scan(const ScanOptions& options) {
  if (options.n_max < 1 || options.n_max > kMaxEnumeration) {
    throw std::invalid_argument("scan: n_max out of range");
  }
  std::vector<CodeKind> kinds;
  if (options.kind) {
    kinds = {*options.kind};
  } else {
    kinds = {CodeKind::DefiningSet, CodeKind::BooleanFunction};
  }

  std::vector<ScanRow> shapes;
  for (int n = 1; n <= options.n_max; ++n) {
    for (CodeKind kind : kinds) {
      for (int a = 1; a <= n; ++a) {
        if (kind == CodeKind::DefiningSet && a == n) continue;
        ScanRow row;
        row.m = a;
        row.n = n;
        row.a1 = a;
        row.kind = kind;
        shapes.push_back(row);
      }
      for (int m = 1; m < n; ++m) {
        for (int b = 1; b <= n - m; ++b) {
          ScanRow row;
          row.m = m;
          row.n = n;
          row.a1 = m;
          row.b1 = b;
          row.kind = kind;
          shapes.push_back(row);
        }
      }
      for (int a1 = 1; a1 <= n; ++a1) {
        for (int a2 = 1; a2 <= a1; ++a2) {
          for (int a12 = 0; a12 < a2; ++a12) {
            int un = a1 + a2 - a12;
            if (un > n) continue;
            ScanRow row;
            row.m = un;
            row.n = n;
            row.a1 = a1;
            row.a2 = a2;
            row.inter = a12;
            row.kind = kind;
            shapes.push_back(row);
          }
        }
      }
      for (int m = 1; m <= n - 2; ++m) {
        for (int b1 = 1; b1 <= n - m; ++b1) {
          for (int b2 = 1; b2 <= b1; ++b2) {
            for (int b12 = 0; b12 < b2; ++b12) {
              if (b1 + b2 - b12 > n - m) continue;
              ScanRow row;
              row.m = m;
              row.n = n;
              row.a1 = m;
              row.b1 = b1;
              row.a2 = m;
              row.b2 = b2;
              row.inter = b12;
              row.kind = kind;
              shapes.push_back(row);
            }
          }
        }
      }
    }
  }

  std::vector<ScanRow> out;
  for (ScanRow& row : shapes) {
    CodeSpec spec = scan_row_spec(row);
    CodeReport report = analytic_code(spec);
    row.length = report.length;
    row.k = report.dimension;
    row.d = report.w_min;
    if (spec.poset.size() <= oracle_cap()) {
      std::vector<BitVec> words = oracle_codewords(spec);
      if (options.oracle_crosscheck) {
        CodeReport from_oracle = oracle_code(spec);
        if (from_oracle.length != report.length ||
            from_oracle.dimension != report.dimension ||
            !(from_oracle.distribution == report.distribution)) {
          throw std::logic_error("scan: analytic report disagrees with the oracle");
        }
      }
      Certificate cert = certify(report, words);
      row.is_griesmer = cert.is_griesmer;
      row.griesmer_optimal = cert.griesmer_distance_optimal;
      row.minimal = cert.minimal_exhaustive;
      row.ab_violating = cert.ab_violating_minimal;
    } else {
      long long gs = griesmer_sum(row.k, row.d);
      row.is_griesmer = (row.length == gs);
      row.griesmer_optimal = griesmer_sum(row.k, row.d + 1) > row.length;
    }
    if (passes(row, options)) out.push_back(row);
  }
  std::sort(out.begin(), out.end(),
            [](const ScanRow& a, const ScanRow& b) { return sort_key(a) < sort_key(b); });
  return out;
}

std::string scan_csv_header() {
  return "m,n,a1,b1,a2,b2,i12,kind,length,k,d,is_griesmer,griesmer_optimal,minimal,"
         "ab_violating";
}

std::string scan_row_csv(const ScanRow& row) {
  std::ostringstream os;
  os << row.m << ',' << row.n << ',' << row.a1 << ',' << row.b1 << ',' << row.a2 << ','
     << row.b2 << ',' << row.inter << ',' << to_string(row.kind) << ',' << row.length
     << ',' << row.k << ',' << row.d << ',' << (row.is_griesmer ? 1 : 0) << ','
     << (row.griesmer_optimal ? 1 : 0) << ',' << opt_bool(row.minimal) << ','
     << opt_bool(row.ab_violating);
  return os.str();
}

}  // namespace posetcodes
