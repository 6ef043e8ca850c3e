#include "posetcodes/codebuild.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>

namespace posetcodes {

namespace {

constexpr int kDefaultOracleCap = 14;

long long pow2(int e) { return 1LL << e; }

/// H value at u minus the delta term: sum over the defining set of the
/// character values, i.e. 2^n [u = 0] - H(u).
long long defining_set_character_sum(const FamilyHEvaluator& ev, Mask u) {
  long long delta = (u == 0) ? pow2(ev.ground_set_size()) : 0;
  return delta - ev.eval(u);
}

}  // namespace

CodeReport make_report(long long length, WeightDistribution dist, ReportSource source) {
  CodeReport r;
  r.length = length;
  r.dimension = dist.dimension();
  r.w_min = dist.w_min();
  r.w_max = dist.w_max();
  if (r.w_max > length) {
    throw std::invalid_argument("code report: weight exceeds length");
  }
  r.distribution = std::move(dist);
  r.source = source;
  return r;
}

std::vector<Mask> defining_set(const Poset& poset, const IdealFamily& family) {
  if (poset.size() > kMaxEnumeration) {
    throw std::invalid_argument(
        "defining_set: materializing the complement scans 2^n subsets; ground "
        "set too large");
  }
  std::vector<Mask> downsets = family_downsets(poset, family);
  std::vector<Mask> out;
  const Mask limit = full_mask(poset.size());
  std::size_t pos = 0;
  for (Mask x = 0;; ++x) {
    if (pos < downsets.size() && downsets[pos] == x) {
      ++pos;
    } else {
      out.push_back(x);
    }
    if (x == limit) break;
  }
  if (out.empty()) {
    throw std::invalid_argument(
        "defining_set: the family's down-sets cover the whole power set");
  }
  return out;
}

long long analytic_weight_D(const Poset& poset, const IdealFamily& family, Mask u) {
  FamilyHEvaluator ev(poset, family);
  long long d_size = pow2(poset.size()) - ev.collection_size();
  return (d_size - defining_set_character_sum(ev, u)) / 2;
}

long long analytic_weight_f(const Poset& poset, const IdealFamily& family, int s, Mask u) {
  FamilyHEvaluator ev(poset, family);
  long long w = (u == 0) ? 0 : pow2(poset.size() - 1);
  if (s != 0) w += ev.eval(u) - 1;
  return w;
}

int oracle_cap() {
  if (const char* env = std::getenv("POSETCODES_ORACLE_CAP")) {
    int cap = std::atoi(env);
    if (cap >= 1 && cap <= kMaxEnumeration) return cap;
  }
  return kDefaultOracleCap;
}

std::vector<BitVec> oracle_codewords(const CodeSpec& spec) {
  const int n = spec.poset.size();
  if (n > oracle_cap()) {
    throw std::invalid_argument("oracle: ground-set size " + std::to_string(n) +
                                " exceeds the enumeration cap " +
                                std::to_string(oracle_cap()));
  }
  // Coordinate positions, in the fixed ascending order.
  std::vector<Mask> coords;
  std::vector<Mask> downsets = family_downsets(spec.poset, spec.family);
  if (spec.kind == CodeKind::DefiningSet) {
    coords = defining_set(spec.poset, spec.family);
  } else {
    if (downsets.size() <= 1) {
      throw std::invalid_argument(
          "function construction: the down-set collection holds only the empty "
          "set, so the function is identically zero");
    }
    coords.reserve((std::size_t{1} << n) - 1);
    for (Mask x = 1; x < (Mask{1} << n); ++x) coords.push_back(x);
  }
  const std::size_t len = coords.size();

  // Generator rows: one per message bit, plus the function row.
  std::vector<BitVec> rows(n, BitVec(len));
  for (std::size_t j = 0; j < len; ++j) {
    for (int i = 0; i < n; ++i) {
      if (mask_contains(coords[j], i + 1)) rows[i].set(j);
    }
  }
  BitVec f_row(len);
  if (spec.kind == CodeKind::BooleanFunction) {
    for (std::size_t j = 0; j < len; ++j) {
      if (coords[j] != 0 &&
          std::binary_search(downsets.begin(), downsets.end(), coords[j])) {
        f_row.set(j);
      }
    }
  }

  // Every index word by incremental XOR over the lowest set bit.
  std::vector<BitVec> words;
  words.reserve(std::size_t{1} << (n + (spec.kind == CodeKind::BooleanFunction ? 1 : 0)));
  words.push_back(BitVec(len));
  for (Mask u = 1; u < (Mask{1} << n); ++u) {
    int bit = std::countr_zero(u);
    words.push_back(words[u & (u - 1)] ^ rows[bit]);
  }
  if (spec.kind == CodeKind::BooleanFunction) {
    const std::size_t half = words.size();
    for (std::size_t i = 0; i < half; ++i) words.push_back(words[i] ^ f_row);
  }

  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

CodeReport oracle_code(const CodeSpec& spec) {
  std::vector<BitVec> words = oracle_codewords(spec);
  if ((words.size() & (words.size() - 1)) != 0) {
    throw std::logic_error("oracle: distinct codeword count is not a power of two");
  }
  int dimension = std::countr_zero(words.size());
  std::map<long long, long long> entries;
  for (const BitVec& w : words) ++entries[w.weight()];
  return make_report(static_cast<long long>(words[0].size()),
                     WeightDistribution::from_entries(std::move(entries), dimension),
                     ReportSource::Oracle);
}

CodeReport analytic_code(const CodeSpec& spec) {
  const int n = spec.poset.size();
  FamilyHEvaluator ev(spec.poset, spec.family);
  std::map<long long, long long> raw;
  long long length = 0;
  int index_bits = 0;
  if (spec.kind == CodeKind::DefiningSet) {
    length = pow2(n) - ev.collection_size();
    if (length == 0) {
      throw std::invalid_argument(
          "defining_set: the family's down-sets cover the whole power set");
    }
    for (Mask u = 0; u < (Mask{1} << n); ++u) {
      long long w = (length - defining_set_character_sum(ev, u)) / 2;
      ++raw[w];
    }
    index_bits = n;
  } else {
    if (ev.collection_size() <= 1) {
      throw std::invalid_argument(
          "function construction: the down-set collection holds only the empty "
          "set, so the function is identically zero");
    }
    length = pow2(n) - 1;
    for (int s = 0; s <= 1; ++s) {
      for (Mask u = 0; u < (Mask{1} << n); ++u) {
        long long w = (u == 0) ? 0 : pow2(n - 1);
        if (s != 0) w += ev.eval(u) - 1;
        ++raw[w];
      }
    }
    index_bits = n + 1;
  }
  return make_report(length, WeightDistribution::from_raw_histogram(raw, index_bits),
                     ReportSource::Analytic);
}

std::string weight_enumerator_string(const CodeReport& report) {
  return weight_enumerator_string(report.distribution);
}

std::string to_string(CodeKind kind) {
  return kind == CodeKind::DefiningSet ? "D" : "f";
}

std::string to_string(ReportSource source) {
  switch (source) {
    case ReportSource::Analytic: return "analytic";
    case ReportSource::Oracle: return "oracle";
    case ReportSource::ClosedFormTable: return "closed-form-table";
  }
  return "?";
}

}  // namespace posetcodes
