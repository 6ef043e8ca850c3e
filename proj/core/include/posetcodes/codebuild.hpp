#pragma once

#include <string>
#include <vector>

#include "posetcodes/bitvec.hpp"
#include "posetcodes/distribution.hpp"
#include "posetcodes/genfun.hpp"
#include "posetcodes/poset.hpp"

namespace posetcodes {

/// The two code constructions.
///   DefiningSet:     codeword for message u lists u·x over x in D, where D
///                    is the complement of the family's down-set collection.
///   BooleanFunction: codeword for (s, u) lists s·f(x) + u·x over nonzero x,
///                    where f is the indicator of the down-set collection
///                    minus the empty set.
enum class CodeKind { DefiningSet, BooleanFunction };

enum class ReportSource { Analytic, Oracle, ClosedFormTable };

struct CodeSpec {
  Poset poset;
  IdealFamily family;
  CodeKind kind;
};

struct CodeReport {
  long long length = 0;
  int dimension = 0;
  WeightDistribution distribution;
  long long w_min = 0;
  long long w_max = 0;
  ReportSource source = ReportSource::Analytic;
};

CodeReport make_report(long long length, WeightDistribution dist, ReportSource source);

/// Complement of the family's down-set collection in 2^[n], ascending by
/// mask. Never contains the zero vector. Rejects families whose down-sets
/// cover the whole power set.
std::vector<Mask> defining_set(const Poset& poset, const IdealFamily& family);

/// Codeword weights straight from the generating-function value, exact for
/// every index including zero.
long long analytic_weight_D(const Poset& poset, const IdealFamily& family, Mask u);
long long analytic_weight_f(const Poset& poset, const IdealFamily& family, int s, Mask u);

/// Default bound on the ground-set size for explicit codeword enumeration;
/// the POSETCODES_ORACLE_CAP environment variable overrides it.
int oracle_cap();

/// Every distinct codeword, materialized and sorted ascending (so the zero
/// codeword sits at index 0). Coordinates follow the defining set in
/// ascending mask order, or 1..2^n-1 for the function construction.
std::vector<BitVec> oracle_codewords(const CodeSpec& spec);

/// Ground-truth report by explicit enumeration. Rejects ground sets over
/// the oracle cap.
CodeReport oracle_code(const CodeSpec& spec);

/// Report from the analytic weight formulas; 2^n (or 2^{n+1}) evaluations
/// of the family generating function, no codeword materialization. Agrees
/// with oracle_code exactly wherever both run.
CodeReport analytic_code(const CodeSpec& spec);

std::string weight_enumerator_string(const CodeReport& report);

std::string to_string(CodeKind kind);
std::string to_string(ReportSource source);

}  // namespace posetcodes
