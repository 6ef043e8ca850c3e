#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "posetcodes/closed_form.hpp"
#include "posetcodes/poset.hpp"

namespace posetcodes::verify {

/// One checked fixture. detail carries a short diagnostic when failing.
struct Check {
  std::string fixture;  // group tag, e.g. "ex65", "tables", "thm61"
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Options {
  std::string only;       // run only fixtures with this tag; empty = all
  bool strict = false;    // recorded discrepancies also fail the run
  std::uint64_t seed = 0x5eed5eedULL;
  int random_poset_samples = 200;
  int table_sweep_n_max = 8;
};

struct Report {
  std::vector<Check> checks;
  std::vector<closed_form::Discrepancy> discrepancies;

  bool all_pass(bool strict) const;
};

/// Replays the reference examples and the closed-form tables against the
/// enumeration oracle, runs the classifier sweeps, and collects known
/// published-value discrepancies separately from genuine failures.
Report run(const Options& options);

/// Random poset on [n] from a random DAG (edges oriented along a random
/// permutation, then closed reflexively and transitively).
Poset random_poset(std::mt19937_64& rng, int n);

}  // namespace posetcodes::verify
