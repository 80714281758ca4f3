#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gsg/matroid.hpp"

namespace gsg {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
  long long checked = 0;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  int switching_trials = 8;
  bool include_extended = true;
};

// The oracle battery behind `verify`: rank theorem, rank axioms, circuit
// taxonomy, closure equivalence, minor commutation, switching invariance.
std::vector<CheckResult> run_verification(const GainSignedGraph& u,
                                          const VerifyOptions& opts = {});

// Random gain signed graph with up to max_n vertices and max_m edges of all
// four kinds, gains in [gain_lo, gain_hi] of the given group.
GainSignedGraph random_instance(std::mt19937_64& rng, int max_n, int max_m,
                                const Group& grp, long long gain_lo,
                                long long gain_hi);

// Every multigraph with 1..max_n vertices and up to max_m edges (links,
// loops, half and loose edges), every sign pattern, every gain tuple from
// [-gain_abs, gain_abs] over Z.  Calls fn once per instance.
void exhaustive_corpus(int max_n, int max_m, int gain_abs,
                       const std::function<void(const GainSignedGraph&)>& fn);

// Sign switcher / gain switcher / reorientation drawn uniformly.
SignSwitcher random_sign_switcher(std::mt19937_64& rng, int n);
GainSwitcher random_gain_switcher(std::mt19937_64& rng, const Group& grp, int n,
                                  long long lo, long long hi);
EdgeSet random_edge_subset(std::mt19937_64& rng, int m);

}  // namespace gsg
