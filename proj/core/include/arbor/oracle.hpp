#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arbor/treeengine.hpp"

namespace arbor {

/// Aggregate result of one crosscheck scenario: randomized (or
/// exhaustive) experiments on explicit balls compared against the
/// symbolic composition calculus.
struct CrosscheckSummary {
  std::string scenario;
  int trials = 0;
  int matches = 0;
  int skipped = 0;
  int mismatches = 0;
  std::vector<std::string> mismatch_notes;  // first few, for diagnostics

  bool ok() const { return mismatches == 0; }
  std::string line() const;
};

struct CrosscheckOptions {
  int radius = 10;
  int trials = 200;
  std::uint64_t seed = 1;
  int jobs = 1;
};

/// Independent per-trial stream so results do not depend on scheduling.
std::uint64_t trial_seed(std::uint64_t seed, int trial);

/// Random pairs of rotations; the symbolic product type from the bridge
/// between their fixed trees must match the ball classification.
CrosscheckSummary crosscheck_rot_rot(const Code& c, const CrosscheckOptions& opts);

/// Random translation x off-axis rotation; the exact anchored-reading
/// product type must match.
CrosscheckSummary crosscheck_offaxis(const Code& c, const CrosscheckOptions& opts);

/// Random translation x rotation fixing an axis vertex; the observed
/// outcome must lie in the predicted fold-outcome set.
CrosscheckSummary crosscheck_onaxis(const Code& c, const CrosscheckOptions& opts);

struct Lemma39Options {
  int k2_alphabet = 4;
  int k2_max_type_len = 6;
  int k3_alphabet = 3;
  int k3_max_type_len = 5;
};

/// Exhaustive check of the gap-count lower bound L_inf >= N - 4K + 6 on
/// every product of K = 2 and K = 3 rotations in range, plus the
/// occurrence-symmetry shape of two-rotation types and the shape
/// round-trip.
CrosscheckSummary crosscheck_lemma39(const Lemma39Options& opts = {});

}  // namespace arbor
