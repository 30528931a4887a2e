#pragma once

// Greedy-vs-exhaustive comparison of the minimal basis total weight.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "edcalc/edcore.hpp"

namespace edcalc::oracle {

struct RandomLimits {
  int max_factors = 8;
  int max_dual_dim = 4;
  Rank max_rank = 9;
};

struct DualCase {
  std::vector<Rank> n;
  gf2::Subspace R;
};

DualCase random_case(std::mt19937_64& rng, const RandomLimits& limits = {});

struct Comparison {
  BigInt greedy;
  BigInt exhaustive;
  bool agree() const { return greedy == exhaustive; }
};

// Throws EnumerationTooLarge when the bases of R exceed `basis_cap`.
Comparison compare(std::span<const Rank> n, const gf2::Subspace& R,
                   std::uint64_t basis_cap);

struct Outcome {
  int trials = 0;
  int agreements = 0;
  // Spec documents (r_generators form) of every disagreement.
  std::vector<std::string> counterexamples;
  std::string text;
  bool all_agree() const { return agreements == trials; }
};

Outcome run_spec(const GroupSpecB& spec, std::uint64_t basis_cap);
Outcome run_random(int trials, std::uint64_t seed, std::uint64_t basis_cap,
                   const RandomLimits& limits = {});

}  // namespace edcalc::oracle
