#pragma once

// Seeded random inputs and the sampled invariant checks run by `verify`.

#include <cstdint>
#include <random>

#include <json.hpp>

#include "perfiso/characters.hpp"
#include "perfiso/isometry.hpp"

namespace perfiso {

using Rng = std::mt19937_64;

/// Uniform over all 2^p p! signed bijections.
SignedIsometry random_isometry(Rng& rng, int p);

/// sum_a c_a chi_a with integer c_a drawn uniformly from [-bound, bound].
ClassFunction random_generalized_character(Rng& rng, int p, int bound = 3);

struct SampledChecks {
  std::uint64_t seed = 0;
  int samples = 0;
  int checker_disagreements = 0;
  int adjointness_failures = 0;
  int inverse_failures = 0;

  bool passed() const { return checker_disagreements == 0 && adjointness_failures == 0 && inverse_failures == 0; }
  nlohmann::ordered_json to_json() const;
};

/// For `samples` random isometries: the two perfectness checkers agree,
/// <I_mu beta, alpha> = <beta, R_mu alpha> on random generalized characters,
/// and R_mu inverts I_mu on every irreducible.
SampledChecks run_sampled_checks(int p, std::uint64_t seed, int samples);

}  // namespace perfiso
