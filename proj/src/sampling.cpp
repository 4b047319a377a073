#include "perfiso/sampling.hpp"

#include <algorithm>
#include <numeric>

namespace perfiso {

SignedIsometry random_isometry(Rng& rng, int p) {
  std::vector<int> image(static_cast<std::size_t>(p));
  std::iota(image.begin(), image.end(), 0);
  std::shuffle(image.begin(), image.end(), rng);
  std::vector<int> signs(static_cast<std::size_t>(p));
  std::bernoulli_distribution coin(0.5);
  for (auto& s : signs) s = coin(rng) ? 1 : -1;
  return SignedIsometry(p, std::move(image), std::move(signs));
}

ClassFunction random_generalized_character(Rng& rng, int p, int bound) {
  std::uniform_int_distribution<int> coeff(-bound, bound);
  ClassFunction f(p);
  for (int a = 0; a < p; ++a) {
    const int c = coeff(rng);
    if (c != 0) f += c * ClassFunction::irreducible(p, a);
  }
  return f;
}

nlohmann::ordered_json SampledChecks::to_json() const {
  return {{"seed", seed},
          {"samples", samples},
          {"checker_disagreements", checker_disagreements},
          {"adjointness_failures", adjointness_failures},
          {"inverse_failures", inverse_failures}};
}

SampledChecks run_sampled_checks(int p, std::uint64_t seed, int samples) {
  require_prime(p);
  SampledChecks out;
  out.seed = seed;
  out.samples = samples;
  Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    const auto iso = random_isometry(rng, p);
    if (is_perfect(iso).kind != check_perfect_via_spaces(iso).kind) ++out.checker_disagreements;

    const auto mu = build_mu(iso);
    const auto alpha = random_generalized_character(rng, p);
    const auto beta = random_generalized_character(rng, p);
    if (inner_product(apply_I_mu(mu, beta), alpha) != inner_product(beta, apply_R_mu(mu, alpha)))
      ++out.adjointness_failures;

    for (int k = 0; k < p; ++k) {
      const auto chi = ClassFunction::irreducible(p, k);
      if (apply_R_mu(mu, apply_I_mu(mu, chi)) != chi) {
        ++out.inverse_failures;
        break;
      }
    }
  }
  return out;
}

}  // namespace perfiso
