#pragma once

// The perfect isometry group of the block of C_p: its generators, an
// enumeration of all perfect self-isometries, and a checker for the
// structure (C_p x| Aut(C_p)) x <-id>.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "perfiso/isometry.hpp"

namespace perfiso {

/// chi_k -> eps * chi_(a + u k).
struct AffineCoords {
  int eps = 1;
  int a = 0;
  int u = 1;

  auto operator<=>(const AffineCoords&) const = default;
  std::string to_string() const;
};

/// Multiplication by chi_a: chi_k -> chi_(a+k).
SignedIsometry gen_linear(int p, int a);
/// chi_k -> chi_(u k); this is I_sigma for sigma : g -> g^(u^-1).
SignedIsometry gen_aut(int p, int u);
SignedIsometry gen_negid(int p);
/// eps * gen_linear(a) o gen_aut(u).
SignedIsometry from_affine(int p, const AffineCoords& c);

/// (eps, a, u) of a perfect isometry. Throws NotPerfect when the input is
/// not of affine form.
AffineCoords decompose(const SignedIsometry& iso);

/// Coordinates of the product under the semidirect law
/// (e, a, u)(e', a', u') = (e e', a + u a', u u').
AffineCoords affine_product(int p, const AffineCoords& lhs, const AffineCoords& rhs);

enum class EnumerationMode { exhaustive, positive_then_negate };
const char* to_string(EnumerationMode mode);
std::optional<EnumerationMode> parse_mode(std::string_view text);

/// Largest prime each mode accepts.
int max_feasible_prime(EnumerationMode mode);

struct EnumerationOptions {
  EnumerationMode mode = EnumerationMode::positive_then_negate;
  unsigned threads = 1;
};

struct StructureChecks {
  std::optional<bool> homogeneous_sign;
  std::optional<bool> affine_completeness;
  std::optional<bool> semidirect_law;
  std::optional<bool> negid_central;
  std::optional<bool> order_formula;
  std::optional<bool> closure;
  std::optional<bool> normalizes;
  std::optional<bool> trivial_intersection;

  /// True when every check that was run passed.
  bool all_passed() const;
};

struct PIGroupReport {
  int p = 0;
  EnumerationMode mode = EnumerationMode::positive_then_negate;
  std::uint64_t candidates = 0;
  std::uint64_t order = 0;
  /// Affine coordinates of the perfect isometries, sorted by (eps, a, u).
  std::vector<AffineCoords> elements;
  /// Every perfect isometry found, in the same order as `elements`, followed
  /// by any that have no affine form (sorted by literal order).
  std::vector<SignedIsometry> isometries;
  StructureChecks checks;
  std::vector<std::string> failures;

  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

/// Finds every perfect self-isometry of C_p. Exhaustive mode tries all
/// 2^p p! signed bijections; positive_then_negate tries the p! all-positive
/// ones and adjoins negatives. Throws Infeasible above max_feasible_prime.
/// The report does not depend on `threads`.
PIGroupReport enumerate_pi(int p, const EnumerationOptions& options = {});

/// enumerate_pi followed by the group-structure checks.
PIGroupReport verify_structure(int p, const EnumerationOptions& options = {});

}  // namespace perfiso
