#pragma once

// Signed isometries of R_K(B) for B the block of C_p, the generalized
// character mu_I attached to one, and the two perfectness criteria.
//
// An isometry is stored as a signed bijection of character indices:
// I(chi_k) = sign[k] * chi_(image[k]).

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "perfiso/characters.hpp"
#include "perfiso/cyclotomic.hpp"

namespace perfiso {

class SignedIsometry {
 public:
  /// Validates that `image` is a permutation of 0..p-1 and every sign is +-1.
  SignedIsometry(int p, std::vector<int> image, std::vector<int> signs);

  static SignedIsometry identity(int p);

  /// Parses the literal form "+2,-0,+1": position k is I(chi_k). Signs are
  /// mandatory, whitespace is ignored. Throws ParseError.
  static SignedIsometry parse(int p, std::string_view literal);
  std::string literal() const;

  int prime() const { return p_; }
  int image(int k) const { return image_[static_cast<std::size_t>(k)]; }
  int sign(int k) const { return sign_[static_cast<std::size_t>(k)]; }
  std::span<const int> images() const { return image_; }
  std::span<const int> signs() const { return sign_; }

  /// I(chi_k) as a class function.
  ClassFunction apply(int k) const;

  SignedIsometry operator-() const;

  bool operator==(const SignedIsometry&) const = default;
  auto operator<=>(const SignedIsometry&) const = default;

 private:
  int p_;
  std::vector<int> image_;
  std::vector<int> sign_;
};

/// (I o J)(chi_k) = I(J(chi_k)).
SignedIsometry compose(const SignedIsometry& lhs, const SignedIsometry& rhs);
SignedIsometry invert(const SignedIsometry& iso);

enum class SignProfile { all_positive, all_negative, mixed };
SignProfile sign_profile(const SignedIsometry& iso);
const char* to_string(SignProfile profile);

/// mu(g^m, g^n), m, n in 0..p-1.
class MuMatrix {
 public:
  MuMatrix(int p, std::vector<CycInt> entries);

  int prime() const { return p_; }
  const CycInt& at(int m, int n) const { return entries_[static_cast<std::size_t>(m * p_ + n)]; }

  std::string to_text() const;
  nlohmann::ordered_json to_json() const;

  bool operator==(const MuMatrix&) const = default;

 private:
  int p_;
  std::vector<CycInt> entries_;
};

/// mu_I(g^m, g^n) = sum_k I(chi_k)(g^m) chi_k(g^n).
CycInt mu_entry(const SignedIsometry& iso, int m, int n);
MuMatrix build_mu(const SignedIsometry& iso);

/// Un-divided sums of I_mu / R_mu plus a per-point flag recording whether
/// the p-division is exact.
struct RawImage {
  std::vector<CycInt> sums;
  std::vector<bool> integral;

  bool all_integral() const;
};

/// I_mu(beta)(g^m) = (1/p) sum_n mu(g^m, g^-n) beta(g^n).
RawImage apply_I_mu_raw(const MuMatrix& mu, const ClassFunction& beta);
/// Throws NonIntegral at the first m whose sum is not in pO.
ClassFunction apply_I_mu(const MuMatrix& mu, const ClassFunction& beta);

/// R_mu(alpha)(g^n) = (1/p) sum_m mu(g^-m, g^n) alpha(g^m).
RawImage apply_R_mu_raw(const MuMatrix& mu, const ClassFunction& alpha);
ClassFunction apply_R_mu(const MuMatrix& mu, const ClassFunction& alpha);

struct Witness {
  int m = 0;
  int n = 0;
  bool operator==(const Witness&) const = default;
};

/// First (row-major) entry with mu(g^m, g^n) / p not in O. Both
/// centralizers have order p since C_p is abelian, so one test covers both
/// halves of the integrality condition.
std::optional<Witness> check_integrality(const MuMatrix& mu);

/// First (row-major) non-zero entry pairing a p-regular element with a
/// p-singular one.
std::optional<Witness> check_separation(const MuMatrix& mu);

struct Verdict {
  enum class Kind { perfect, fails_integrality, fails_separation };

  Kind kind = Kind::perfect;
  Witness witness{};

  bool perfect() const { return kind == Kind::perfect; }
  bool operator==(const Verdict&) const = default;
};

const char* to_string(Verdict::Kind kind);
std::string to_string(const Verdict& verdict);

/// Integrality is scanned first over all of mu in row-major order, then
/// separation; entries are computed lazily so failures exit early.
Verdict is_perfect(const SignedIsometry& iso);

/// is_perfect on a bare (image, sign) pair without building a
/// SignedIsometry. Inputs are not validated; meant for enumeration loops.
Verdict is_perfect(int p, std::span<const int> image, std::span<const int> signs);

/// The same question asked through the class-function spaces: I_mu and R_mu
/// must send O-valued functions (the indicator basis) to O-valued ones, and
/// send the p'-supported line spanned by the identity indicator into itself.
Verdict check_perfect_via_spaces(const SignedIsometry& iso);

}  // namespace perfiso
