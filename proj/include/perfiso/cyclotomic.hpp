#pragma once

// Exact arithmetic in Z[z], z a primitive p-th root of unity.
//
// Elements are stored as p integer coefficients on 1, z, ..., z^(p-1).
// Because 1 + z + ... + z^(p-1) = 0 the representation is normalised so the
// last coefficient is zero; two elements are equal iff their canonical
// coefficient vectors are equal. Every coefficient operation is overflow
// checked and throws CoefficientOverflow rather than wrapping.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "perfiso/errors.hpp"

namespace perfiso {

bool is_prime(long long n);

/// Throws InvalidPrime unless p is prime.
void require_prime(long long p);

/// Modular inverse of u mod p; u must be a unit.
int inverse_mod(int u, int p);

/// Non-negative residue of k mod p.
constexpr int mod_p(long long k, int p) {
  long long r = k % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

class CycInt {
 public:
  /// Zero of Z[z_p].
  explicit CycInt(int p);

  /// Builds an element from raw (possibly non-canonical) coefficients; the
  /// input must have exactly p entries.
  static CycInt from_coeffs(int p, std::vector<std::int64_t> raw);
  static CycInt integer(int p, std::int64_t c);

  int prime() const { return p_; }
  std::span<const std::int64_t> coeffs() const { return coeffs_; }
  std::int64_t coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }

  bool is_zero() const;
  /// The value as an ordinary integer, if it lies in Z.
  std::optional<std::int64_t> as_integer() const;
  /// If the value is c * z^k with c != 0 and 1 <= k < p, returns (c, k).
  std::optional<std::pair<std::int64_t, int>> as_root_multiple() const;

  CycInt& operator+=(const CycInt& rhs);
  CycInt& operator-=(const CycInt& rhs);
  CycInt& operator*=(const CycInt& rhs);
  CycInt& operator*=(std::int64_t scalar);

  friend CycInt operator+(CycInt lhs, const CycInt& rhs) { return lhs += rhs; }
  friend CycInt operator-(CycInt lhs, const CycInt& rhs) { return lhs -= rhs; }
  friend CycInt operator*(CycInt lhs, const CycInt& rhs) { return lhs *= rhs; }
  friend CycInt operator*(CycInt lhs, std::int64_t s) { return lhs *= s; }
  friend CycInt operator*(std::int64_t s, CycInt rhs) { return rhs *= s; }
  CycInt operator-() const;

  /// Multiplication by z^k (a rotation of the coefficient vector).
  CycInt times_zeta(long long k) const;

  bool operator==(const CycInt& rhs) const = default;

  /// Debug form "c0 + c1*z + c2*z^2 ..." over canonical coefficients.
  std::string to_string() const;

 private:
  CycInt(int p, std::vector<std::int64_t> coeffs);
  void canonicalize();
  void check_same_prime(const CycInt& rhs) const;

  int p_;
  std::vector<std::int64_t> coeffs_;
};

/// z^(k mod p) in canonical form.
CycInt zeta_pow(int p, long long k);

/// Whether x lies in pO. With c_{p-1} = 0 this is exactly "every
/// coefficient is divisible by p".
bool divisible_by_p(const CycInt& x);

/// x / p when x lies in pO.
std::optional<CycInt> exact_div_p(const CycInt& x);

/// The same test on a raw coefficient vector: all coefficients congruent
/// mod p. Used by the hot loops that never materialise a CycInt.
bool raw_divisible_by_p(std::span<const std::int64_t> raw, int p);

/// Short exact rendering: "0", "-3", "z", "-z^3", "5*z^2", or the canonical
/// coefficient list "[c0,c1,...]" for anything else.
std::string render_symbolic(const CycInt& x);

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
}  // namespace checked

}  // namespace perfiso
