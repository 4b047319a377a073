#pragma once

// Test-only oracles. Each one reaches its answer by a route that does not go
// through the code path it is used to check.

#include <boost/rational.hpp>

#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <set>
#include <vector>

#include "perfiso/characters.hpp"
#include "perfiso/cyclotomic.hpp"
#include "perfiso/isometry.hpp"

namespace oracle {

using Q = boost::rational<long long>;

/// Decides x in pO by exact rational linear algebra on raw coefficients c
/// (any representative, not necessarily canonical). Solves
///     p * (y_0, ..., y_(p-2), 0) + t * (1, ..., 1) = c
/// for rationals (y, t) by Gaussian elimination; x/p lies in O exactly when
/// every y_i is an integer, since 1, z, ..., z^(p-2) is a basis of O over
/// Z_p. Returns the reduced-basis coordinates of x/p when integral.
inline std::optional<std::vector<long long>> divide_by_p(int p, const std::vector<std::int64_t>& c) {
  const int n = p;  // unknowns y_0..y_(p-2), t
  std::vector<std::vector<Q>> a(static_cast<std::size_t>(n), std::vector<Q>(static_cast<std::size_t>(n + 1)));
  for (int row = 0; row < n; ++row) {
    if (row < p - 1) a[row][row] = p;
    a[row][n - 1] = 1;
    a[row][n] = c[static_cast<std::size_t>(row)];
  }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (a[pivot][col].numerator() == 0) ++pivot;
    std::swap(a[pivot], a[col]);
    for (int row = 0; row < n; ++row) {
      if (row == col || a[row][col].numerator() == 0) continue;
      const Q f = a[row][col] / a[col][col];
      for (int k = col; k <= n; ++k) a[row][k] -= f * a[col][k];
    }
  }
  std::vector<long long> y;
  for (int i = 0; i < p - 1; ++i) {
    const Q v = a[i][n] / a[i][i];
    if (v.denominator() != 1) return std::nullopt;
    y.push_back(v.numerator());
  }
  return y;
}

/// Numerical value of x at z = exp(2 pi i / p).
inline std::complex<double> evaluate(const perfiso::CycInt& x) {
  const int p = x.prime();
  std::complex<double> sum = 0;
  for (int i = 0; i < p; ++i)
    sum += static_cast<double>(x.coeff(i)) * std::polar(1.0, 2 * std::numbers::pi * i / p);
  return sum;
}

inline bool near(std::complex<double> a, std::complex<double> b, double tol = 1e-9) { return std::abs(a - b) < tol; }

/// mu_I(g^m, g^n) from the defining sum using ring multiplication of table
/// values, rather than exponent bookkeeping.
inline perfiso::CycInt mu_entry_by_products(const perfiso::SignedIsometry& iso, int m, int n) {
  const int p = iso.prime();
  perfiso::CycInt sum(p);
  for (int k = 0; k < p; ++k) {
    auto term = perfiso::zeta_pow(p, static_cast<long long>(iso.image(k)) * m) * perfiso::zeta_pow(p, static_cast<long long>(k) * n);
    sum += iso.sign(k) * term;
  }
  return sum;
}

/// First row-major (m, n) with mu(m, n) not in pO, decided by the rational
/// oracle; nullopt when every entry is integral.
inline std::optional<std::pair<int, int>> first_non_integral(const perfiso::SignedIsometry& iso) {
  const int p = iso.prime();
  for (int m = 0; m < p; ++m)
    for (int n = 0; n < p; ++n) {
      const auto e = mu_entry_by_products(iso, m, n);
      if (!divide_by_p(p, {e.coeffs().begin(), e.coeffs().end()})) return std::pair{m, n};
    }
  return std::nullopt;
}

/// Every signed isometry of C_p, by counting through images and sign masks.
inline std::vector<perfiso::SignedIsometry> all_isometries(int p) {
  std::vector<perfiso::SignedIsometry> out;
  std::vector<int> image(static_cast<std::size_t>(p));
  for (int k = 0; k < p; ++k) image[static_cast<std::size_t>(k)] = k;
  do {
    for (unsigned mask = 0; mask < (1u << p); ++mask) {
      std::vector<int> signs;
      for (int k = 0; k < p; ++k) signs.push_back((mask >> k) & 1u ? -1 : 1);
      out.emplace_back(p, image, signs);
    }
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

/// { eps * (chi_k -> chi_(a+uk)) } written out index by index.
inline std::set<perfiso::SignedIsometry> affine_maps(int p) {
  std::set<perfiso::SignedIsometry> out;
  for (int eps : {1, -1})
    for (int a = 0; a < p; ++a)
      for (int u = 1; u < p; ++u) {
        std::vector<int> image;
        for (int k = 0; k < p; ++k) image.push_back((a + u * k) % p);
        out.emplace(p, image, std::vector<int>(static_cast<std::size_t>(p), eps));
      }
  return out;
}

}  // namespace oracle
