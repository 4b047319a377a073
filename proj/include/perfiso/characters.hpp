#pragma once

// Character theory of the cyclic group C_p = <g>.
//
// The irreducible characters are chi_a(g^b) = z^(ab), a, b in 0..p-1. All
// downstream code refers to characters by their index a; CycInt values are
// only materialised when evaluating inner products or mu.

#include <string>
#include <vector>

#include <json.hpp>

#include "perfiso/cyclotomic.hpp"

namespace perfiso {

/// A Z[z]-valued function on C_p; values[b] is the value at g^b.
class ClassFunction {
 public:
  explicit ClassFunction(int p);
  ClassFunction(int p, std::vector<CycInt> values);

  static ClassFunction irreducible(int p, int a);
  /// The indicator of the single element g^j.
  static ClassFunction indicator(int p, int j);

  int prime() const { return p_; }
  const CycInt& operator[](int b) const { return values_[static_cast<std::size_t>(b)]; }
  CycInt& operator[](int b) { return values_[static_cast<std::size_t>(b)]; }
  const std::vector<CycInt>& values() const { return values_; }

  ClassFunction& operator+=(const ClassFunction& rhs);
  ClassFunction& operator*=(std::int64_t scalar);
  friend ClassFunction operator+(ClassFunction lhs, const ClassFunction& rhs) { return lhs += rhs; }
  friend ClassFunction operator*(std::int64_t s, ClassFunction f) { return f *= s; }
  ClassFunction operator-() const;

  bool operator==(const ClassFunction&) const = default;

 private:
  int p_;
  std::vector<CycInt> values_;
};

class CharTable {
 public:
  int prime() const { return p_; }
  /// chi_a(g^b).
  const CycInt& operator()(int a, int b) const {
    return entries_[static_cast<std::size_t>(a * p_ + b)];
  }
  ClassFunction row(int a) const;

  std::string to_text() const;
  nlohmann::ordered_json to_json() const;

 private:
  friend CharTable char_table(int p);
  explicit CharTable(int p);

  int p_;
  std::vector<CycInt> entries_;
};

CharTable char_table(int p);

/// <x, y> = (1/p) sum_b x(g^b) y(g^-b). Throws NonIntegralInnerProduct when
/// the sum is not divisible by p.
CycInt inner_product(const ClassFunction& x, const ClassFunction& y);

/// Renders a row-major grid of cells, each column right-aligned to its
/// widest cell, one space between columns.
std::string format_grid(const std::vector<std::string>& cells, int columns);

/// chi_a * chi_k = chi_(a+k).
int mult_index(int p, int a, int k);

/// Index of chi_k twisted by sigma_u : g -> g^u, i.e. chi_k^sigma(h) =
/// chi_k(h^(sigma^-1)) = chi_(k u^-1)(h).
int aut_twist_index(int p, int u, int k);

/// In C_p only the identity has order prime to p.
constexpr bool p_regular(int b) { return b == 0; }

}  // namespace perfiso
