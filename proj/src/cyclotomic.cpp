#include "perfiso/cyclotomic.hpp"

#include <sstream>
#include <utility>

namespace perfiso {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw CoefficientOverflow();
  return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw CoefficientOverflow();
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw CoefficientOverflow();
  return r;
}

}  // namespace checked

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_prime(long long p) {
  if (!is_prime(p)) throw InvalidPrime(p);
}

int inverse_mod(int u, int p) {
  const int r = mod_p(u, p);
  if (r == 0) throw Error("0 is not a unit mod " + std::to_string(p));
  // Extended Euclid on (r, p).
  long long old_r = r, cur_r = p, old_s = 1, cur_s = 0;
  while (cur_r != 0) {
    const long long q = old_r / cur_r;
    old_r = std::exchange(cur_r, old_r - q * cur_r);
    old_s = std::exchange(cur_s, old_s - q * cur_s);
  }
  if (old_r != 1) throw Error(std::to_string(u) + " is not a unit mod " + std::to_string(p));
  return mod_p(old_s, p);
}

CycInt::CycInt(int p) : p_(p) {
  require_prime(p);
  coeffs_.assign(static_cast<std::size_t>(p), 0);
}

CycInt::CycInt(int p, std::vector<std::int64_t> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  canonicalize();
}

CycInt CycInt::from_coeffs(int p, std::vector<std::int64_t> raw) {
  require_prime(p);
  if (raw.size() != static_cast<std::size_t>(p))
    throw Error("expected " + std::to_string(p) + " coefficients, got " +
                std::to_string(raw.size()));
  return CycInt(p, std::move(raw));
}

CycInt CycInt::integer(int p, std::int64_t c) {
  CycInt x(p);
  x.coeffs_[0] = c;
  return x;
}

void CycInt::canonicalize() {
  const std::int64_t last = coeffs_.back();
  if (last == 0) return;
  for (auto& c : coeffs_) c = checked::sub(c, last);
}

void CycInt::check_same_prime(const CycInt& rhs) const {
  if (p_ != rhs.p_) throw PrimeMismatch(p_, rhs.p_);
}

bool CycInt::is_zero() const {
  for (auto c : coeffs_)
    if (c != 0) return false;
  return true;
}

std::optional<std::int64_t> CycInt::as_integer() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return std::nullopt;
  return coeffs_[0];
}

std::optional<std::pair<std::int64_t, int>> CycInt::as_root_multiple() const {
  const int p = p_;
  if (p == 2) return std::nullopt;  // z = -1 is an integer
  // c * z^k, 1 <= k <= p-2: a single non-zero coefficient at position k.
  int nonzero = 0, where = -1;
  for (int i = 0; i < p; ++i) {
    if (coeffs_[static_cast<std::size_t>(i)] != 0) {
      ++nonzero;
      where = i;
    }
  }
  if (nonzero == 1 && where >= 1) return std::pair{coeffs_[static_cast<std::size_t>(where)], where};
  // c * z^(p-1) canonicalises to (-c, ..., -c, 0).
  const std::int64_t c0 = coeffs_[0];
  if (c0 == 0) return std::nullopt;
  for (int i = 1; i < p - 1; ++i)
    if (coeffs_[static_cast<std::size_t>(i)] != c0) return std::nullopt;
  return std::pair{-c0, p - 1};
}

CycInt& CycInt::operator+=(const CycInt& rhs) {
  check_same_prime(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked::add(coeffs_[i], rhs.coeffs_[i]);
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& rhs) {
  check_same_prime(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked::sub(coeffs_[i], rhs.coeffs_[i]);
  return *this;
}

CycInt& CycInt::operator*=(const CycInt& rhs) {
  check_same_prime(rhs);
  // Exponent convolution mod p, using z^p = 1.
  const auto n = coeffs_.size();
  std::vector<std::int64_t> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      auto& slot = out[(i + j) % n];
      slot = checked::add(slot, checked::mul(coeffs_[i], rhs.coeffs_[j]));
    }
  }
  coeffs_ = std::move(out);
  canonicalize();
  return *this;
}

CycInt& CycInt::operator*=(std::int64_t scalar) {
  for (auto& c : coeffs_) c = checked::mul(c, scalar);
  return *this;
}

CycInt CycInt::operator-() const {
  CycInt r = *this;
  for (auto& c : r.coeffs_) c = checked::sub(0, c);
  return r;
}

CycInt CycInt::times_zeta(long long k) const {
  const int shift = mod_p(k, p_);
  std::vector<std::int64_t> out(coeffs_.size());
  for (int i = 0; i < p_; ++i)
    out[static_cast<std::size_t>(mod_p(i + shift, p_))] = coeffs_[static_cast<std::size_t>(i)];
  return CycInt(p_, std::move(out));
}

std::string CycInt::to_string() const {
  std::ostringstream os;
  os << coeffs_[0];
  for (int i = 1; i < p_; ++i) {
    const auto c = coeffs_[static_cast<std::size_t>(i)];
    os << (c < 0 ? " - " : " + ") << (c < 0 ? -c : c) << "*z";
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

CycInt zeta_pow(int p, long long k) {
  CycInt one = CycInt::integer(p, 1);
  return one.times_zeta(k);
}

bool raw_divisible_by_p(std::span<const std::int64_t> raw, int p) {
  const std::int64_t ref = raw.back();
  for (auto c : raw)
    if ((c - ref) % p != 0) return false;
  return true;
}

bool divisible_by_p(const CycInt& x) {
  const int p = x.prime();
  for (auto c : x.coeffs())
    if (c % p != 0) return false;
  return true;
}

std::optional<CycInt> exact_div_p(const CycInt& x) {
  if (!divisible_by_p(x)) return std::nullopt;
  const int p = x.prime();
  std::vector<std::int64_t> q(x.coeffs().begin(), x.coeffs().end());
  for (auto& c : q) c /= p;
  return CycInt::from_coeffs(p, std::move(q));
}

std::string render_symbolic(const CycInt& x) {
  if (auto n = x.as_integer()) return std::to_string(*n);
  if (auto root = x.as_root_multiple()) {
    const auto [c, k] = *root;
    std::string z = k == 1 ? "z" : "z^" + std::to_string(k);
    if (c == 1) return z;
    if (c == -1) return "-" + z;
    return std::to_string(c) + "*" + z;
  }
  std::string s = "[";
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(x.coeffs()[i]);
  }
  return s + "]";
}

}  // namespace perfiso
