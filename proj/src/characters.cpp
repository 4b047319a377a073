#include "perfiso/characters.hpp"

#include <algorithm>
#include <sstream>

namespace perfiso {

ClassFunction::ClassFunction(int p) : p_(p), values_(static_cast<std::size_t>(p), CycInt(p)) {}

ClassFunction::ClassFunction(int p, std::vector<CycInt> values) : p_(p), values_(std::move(values)) {
  require_prime(p);
  if (values_.size() != static_cast<std::size_t>(p))
    throw Error("class function on C_" + std::to_string(p) + " needs " + std::to_string(p) + " values");
  for (const auto& v : values_)
    if (v.prime() != p) throw PrimeMismatch(p, v.prime());
}

ClassFunction ClassFunction::irreducible(int p, int a) {
  ClassFunction f(p);
  for (int b = 0; b < p; ++b) f[b] = zeta_pow(p, static_cast<long long>(a) * b);
  return f;
}

ClassFunction ClassFunction::indicator(int p, int j) {
  ClassFunction f(p);
  f[mod_p(j, p)] = CycInt::integer(p, 1);
  return f;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& rhs) {
  if (p_ != rhs.p_) throw PrimeMismatch(p_, rhs.p_);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += rhs.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(std::int64_t scalar) {
  for (auto& v : values_) v *= scalar;
  return *this;
}

ClassFunction ClassFunction::operator-() const {
  ClassFunction r = *this;
  for (auto& v : r.values_) v = -v;
  return r;
}

CharTable::CharTable(int p) : p_(p) {
  require_prime(p);
  entries_.reserve(static_cast<std::size_t>(p * p));
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) entries_.push_back(zeta_pow(p, static_cast<long long>(a) * b));
}

CharTable char_table(int p) { return CharTable(p); }

ClassFunction CharTable::row(int a) const {
  std::vector<CycInt> vals(entries_.begin() + a * p_, entries_.begin() + (a + 1) * p_);
  return ClassFunction(p_, std::move(vals));
}

std::string CharTable::to_text() const {
  std::vector<std::string> cells;
  for (const auto& e : entries_) cells.push_back(render_symbolic(e));
  return format_grid(cells, p_);
}

std::string format_grid(const std::vector<std::string>& cells, int columns) {
  const auto cols = static_cast<std::size_t>(columns);
  std::vector<std::size_t> width(cols, 0);
  for (std::size_t i = 0; i < cells.size(); ++i) width[i % cols] = std::max(width[i % cols], cells[i].size());
  std::ostringstream os;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto c = i % cols;
    if (c) os << ' ';
    os << std::string(width[c] - cells[i].size(), ' ') << cells[i];
    if (c + 1 == cols) os << '\n';
  }
  return os.str();
}

nlohmann::ordered_json CharTable::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["p"] = p_;
  auto rows = nlohmann::ordered_json::array();
  auto coeff_rows = nlohmann::ordered_json::array();
  for (int a = 0; a < p_; ++a) {
    auto row = nlohmann::ordered_json::array();
    auto crow = nlohmann::ordered_json::array();
    for (int b = 0; b < p_; ++b) {
      const auto& e = (*this)(a, b);
      row.push_back(render_symbolic(e));
      crow.push_back(std::vector<std::int64_t>(e.coeffs().begin(), e.coeffs().end()));
    }
    rows.push_back(std::move(row));
    coeff_rows.push_back(std::move(crow));
  }
  j["entries"] = std::move(rows);
  j["coeffs"] = std::move(coeff_rows);
  return j;
}

CycInt inner_product(const ClassFunction& x, const ClassFunction& y) {
  const int p = x.prime();
  if (p != y.prime()) throw PrimeMismatch(p, y.prime());
  CycInt sum(p);
  for (int b = 0; b < p; ++b) sum += x[b] * y[mod_p(-b, p)];
  auto q = exact_div_p(sum);
  if (!q) throw NonIntegralInnerProduct();
  return *q;
}

int mult_index(int p, int a, int k) { return mod_p(static_cast<long long>(a) + k, p); }

int aut_twist_index(int p, int u, int k) {
  return mod_p(static_cast<long long>(k) * inverse_mod(u, p), p);
}

}  // namespace perfiso
