#include "perfiso/isometry.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace perfiso {

SignedIsometry::SignedIsometry(int p, std::vector<int> image, std::vector<int> signs)
    : p_(p), image_(std::move(image)), sign_(std::move(signs)) {
  require_prime(p);
  const auto n = static_cast<std::size_t>(p);
  if (image_.size() != n || sign_.size() != n)
    throw Error("signed isometry on C_" + std::to_string(p) + " needs " + std::to_string(p) + " entries");
  std::vector<bool> seen(n, false);
  for (auto i : image_) {
    if (i < 0 || i >= p) throw Error("character index " + std::to_string(i) + " out of range");
    if (seen[static_cast<std::size_t>(i)]) throw Error("image is not a bijection (repeated " + std::to_string(i) + ")");
    seen[static_cast<std::size_t>(i)] = true;
  }
  for (auto s : sign_)
    if (s != 1 && s != -1) throw Error("signs must be +1 or -1");
}

SignedIsometry SignedIsometry::identity(int p) {
  std::vector<int> image(static_cast<std::size_t>(p));
  for (int k = 0; k < p; ++k) image[static_cast<std::size_t>(k)] = k;
  return SignedIsometry(p, std::move(image), std::vector<int>(static_cast<std::size_t>(p), 1));
}

SignedIsometry SignedIsometry::parse(int p, std::string_view literal) {
  if (!is_prime(p)) throw ParseError("p must be prime");
  std::string compact;
  for (char c : literal)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);

  std::vector<int> image, signs;
  std::size_t pos = 0;
  while (true) {
    const auto comma = compact.find(',', pos);
    const std::string_view token = std::string_view(compact).substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (token.size() < 2 || (token[0] != '+' && token[0] != '-'))
      throw ParseError("entry " + std::to_string(image.size()) + " must be a signed index like +3 or -0");
    int value = 0;
    const auto* first = token.data() + 1;
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
      throw ParseError("entry " + std::to_string(image.size()) + " is not an integer: '" + std::string(token) + "'");
    if (value < 0 || value >= p)
      throw ParseError("index " + std::to_string(value) + " out of range 0.." + std::to_string(p - 1));
    signs.push_back(token[0] == '+' ? 1 : -1);
    image.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (image.size() != static_cast<std::size_t>(p))
    throw ParseError("expected " + std::to_string(p) + " entries, got " + std::to_string(image.size()));
  std::vector<bool> seen(static_cast<std::size_t>(p), false);
  for (auto i : image) {
    if (seen[static_cast<std::size_t>(i)]) throw ParseError("index " + std::to_string(i) + " appears twice");
    seen[static_cast<std::size_t>(i)] = true;
  }
  return SignedIsometry(p, std::move(image), std::move(signs));
}

std::string SignedIsometry::literal() const {
  std::string s;
  for (int k = 0; k < p_; ++k) {
    if (k) s += ',';
    s += sign(k) > 0 ? '+' : '-';
    s += std::to_string(image(k));
  }
  return s;
}

ClassFunction SignedIsometry::apply(int k) const {
  ClassFunction f = ClassFunction::irreducible(p_, image(k));
  return sign(k) > 0 ? f : -f;
}

SignedIsometry SignedIsometry::operator-() const {
  std::vector<int> s = sign_;
  for (auto& v : s) v = -v;
  return SignedIsometry(p_, image_, std::move(s));
}

SignedIsometry compose(const SignedIsometry& lhs, const SignedIsometry& rhs) {
  const int p = lhs.prime();
  if (p != rhs.prime()) throw PrimeMismatch(p, rhs.prime());
  std::vector<int> image(static_cast<std::size_t>(p)), signs(static_cast<std::size_t>(p));
  for (int k = 0; k < p; ++k) {
    const int mid = rhs.image(k);
    image[static_cast<std::size_t>(k)] = lhs.image(mid);
    signs[static_cast<std::size_t>(k)] = lhs.sign(mid) * rhs.sign(k);
  }
  return SignedIsometry(p, std::move(image), std::move(signs));
}

SignedIsometry invert(const SignedIsometry& iso) {
  const int p = iso.prime();
  std::vector<int> image(static_cast<std::size_t>(p)), signs(static_cast<std::size_t>(p));
  for (int k = 0; k < p; ++k) {
    image[static_cast<std::size_t>(iso.image(k))] = k;
    signs[static_cast<std::size_t>(iso.image(k))] = iso.sign(k);
  }
  return SignedIsometry(p, std::move(image), std::move(signs));
}

SignProfile sign_profile(const SignedIsometry& iso) {
  const auto s = iso.signs();
  if (std::all_of(s.begin(), s.end(), [](int v) { return v > 0; })) return SignProfile::all_positive;
  if (std::all_of(s.begin(), s.end(), [](int v) { return v < 0; })) return SignProfile::all_negative;
  return SignProfile::mixed;
}

const char* to_string(SignProfile profile) {
  switch (profile) {
    case SignProfile::all_positive: return "all_positive";
    case SignProfile::all_negative: return "all_negative";
    case SignProfile::mixed: return "mixed";
  }
  return "?";
}

MuMatrix::MuMatrix(int p, std::vector<CycInt> entries) : p_(p), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(p * p)) throw Error("mu matrix must be p x p");
}

std::string MuMatrix::to_text() const {
  std::vector<std::string> cells;
  for (const auto& e : entries_) cells.push_back(render_symbolic(e));
  return format_grid(cells, p_);
}

nlohmann::ordered_json MuMatrix::to_json() const {
  auto rows = nlohmann::ordered_json::array();
  for (int m = 0; m < p_; ++m) {
    auto row = nlohmann::ordered_json::array();
    for (int n = 0; n < p_; ++n) {
      const auto c = at(m, n).coeffs();
      row.push_back(std::vector<std::int64_t>(c.begin(), c.end()));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

CycInt mu_entry(const SignedIsometry& iso, int m, int n) {
  const int p = iso.prime();
  std::vector<std::int64_t> raw(static_cast<std::size_t>(p), 0);
  for (int k = 0; k < p; ++k)
    raw[static_cast<std::size_t>(mod_p(static_cast<long long>(iso.image(k)) * m + static_cast<long long>(k) * n, p))] += iso.sign(k);
  return CycInt::from_coeffs(p, std::move(raw));
}

MuMatrix build_mu(const SignedIsometry& iso) {
  const int p = iso.prime();
  std::vector<CycInt> entries;
  entries.reserve(static_cast<std::size_t>(p * p));
  for (int m = 0; m < p; ++m)
    for (int n = 0; n < p; ++n) entries.push_back(mu_entry(iso, m, n));
  return MuMatrix(p, std::move(entries));
}

bool RawImage::all_integral() const {
  return std::all_of(integral.begin(), integral.end(), [](bool b) { return b; });
}

namespace {

ClassFunction divide_exact(const RawImage& raw, int p) {
  std::vector<CycInt> values;
  values.reserve(raw.sums.size());
  for (std::size_t i = 0; i < raw.sums.size(); ++i) {
    auto q = exact_div_p(raw.sums[i]);
    if (!q) throw NonIntegral(static_cast<int>(i));
    values.push_back(std::move(*q));
  }
  return ClassFunction(p, std::move(values));
}

}  // namespace

RawImage apply_I_mu_raw(const MuMatrix& mu, const ClassFunction& beta) {
  const int p = mu.prime();
  if (beta.prime() != p) throw PrimeMismatch(p, beta.prime());
  RawImage out;
  for (int m = 0; m < p; ++m) {
    CycInt sum(p);
    for (int n = 0; n < p; ++n) sum += mu.at(m, mod_p(-n, p)) * beta[n];
    out.integral.push_back(divisible_by_p(sum));
    out.sums.push_back(std::move(sum));
  }
  return out;
}

ClassFunction apply_I_mu(const MuMatrix& mu, const ClassFunction& beta) {
  return divide_exact(apply_I_mu_raw(mu, beta), mu.prime());
}

RawImage apply_R_mu_raw(const MuMatrix& mu, const ClassFunction& alpha) {
  const int p = mu.prime();
  if (alpha.prime() != p) throw PrimeMismatch(p, alpha.prime());
  RawImage out;
  for (int n = 0; n < p; ++n) {
    CycInt sum(p);
    for (int m = 0; m < p; ++m) sum += mu.at(mod_p(-m, p), n) * alpha[m];
    out.integral.push_back(divisible_by_p(sum));
    out.sums.push_back(std::move(sum));
  }
  return out;
}

ClassFunction apply_R_mu(const MuMatrix& mu, const ClassFunction& alpha) {
  return divide_exact(apply_R_mu_raw(mu, alpha), mu.prime());
}

std::optional<Witness> check_integrality(const MuMatrix& mu) {
  const int p = mu.prime();
  for (int m = 0; m < p; ++m)
    for (int n = 0; n < p; ++n)
      if (!divisible_by_p(mu.at(m, n))) return Witness{m, n};
  return std::nullopt;
}

std::optional<Witness> check_separation(const MuMatrix& mu) {
  const int p = mu.prime();
  for (int m = 0; m < p; ++m)
    for (int n = 0; n < p; ++n)
      if (p_regular(m) != p_regular(n) && !mu.at(m, n).is_zero()) return Witness{m, n};
  return std::nullopt;
}

const char* to_string(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::perfect: return "perfect";
    case Verdict::Kind::fails_integrality: return "fails_integrality";
    case Verdict::Kind::fails_separation: return "fails_separation";
  }
  return "?";
}

std::string to_string(const Verdict& verdict) {
  std::string s = to_string(verdict.kind);
  if (!verdict.perfect())
    s += " at (m=" + std::to_string(verdict.witness.m) + ", n=" + std::to_string(verdict.witness.n) + ")";
  return s;
}

namespace {

// Lazily evaluates raw (non-canonical) coefficient vectors of mu(g^m, g^n)
// into a reused buffer. Exponents image[k]*m + k*n are advanced
// incrementally, so the inner loop has no division.
class RawMuScanner {
 public:
  RawMuScanner(int p, std::span<const int> image, std::span<const int> signs)
      : p_(p), image_(image), signs_(signs), raw_(buffers().raw), base_(buffers().base), exp_(buffers().exp) {
    const auto n = static_cast<std::size_t>(p);
    raw_.resize(n);
    base_.resize(n);
    exp_.resize(n);
  }

  // Entry (m, 0) followed by (m, 1), ... via next_column().
  void start_row(int m) {
    for (int k = 0; k < p_; ++k) {
      const auto i = static_cast<std::size_t>(k);
      base_[i] = (image_[i] * m) % p_;
      exp_[i] = base_[i];
    }
    fill();
  }

  void next_column() {
    for (int k = 0; k < p_; ++k) {
      auto& e = exp_[static_cast<std::size_t>(k)];
      e += k;
      if (e >= p_) e -= p_;
    }
    fill();
  }

  void entry(int m, int n) {
    for (int k = 0; k < p_; ++k) exp_[static_cast<std::size_t>(k)] = (image_[static_cast<std::size_t>(k)] * m + k * n) % p_;
    fill();
  }

  // Coefficients lie in [-p, p], so pairwise differences are multiples of p
  // only when they are 0, +-p or +-2p.
  bool divisible() const {
    const std::int64_t ref = raw_.back();
    for (auto c : raw_) {
      const std::int64_t d = c - ref;
      if (d != 0 && d != p_ && d != -p_ && d != 2 * p_ && d != -2 * p_) return false;
    }
    return true;
  }

  bool zero() const {
    for (auto c : raw_)
      if (c != raw_.front()) return false;
    return true;
  }

 private:
  void fill() {
    std::fill(raw_.begin(), raw_.end(), 0);
    for (int k = 0; k < p_; ++k)
      raw_[static_cast<std::size_t>(exp_[static_cast<std::size_t>(k)])] += signs_[static_cast<std::size_t>(k)];
  }

  struct Buffers {
    std::vector<std::int64_t> raw;
    std::vector<int> base;
    std::vector<int> exp;
  };
  static Buffers& buffers() {
    thread_local Buffers b;
    return b;
  }

  int p_;
  std::span<const int> image_;
  std::span<const int> signs_;
  std::vector<std::int64_t>& raw_;
  std::vector<int>& base_;
  std::vector<int>& exp_;
};

}  // namespace

Verdict is_perfect(const SignedIsometry& iso) { return is_perfect(iso.prime(), iso.images(), iso.signs()); }

Verdict is_perfect(int p, std::span<const int> image, std::span<const int> signs) {
  RawMuScanner scan(p, image, signs);
  for (int m = 0; m < p; ++m) {
    scan.start_row(m);
    for (int n = 0; n < p; ++n) {
      if (n) scan.next_column();
      if (!scan.divisible()) return {Verdict::Kind::fails_integrality, {m, n}};
    }
  }
  // Only row 0 and column 0 can pair a p-regular with a p-singular element.
  for (int m = 0; m < p; ++m)
    for (int n = 0; n < p; ++n) {
      if (p_regular(m) == p_regular(n)) continue;
      scan.entry(m, n);
      if (!scan.zero()) return {Verdict::Kind::fails_separation, {m, n}};
    }
  return {};
}

Verdict check_perfect_via_spaces(const SignedIsometry& iso) {
  const int p = iso.prime();
  const MuMatrix mu = build_mu(iso);

  // O-valued functions: the indicators delta_(g^j) span CF(G; O) over O.
  for (int j = 0; j < p; ++j) {
    const auto delta = ClassFunction::indicator(p, j);
    const auto forward = apply_I_mu_raw(mu, delta);
    for (int m = 0; m < p; ++m)
      if (!forward.integral[static_cast<std::size_t>(m)])
        return {Verdict::Kind::fails_integrality, {m, mod_p(-j, p)}};
    const auto backward = apply_R_mu_raw(mu, delta);
    for (int n = 0; n < p; ++n)
      if (!backward.integral[static_cast<std::size_t>(n)])
        return {Verdict::Kind::fails_integrality, {mod_p(-j, p), n}};
  }

  // p'-supported functions: only the identity is p-regular, so the
  // subspace is the line through delta_1.
  const auto delta_one = ClassFunction::indicator(p, 0);
  const auto forward = apply_I_mu_raw(mu, delta_one);
  for (int m = 0; m < p; ++m)
    if (!p_regular(m) && !forward.sums[static_cast<std::size_t>(m)].is_zero())
      return {Verdict::Kind::fails_separation, {m, 0}};
  const auto backward = apply_R_mu_raw(mu, delta_one);
  for (int n = 0; n < p; ++n)
    if (!p_regular(n) && !backward.sums[static_cast<std::size_t>(n)].is_zero())
      return {Verdict::Kind::fails_separation, {0, n}};
  return {};
}

}  // namespace perfiso
