#include "perfiso/pigroup.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace perfiso {

std::string AffineCoords::to_string() const {
  return std::string("(") + (eps > 0 ? "+1" : "-1") + ", a=" + std::to_string(a) + ", u=" + std::to_string(u) + ")";
}

SignedIsometry gen_linear(int p, int a) {
  require_prime(p);
  std::vector<int> image(static_cast<std::size_t>(p));
  for (int k = 0; k < p; ++k) image[static_cast<std::size_t>(k)] = mult_index(p, a, k);
  return SignedIsometry(p, std::move(image), std::vector<int>(static_cast<std::size_t>(p), 1));
}

SignedIsometry gen_aut(int p, int u) {
  require_prime(p);
  if (mod_p(u, p) == 0) throw Error("u must be a unit mod " + std::to_string(p));
  // chi_k -> chi_(uk) is the twist by sigma_(u^-1).
  const int sigma = inverse_mod(u, p);
  std::vector<int> image(static_cast<std::size_t>(p));
  for (int k = 0; k < p; ++k) image[static_cast<std::size_t>(k)] = aut_twist_index(p, sigma, k);
  return SignedIsometry(p, std::move(image), std::vector<int>(static_cast<std::size_t>(p), 1));
}

SignedIsometry gen_negid(int p) { return -SignedIsometry::identity(p); }

SignedIsometry from_affine(int p, const AffineCoords& c) {
  auto iso = compose(gen_linear(p, c.a), gen_aut(p, c.u));
  return c.eps > 0 ? iso : -iso;
}

AffineCoords decompose(const SignedIsometry& iso) {
  const int p = iso.prime();
  const auto profile = sign_profile(iso);
  if (profile == SignProfile::mixed) throw NotPerfect("mixed sign profile; not a perfect isometry");
  AffineCoords c;
  c.eps = profile == SignProfile::all_positive ? 1 : -1;
  c.a = iso.image(0);
  c.u = mod_p(iso.image(1) - iso.image(0), p);
  if (c.u == 0 || from_affine(p, c) != iso)
    throw NotPerfect("map " + iso.literal() + " is not of the form chi_k -> eps*chi_(a+uk)");
  return c;
}

AffineCoords affine_product(int p, const AffineCoords& lhs, const AffineCoords& rhs) {
  return {lhs.eps * rhs.eps, mod_p(lhs.a + static_cast<long long>(lhs.u) * rhs.a, p),
          mod_p(static_cast<long long>(lhs.u) * rhs.u, p)};
}

const char* to_string(EnumerationMode mode) {
  return mode == EnumerationMode::exhaustive ? "exhaustive" : "positive_then_negate";
}

std::optional<EnumerationMode> parse_mode(std::string_view text) {
  if (text == "exhaustive") return EnumerationMode::exhaustive;
  if (text == "positive_then_negate") return EnumerationMode::positive_then_negate;
  return std::nullopt;
}

int max_feasible_prime(EnumerationMode mode) {
  return mode == EnumerationMode::exhaustive ? 7 : 11;
}

bool StructureChecks::all_passed() const {
  for (const auto& c : {homogeneous_sign, affine_completeness, semidirect_law, negid_central, order_formula,
                        closure, normalizes, trivial_intersection})
    if (c && !*c) return false;
  return true;
}

namespace {

struct ShardResult {
  std::vector<SignedIsometry> found;
  std::uint64_t candidates = 0;
};

// All permutations with image[0] == first, in lexicographic order.
ShardResult scan_shard(int p, int first, EnumerationMode mode) {
  ShardResult out;
  std::vector<int> image;
  image.push_back(first);
  for (int k = 0; k < p; ++k)
    if (k != first) image.push_back(k);

  const std::vector<int> positive(static_cast<std::size_t>(p), 1);
  std::vector<int> signs(static_cast<std::size_t>(p));
  do {
    if (mode == EnumerationMode::positive_then_negate) {
      ++out.candidates;
      if (is_perfect(p, image, positive).perfect()) {
        SignedIsometry iso(p, image, positive);
        out.found.push_back(-iso);
        out.found.push_back(std::move(iso));
      }
      continue;
    }
    for (unsigned mask = 0; mask < (1u << p); ++mask) {
      for (int k = 0; k < p; ++k) signs[static_cast<std::size_t>(k)] = (mask >> k) & 1u ? -1 : 1;
      ++out.candidates;
      if (is_perfect(p, image, signs).perfect()) out.found.emplace_back(p, image, signs);
    }
  } while (std::next_permutation(image.begin() + 1, image.end()));
  return out;
}

template <class Pred>
bool for_all_pairs(const std::vector<SignedIsometry>& xs, std::vector<std::string>& failures, const char* name,
                   Pred pred) {
  for (const auto& x : xs)
    for (const auto& y : xs)
      if (!pred(x, y)) {
        failures.push_back(std::string(name) + ": " + x.literal() + " with " + y.literal());
        return false;
      }
  return true;
}

}  // namespace

PIGroupReport enumerate_pi(int p, const EnumerationOptions& options) {
  require_prime(p);
  const int bound = max_feasible_prime(options.mode);
  if (p > bound)
    throw Infeasible(std::string(to_string(options.mode)) + " enumeration is limited to p <= " +
                     std::to_string(bound) + " (got p = " + std::to_string(p) + ")");

  std::vector<ShardResult> shards(static_cast<std::size_t>(p));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int s = next++; s < p; s = next++) shards[static_cast<std::size_t>(s)] = scan_shard(p, s, options.mode);
  };
  const unsigned threads = std::clamp(options.threads, 1u, static_cast<unsigned>(p));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  PIGroupReport report;
  report.p = p;
  report.mode = options.mode;
  std::vector<SignedIsometry> found;
  for (auto& s : shards) {
    report.candidates += s.candidates;
    std::move(s.found.begin(), s.found.end(), std::back_inserter(found));
  }
  report.order = found.size();

  std::vector<std::pair<AffineCoords, SignedIsometry>> affine;
  std::vector<SignedIsometry> other;
  bool homogeneous = true;
  for (auto& iso : found) {
    if (sign_profile(iso) == SignProfile::mixed) {
      homogeneous = false;
      report.failures.push_back("homogeneous_sign: mixed-sign perfect isometry " + iso.literal());
    }
    try {
      affine.emplace_back(decompose(iso), iso);
    } catch (const NotPerfect&) {
      other.push_back(iso);
    }
  }
  std::sort(affine.begin(), affine.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  std::sort(other.begin(), other.end());
  for (auto& [coords, iso] : affine) {
    report.elements.push_back(coords);
    report.isometries.push_back(iso);
  }
  for (auto& iso : other) {
    report.failures.push_back("affine_completeness: perfect isometry " + iso.literal() + " is not affine");
    report.isometries.push_back(iso);
  }

  // Both inclusions: every perfect map is affine, every affine map is found.
  bool complete = other.empty();
  for (int eps : {1, -1})
    for (int a = 0; a < p; ++a)
      for (int u = 1; u < p; ++u) {
        const AffineCoords c{eps, a, u};
        if (!std::binary_search(report.elements.begin(), report.elements.end(), c)) {
          complete = false;
          report.failures.push_back("affine_completeness: " + c.to_string() + " was not found perfect");
        }
      }

  const std::uint64_t expected = 2ull * static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(p - 1);
  report.checks.homogeneous_sign = homogeneous;
  report.checks.affine_completeness = complete;
  report.checks.order_formula = report.order == expected;
  if (!*report.checks.order_formula)
    report.failures.push_back("order_formula: found " + std::to_string(report.order) + ", expected " +
                              std::to_string(expected));
  return report;
}

PIGroupReport verify_structure(int p, const EnumerationOptions& options) {
  PIGroupReport report = enumerate_pi(p, options);
  const auto& group = report.isometries;
  auto& failures = report.failures;
  const std::set<SignedIsometry> members(group.begin(), group.end());
  auto contains = [&](const SignedIsometry& x) { return members.count(x) > 0; };

  // (a) closure under composition and inversion.
  bool closure = for_all_pairs(group, failures, "closure", [&](const auto& x, const auto& y) {
    return contains(compose(x, y));
  });
  for (const auto& x : group)
    if (!contains(invert(x))) {
      closure = false;
      failures.push_back("closure: inverse of " + x.literal() + " missing");
      break;
    }
  report.checks.closure = closure;

  // (b) decompose is a homomorphism onto the affine group law.
  report.checks.semidirect_law = for_all_pairs(group, failures, "semidirect_law", [&](const auto& x, const auto& y) {
    try {
      return decompose(compose(x, y)) == affine_product(p, decompose(x), decompose(y));
    } catch (const NotPerfect&) {
      return false;
    }
  });

  // (c) I_sigma o I_lambda o I_sigma^-1 = I_(lambda^sigma). gen_aut(u) is the
  // twist by sigma_(u^-1), so lambda^sigma = chi_(aut_twist_index(u^-1, a)).
  bool normalizes = true;
  for (int u = 1; u < p && normalizes; ++u)
    for (int a = 0; a < p; ++a) {
      const auto sigma = gen_aut(p, u);
      const auto lhs = compose(compose(sigma, gen_linear(p, a)), invert(sigma));
      const auto rhs = gen_linear(p, aut_twist_index(p, inverse_mod(u, p), a));
      if (lhs != rhs) {
        normalizes = false;
        failures.push_back("normalizes: u=" + std::to_string(u) + " a=" + std::to_string(a));
        break;
      }
    }
  report.checks.normalizes = normalizes;

  // (d) -id is central, of order 2, and a member.
  const auto negid = gen_negid(p);
  bool central = contains(negid) && compose(negid, negid) == SignedIsometry::identity(p) &&
                 negid != SignedIsometry::identity(p);
  for (const auto& x : group)
    if (compose(negid, x) != compose(x, negid)) {
      central = false;
      failures.push_back("negid_central: does not commute with " + x.literal());
      break;
    }
  report.checks.negid_central = central;

  // (e) L and A are embedded injectively and meet only in the identity.
  std::set<SignedIsometry> linear, autos;
  for (int a = 0; a < p; ++a) linear.insert(gen_linear(p, a));
  for (int u = 1; u < p; ++u) autos.insert(gen_aut(p, u));
  std::vector<SignedIsometry> common;
  std::set_intersection(linear.begin(), linear.end(), autos.begin(), autos.end(), std::back_inserter(common));
  const bool trivial = linear.size() == static_cast<std::size_t>(p) && autos.size() == static_cast<std::size_t>(p - 1) &&
                       common.size() == 1 && common.front() == SignedIsometry::identity(p);
  if (!trivial) failures.push_back("trivial_intersection: L and A overlap beyond the identity");
  report.checks.trivial_intersection = trivial;
  return report;
}

namespace {

void put_check(nlohmann::ordered_json& j, const char* name, const std::optional<bool>& v) {
  if (v)
    j[name] = *v;
  else
    j[name] = nullptr;
}

}  // namespace

nlohmann::ordered_json PIGroupReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["p"] = p;
  j["mode"] = to_string(mode);
  j["candidates"] = candidates;
  j["order"] = order;
  auto elems = nlohmann::ordered_json::array();
  for (const auto& e : elements) elems.push_back({{"eps", e.eps}, {"a", e.a}, {"u", e.u}});
  j["elements"] = std::move(elems);
  nlohmann::ordered_json c = nlohmann::ordered_json::object();
  put_check(c, "homogeneous_sign", checks.homogeneous_sign);
  put_check(c, "affine_completeness", checks.affine_completeness);
  put_check(c, "semidirect_law", checks.semidirect_law);
  put_check(c, "negid_central", checks.negid_central);
  put_check(c, "order_formula", checks.order_formula);
  put_check(c, "closure", checks.closure);
  put_check(c, "normalizes", checks.normalizes);
  put_check(c, "trivial_intersection", checks.trivial_intersection);
  j["checks"] = std::move(c);
  j["failures"] = failures;
  return j;
}

std::string PIGroupReport::to_text() const {
  std::ostringstream os;
  os << "p = " << p << '\n'
     << "mode = " << to_string(mode) << '\n'
     << "candidates = " << candidates << '\n'
     << "order = " << order << '\n'
     << "elements (eps a u):\n";
  for (const auto& e : elements) os << "  " << (e.eps > 0 ? "+1" : "-1") << ' ' << e.a << ' ' << e.u << '\n';
  os << "checks:\n";
  const std::pair<const char*, const std::optional<bool>*> rows[] = {
      {"homogeneous_sign", &checks.homogeneous_sign}, {"affine_completeness", &checks.affine_completeness},
      {"semidirect_law", &checks.semidirect_law},     {"negid_central", &checks.negid_central},
      {"order_formula", &checks.order_formula},       {"closure", &checks.closure},
      {"normalizes", &checks.normalizes},             {"trivial_intersection", &checks.trivial_intersection},
  };
  for (const auto& [name, value] : rows) {
    os << "  " << name << std::string(22 - std::string_view(name).size(), ' ')
       << (!*value ? "not run" : (**value ? "pass" : "FAIL")) << '\n';
  }
  for (const auto& f : failures) os << "failure: " << f << '\n';
  return os.str();
}

}  // namespace perfiso
