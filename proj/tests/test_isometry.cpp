#include <doctest.h>

#include "oracles.hpp"
#include "perfiso/isometry.hpp"
#include "perfiso/sampling.hpp"

using namespace perfiso;

namespace {

SignedIsometry lit(int p, const char* s) { return SignedIsometry::parse(p, s); }

ClassFunction chi(int p, int a) { return ClassFunction::irreducible(p, a); }

// (1/p) sum_n mu(m, -n) beta(n), all in complex floating point.
std::vector<std::complex<double>> numeric_I_mu(const SignedIsometry& iso, const ClassFunction& beta) {
  const int p = iso.prime();
  std::vector<std::complex<double>> out;
  for (int m = 0; m < p; ++m) {
    std::complex<double> s = 0;
    for (int n = 0; n < p; ++n)
      s += oracle::evaluate(oracle::mu_entry_by_products(iso, m, mod_p(-n, p))) * oracle::evaluate(beta[n]);
    out.push_back(s / static_cast<double>(p));
  }
  return out;
}

}  // namespace

TEST_SUITE("isometry") {

TEST_CASE("literal grammar") {
  const auto iso = lit(3, "+2,+0,+1");
  CHECK(iso.image(0) == 2);
  CHECK(iso.image(1) == 0);
  CHECK(iso.image(2) == 1);
  CHECK(iso.literal() == "+2,+0,+1");
  CHECK(lit(3, " -1 , +0,\t-2 ").literal() == "-1,+0,-2");
  CHECK_THROWS_AS(lit(3, "2,+0,+1"), ParseError);
  CHECK_THROWS_AS(lit(3, "+2,+0"), ParseError);
  CHECK_THROWS_AS(lit(3, "+2,+0,+1,+3"), ParseError);
  CHECK_THROWS_AS(lit(3, "+3,+0,+1"), ParseError);
  CHECK_THROWS_AS(lit(3, "+1,+1,+0"), ParseError);
  CHECK_THROWS_AS(lit(3, "+x,+0,+1"), ParseError);
  CHECK_THROWS_AS(lit(3, "+,+0,+1"), ParseError);
  CHECK_THROWS_AS(lit(3, ""), ParseError);
  CHECK_THROWS_AS(lit(4, "+0,+1,+2,+3"), ParseError);
  CHECK_THROWS_AS(SignedIsometry(3, {0, 0, 1}, {1, 1, 1}), Error);
  CHECK_THROWS_AS(SignedIsometry(3, {0, 1, 2}, {1, 0, 1}), Error);
}

TEST_CASE("parse and literal are inverse") {
  Rng rng(3);
  for (int p : {2, 3, 5, 7, 11})
    for (int i = 0; i < 100; ++i) {
      const auto iso = random_isometry(rng, p);
      CHECK(SignedIsometry::parse(p, iso.literal()) == iso);
    }
}

TEST_CASE("compose, invert and signs") {
  Rng rng(5);
  for (int p : {2, 3, 5, 7})
    for (int i = 0; i < 50; ++i) {
      const auto x = random_isometry(rng, p);
      const auto y = random_isometry(rng, p);
      const auto z = random_isometry(rng, p);
      CHECK(compose(x, invert(x)) == SignedIsometry::identity(p));
      CHECK(compose(invert(x), x) == SignedIsometry::identity(p));
      CHECK(compose(compose(x, y), z) == compose(x, compose(y, z)));
      // (x o y)(chi_k) = x(y(chi_k)) as class functions.
      for (int k = 0; k < p; ++k) {
        const auto via_y = y.apply(k);
        ClassFunction expect = y.sign(k) * x.apply(y.image(k));
        CHECK(compose(x, y).apply(k) == expect);
        CHECK(via_y == y.sign(k) * chi(p, y.image(k)));
      }
    }
  const auto l1 = lit(2, "+1,+0");
  CHECK(compose(l1, l1) == SignedIsometry::identity(2));
  const auto negid = -SignedIsometry::identity(5);
  CHECK(compose(negid, negid) == SignedIsometry::identity(5));
  CHECK_THROWS_AS(compose(SignedIsometry::identity(3), SignedIsometry::identity(5)), PrimeMismatch);
}

TEST_CASE("sign_profile") {
  CHECK(sign_profile(SignedIsometry::identity(5)) == SignProfile::all_positive);
  CHECK(sign_profile(-SignedIsometry::identity(5)) == SignProfile::all_negative);
  CHECK(sign_profile(lit(3, "+0,-1,+2")) == SignProfile::mixed);
  CHECK(std::string(to_string(SignProfile::mixed)) == "mixed");
}

TEST_CASE("build_mu examples") {
  for (int p : {2, 3, 5, 7}) {
    const auto mu_id = build_mu(SignedIsometry::identity(p));
    for (int m = 0; m < p; ++m)
      for (int n = 0; n < p; ++n) CHECK(mu_id.at(m, n) == CycInt::integer(p, (m + n) % p == 0 ? p : 0));
    // Multiplication by chi_a scales row m by z^(ma).
    for (int a = 0; a < p; ++a) {
      std::vector<int> image;
      for (int k = 0; k < p; ++k) image.push_back((a + k) % p);
      const auto mu = build_mu(SignedIsometry(p, image, std::vector<int>(static_cast<std::size_t>(p), 1)));
      for (int m = 0; m < p; ++m)
        for (int n = 0; n < p; ++n) CHECK(mu.at(m, n) == mu_id.at(m, n) * zeta_pow(p, static_cast<long long>(m) * a));
    }
  }
  CHECK(build_mu(-SignedIsometry::identity(3)).at(0, 0) == CycInt::integer(3, -3));
}

TEST_CASE("build_mu agrees with the product oracle") {
  for (const auto& iso : oracle::all_isometries(3)) {
    const auto mu = build_mu(iso);
    for (int m = 0; m < 3; ++m)
      for (int n = 0; n < 3; ++n) REQUIRE(mu.at(m, n) == oracle::mu_entry_by_products(iso, m, n));
  }
  Rng rng(17);
  for (int p : {5, 7})
    for (int i = 0; i < 100; ++i) {
      const auto iso = random_isometry(rng, p);
      const auto mu = build_mu(iso);
      for (int m = 0; m < p; ++m)
        for (int n = 0; n < p; ++n) REQUIRE(mu.at(m, n) == oracle::mu_entry_by_products(iso, m, n));
    }
}

TEST_CASE("apply_I_mu") {
  const int p = 5;
  const auto mu_id = build_mu(SignedIsometry::identity(p));
  for (int k = 0; k < p; ++k) CHECK(apply_I_mu(mu_id, chi(p, k)) == chi(p, k));

  const auto iso = lit(p, "-3,+1,+4,-0,+2");
  const auto mu = build_mu(iso);
  for (int k = 0; k < p; ++k) CHECK(apply_I_mu(mu, chi(p, k)) == iso.sign(k) * chi(p, iso.image(k)));

  // The identity mu at p = 3 sends the indicator of g to itself; the
  // numerical oracle sums the definition directly.
  const auto delta = ClassFunction::indicator(3, 1);
  const auto id3 = SignedIsometry::identity(3);
  const auto got = apply_I_mu(build_mu(id3), delta);
  const auto expect = numeric_I_mu(id3, delta);
  for (int m = 0; m < 3; ++m) CHECK(oracle::near(oracle::evaluate(got[m]), expect[static_cast<std::size_t>(m)]));
  CHECK(got == ClassFunction::indicator(3, 1));
}

TEST_CASE("apply_I_mu reports the first non-integral point") {
  const auto mu = build_mu(lit(5, "+0,+2,+1,+3,+4"));
  const auto delta = ClassFunction::indicator(5, 4);
  const auto raw = apply_I_mu_raw(mu, delta);
  CHECK_FALSE(raw.all_integral());
  CHECK(raw.integral[0]);
  CHECK_FALSE(raw.integral[1]);
  try {
    apply_I_mu(mu, delta);
    FAIL("expected NonIntegral");
  } catch (const NonIntegral& e) {
    CHECK(e.point == 1);
  }
}

TEST_CASE("apply_R_mu") {
  const int p = 7;
  const auto mu_id = build_mu(SignedIsometry::identity(p));
  for (int k = 0; k < p; ++k) CHECK(apply_R_mu(mu_id, chi(p, k)) == chi(p, k));
  CHECK(apply_R_mu(build_mu(-SignedIsometry::identity(p)), chi(p, 0)) == -chi(p, 0));

  const auto iso = lit(p, "+3,+5,+0,+2,+4,+6,+1");  // chi_k -> chi_(3+2k)
  const auto mu = build_mu(iso);
  for (int k = 0; k < p; ++k) CHECK(apply_R_mu(mu, iso.apply(k)) == chi(p, k));
}

TEST_CASE("reconstruction and inversion on every isometry of C_3") {
  for (const auto& iso : oracle::all_isometries(3)) {
    const auto mu = build_mu(iso);
    for (int k = 0; k < 3; ++k) {
      CHECK(apply_I_mu(mu, chi(3, k)) == iso.apply(k));
      CHECK(apply_R_mu(mu, apply_I_mu(mu, chi(3, k))) == chi(3, k));
    }
  }
}

TEST_CASE("adjointness on random generalized characters") {
  Rng rng(99);
  for (int p : {3, 5, 7})
    for (int i = 0; i < 100; ++i) {
      const auto mu = build_mu(random_isometry(rng, p));
      const auto alpha = random_generalized_character(rng, p);
      const auto beta = random_generalized_character(rng, p);
      CHECK(inner_product(apply_I_mu(mu, beta), alpha) == inner_product(beta, apply_R_mu(mu, alpha)));
    }
}

TEST_CASE("check_integrality") {
  CHECK_FALSE(check_integrality(build_mu(SignedIsometry::identity(5))));
  CHECK_FALSE(check_integrality(build_mu(lit(5, "+0,+2,+4,+1,+3"))));

  const auto swap = lit(5, "+0,+2,+1,+3,+4");
  const auto expected = oracle::first_non_integral(swap);
  REQUIRE(expected);
  CHECK(*expected == std::pair{1, 1});
  const auto w = check_integrality(build_mu(swap));
  REQUIRE(w);
  CHECK(*w == Witness{1, 1});
}

TEST_CASE("check_separation") {
  CHECK_FALSE(check_separation(build_mu(SignedIsometry::identity(7))));
  CHECK_FALSE(check_separation(build_mu(-lit(5, "+1,+3,+0,+2,+4"))));

  std::vector<CycInt> entries(9, CycInt(3));
  entries[1] = zeta_pow(3, 1);
  const auto w = check_separation(MuMatrix(3, entries));
  REQUIRE(w);
  CHECK(*w == Witness{0, 1});
}

TEST_CASE("is_perfect examples") {
  CHECK(is_perfect(SignedIsometry::identity(5)).perfect());
  for (int a = 0; a < 7; ++a) {
    std::vector<int> image;
    for (int k = 0; k < 7; ++k) image.push_back((a + k) % 7);
    CHECK(is_perfect(SignedIsometry(7, image, std::vector<int>(7, 1))).perfect());
  }
  CHECK(is_perfect(lit(5, "+0,+2,+1,+3,+4")) == Verdict{Verdict::Kind::fails_integrality, {1, 1}});

  // p = 2, signs (+, -): mu = [[0, 2], [2, 0]] is integral but pairs the
  // identity with g.
  const auto mixed = lit(2, "+0,-1");
  CHECK_FALSE(oracle::first_non_integral(mixed));
  CHECK_FALSE(oracle::mu_entry_by_products(mixed, 0, 1).is_zero());
  CHECK(is_perfect(mixed) == Verdict{Verdict::Kind::fails_separation, {0, 1}});
  CHECK(to_string(is_perfect(mixed)) == "fails_separation at (m=0, n=1)");
}

TEST_CASE("lazy is_perfect matches both checks on the full mu") {
  auto reference = [](const SignedIsometry& iso) {
    const auto mu = build_mu(iso);
    if (auto w = check_integrality(mu)) return Verdict{Verdict::Kind::fails_integrality, *w};
    if (auto w = check_separation(mu)) return Verdict{Verdict::Kind::fails_separation, *w};
    return Verdict{};
  };
  for (int p : {2, 3, 5})
    for (const auto& iso : oracle::all_isometries(p)) REQUIRE(is_perfect(iso) == reference(iso));
  Rng rng(123);
  for (int i = 0; i < 2000; ++i) {
    const auto iso = random_isometry(rng, 7);
    REQUIRE(is_perfect(iso) == reference(iso));
  }
}

TEST_CASE("check_perfect_via_spaces") {
  CHECK(check_perfect_via_spaces(SignedIsometry::identity(5)).perfect());
  CHECK(check_perfect_via_spaces(-SignedIsometry::identity(5)).perfect());

  for (int p : {2, 3}) {
    int perfect = 0;
    for (const auto& iso : oracle::all_isometries(p)) {
      const auto a = is_perfect(iso);
      const auto b = check_perfect_via_spaces(iso);
      REQUIRE(a.kind == b.kind);
      perfect += a.perfect();
      // The spaces witness names a genuinely failing entry of mu.
      if (b.kind == Verdict::Kind::fails_integrality)
        CHECK_FALSE(divisible_by_p(oracle::mu_entry_by_products(iso, b.witness.m, b.witness.n)));
      if (b.kind == Verdict::Kind::fails_separation)
        CHECK_FALSE(oracle::mu_entry_by_products(iso, b.witness.m, b.witness.n).is_zero());
    }
    CHECK(perfect == 2 * p * (p - 1));
  }
}

TEST_CASE("perfect isometries have homogeneous sign and unit degrees") {
  for (int p : {2, 3, 5}) {
    for (const auto& iso : oracle::all_isometries(p)) {
      if (!is_perfect(iso).perfect()) continue;
      const auto profile = sign_profile(iso);
      REQUIRE(profile != SignProfile::mixed);
      const int eps = profile == SignProfile::all_positive ? 1 : -1;
      for (int k = 0; k < p; ++k) CHECK(iso.apply(k)[0] == CycInt::integer(p, eps));
      CHECK(build_mu(iso).at(0, 0) == CycInt::integer(p, eps * p));
    }
  }
}

TEST_CASE("sampled checks") {
  for (int p : {3, 5, 7}) {
    const auto s = run_sampled_checks(p, 42, 50);
    CHECK(s.passed());
    CHECK(s.samples == 50);
  }
}

}
