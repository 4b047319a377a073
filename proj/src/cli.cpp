#include "perfiso/cli.hpp"

#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "perfiso/pigroup.hpp"
#include "perfiso/sampling.hpp"

namespace perfiso {

namespace {

struct CliConfig {
  int p = 0;
  std::string format = "text";
  std::string mode = "positive_then_negate";
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string map;
};

bool json(const CliConfig& cfg) { return cfg.format == "json"; }

void emit(std::ostream& out, const nlohmann::ordered_json& j) { out << j.dump(2) << '\n'; }

nlohmann::ordered_json verdict_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(v.kind);
  if (!v.perfect()) {
    j["m"] = v.witness.m;
    j["n"] = v.witness.n;
  }
  return j;
}

int cmd_chartab(const CliConfig& cfg, std::ostream& out) {
  const auto table = char_table(cfg.p);
  if (json(cfg))
    emit(out, table.to_json());
  else
    out << table.to_text();
  return kExitOk;
}

int cmd_mu(const CliConfig& cfg, std::ostream& out) {
  const auto iso = SignedIsometry::parse(cfg.p, cfg.map);
  const auto mu = build_mu(iso);
  if (json(cfg)) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["p"] = cfg.p;
    j["map"] = iso.literal();
    auto rows = nlohmann::ordered_json::array();
    for (int m = 0; m < cfg.p; ++m) {
      auto row = nlohmann::ordered_json::array();
      for (int n = 0; n < cfg.p; ++n) row.push_back(render_symbolic(mu.at(m, n)));
      rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    j["coeffs"] = mu.to_json();
    emit(out, j);
  } else {
    out << mu.to_text();
  }
  return kExitOk;
}

int cmd_check(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto iso = SignedIsometry::parse(cfg.p, cfg.map);
  const auto verdict = is_perfect(iso);
  const auto via_spaces = check_perfect_via_spaces(iso);
  if (verdict.kind != via_spaces.kind) {
    err << "error: checkers disagree: " << to_string(verdict) << " vs " << to_string(via_spaces) << '\n';
    return kExitUsage;
  }
  if (json(cfg)) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["p"] = cfg.p;
    j["map"] = iso.literal();
    j["sign_profile"] = to_string(sign_profile(iso));
    j["verdict"] = verdict_json(verdict);
    j["via_spaces"] = verdict_json(via_spaces);
    emit(out, j);
  } else {
    out << "p = " << cfg.p << '\n'
        << "map = " << iso.literal() << '\n'
        << "sign_profile = " << to_string(sign_profile(iso)) << '\n'
        << "verdict = " << to_string(verdict) << '\n'
        << "via_spaces = " << to_string(via_spaces) << '\n';
  }
  return verdict.perfect() ? kExitOk : kExitNegative;
}

int cmd_decompose(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto iso = SignedIsometry::parse(cfg.p, cfg.map);
  AffineCoords c;
  try {
    c = decompose(iso);
  } catch (const NotPerfect& e) {
    err << "NotPerfect: " << e.what() << '\n';
    return kExitNegative;
  }
  if (json(cfg)) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["p"] = cfg.p;
    j["map"] = iso.literal();
    j["eps"] = c.eps;
    j["a"] = c.a;
    j["u"] = c.u;
    emit(out, j);
  } else {
    out << c.to_string() << '\n';
  }
  return kExitOk;
}

int cmd_enumerate(const CliConfig& cfg, std::ostream& out, bool full) {
  const EnumerationOptions opts{*parse_mode(cfg.mode), cfg.threads};
  const auto report = full ? verify_structure(cfg.p, opts) : enumerate_pi(cfg.p, opts);
  bool ok = report.checks.all_passed();
  if (!full) {
    if (json(cfg))
      emit(out, report.to_json());
    else
      out << report.to_text();
    return ok ? kExitOk : kExitNegative;
  }

  constexpr int kSamples = 100;
  const auto sampled = run_sampled_checks(cfg.p, cfg.seed, kSamples);
  ok = ok && sampled.passed();
  if (json(cfg)) {
    auto j = report.to_json();
    j["sampled"] = sampled.to_json();
    emit(out, j);
  } else {
    out << report.to_text() << "sampled (seed " << sampled.seed << ", " << sampled.samples << " isometries):\n"
        << "  checker_disagreements   " << sampled.checker_disagreements << '\n'
        << "  adjointness_failures    " << sampled.adjointness_failures << '\n'
        << "  inverse_failures        " << sampled.inverse_failures << '\n'
        << (ok ? "all checks pass\n" : "SOME CHECKS FAILED\n");
  }
  return ok ? kExitOk : kExitNegative;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Perfect self-isometries of the block of C_p", "perfiso"};
  app.require_subcommand(1);
  CliConfig cfg;
  app.add_option("-p,--prime", cfg.p, "the prime p")->required();
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--mode", cfg.mode, "enumeration mode")
      ->check(CLI::IsMember({"exhaustive", "positive_then_negate"}));
  app.add_option("--seed", cfg.seed, "seed for sampled checks in verify");
  app.add_option("--threads", cfg.threads, "worker threads for enumeration")->check(CLI::Range(1u, 256u));

  const auto with_map = [&](CLI::App* sub) {
    sub->add_option("--map", cfg.map, "signed isometry literal, e.g. \"+2,+0,+1\"")->required();
    return sub;
  };
  auto* chartab = app.add_subcommand("chartab", "print the character table");
  auto* mu = with_map(app.add_subcommand("mu", "print the generalized character mu_I"));
  auto* check = with_map(app.add_subcommand("check", "decide whether a signed isometry is perfect"));
  auto* enumerate = app.add_subcommand("enumerate", "list all perfect self-isometries");
  auto* decompose_cmd = with_map(app.add_subcommand("decompose", "affine coordinates (eps, a, u) of a perfect isometry"));
  auto* verify = app.add_subcommand("verify", "enumerate and check the full group structure");
  for (auto* sub : {chartab, mu, check, enumerate, decompose_cmd, verify}) sub->fallthrough();

  std::vector<std::string> argv_storage{"perfiso"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (!is_prime(cfg.p)) {
    err << "error: p must be prime (got " << cfg.p << ")\n";
    return kExitUsage;
  }

  try {
    if (chartab->parsed()) return cmd_chartab(cfg, out);
    if (mu->parsed()) return cmd_mu(cfg, out);
    if (check->parsed()) return cmd_check(cfg, out, err);
    if (decompose_cmd->parsed()) return cmd_decompose(cfg, out, err);
    if (enumerate->parsed()) return cmd_enumerate(cfg, out, false);
    if (verify->parsed()) return cmd_enumerate(cfg, out, true);
  } catch (const ParseError& e) {
    err << "error: bad --map: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Infeasible& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace perfiso
