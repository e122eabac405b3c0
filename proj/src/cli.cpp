#include "graev/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "graev/certificates.hpp"
#include "graev/io.hpp"
#include "graev/maps.hpp"
#include "graev/norm.hpp"
#include "graev/suite.hpp"

namespace graev {

namespace {

using io::json;

struct Config {
  std::string space = "interval";
  bool json = false;
  std::uint64_t seed = 7;
  int budget_factors = 2;
  int budget_length = 2;

  std::vector<std::string> words;
  int m = 0;
  std::string certificate;
  std::string c = "1";
  int n = 3;
  std::vector<int> alpha;
  int k = 0;
  std::string partial;
  std::vector<std::string> at;
  std::string select = "all";
};

std::string word_arg(const Config& cfg, std::size_t i) {
  return i < cfg.words.size() ? cfg.words[i] : std::string();
}

int cmd_norm(const Config& cfg, std::ostream& out) {
  const auto s = io::resolve_space(cfg.space);
  const Word w = s.parse(word_arg(cfg, 0));
  const auto r = norm_dp(w, s);
  if (cfg.json) {
    json j = io::matching_to_json(r);
    j["word"] = s.format(reduce(w));
    j["norm"] = to_string(r.value);
    out << j.dump() << "\n";
  } else {
    out << to_string(r.value) << "\n";
  }
  return kExitOk;
}

int cmd_metric(const Config& cfg, std::ostream& out) {
  const auto s = io::resolve_space(cfg.space);
  const Word u = s.parse(word_arg(cfg, 0));
  const Word v = s.parse(word_arg(cfg, 1));
  const Rational d = graev_metric(u, v, s);
  if (cfg.json) {
    out << json{{"u", s.format(u)}, {"v", s.format(v)}, {"distance", to_string(d)}}.dump() << "\n";
  } else {
    out << to_string(d) << "\n";
  }
  return kExitOk;
}

int cmd_decompose(const Config& cfg, std::ostream& out) {
  const auto s = PointedMetricSpace::conjugacy_space(cfg.m);
  const auto d = decompose_conjugates(s.parse(word_arg(cfg, 0)), cfg.m);
  if (!d) {
    out << (cfg.json ? "null" : "NONE") << "\n";
    return kExitNegative;
  }
  out << io::decomposition_to_json(*d).dump() << "\n";
  return kExitOk;
}

int report(const std::optional<std::string>& error, const Config& cfg, std::ostream& out) {
  if (cfg.json) {
    json j{{"result", error ? "FAIL" : "PASS"}};
    if (error) j["reason"] = *error;
    out << j.dump() << "\n";
  } else {
    out << (error ? "FAIL: " + *error : std::string("PASS")) << "\n";
  }
  return error ? kExitNegative : kExitOk;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  const auto s = io::resolve_space(cfg.space);
  const auto cert = io::certificate_from_json(io::load_json(cfg.certificate), s);
  if (const auto* d = std::get_if<ConjugateDecomposition>(&cert)) {
    return report(conjugate_decomposition_error(*d), cfg, out);
  }
  return report(power_certificate_error(std::get<PowerCertificate>(cert), s), cfg, out);
}

int cmd_search(const Config& cfg, std::ostream& out) {
  const auto s = io::resolve_space(cfg.space);
  const Word w = s.parse(word_arg(cfg, 0));
  SearchBudget budget;
  budget.max_factors = cfg.budget_factors;
  budget.max_base_length = cfg.budget_length;
  const auto r = search_power_certificate(w, parse_rational(cfg.c), cfg.n, budget, s);
  if (!r.certificate) {
    if (cfg.json) {
      out << json{{"result", "UNKNOWN"}, {"explored", r.explored}}.dump() << "\n";
    } else {
      out << "UNKNOWN\n";
    }
    return kExitNegative;
  }
  out << io::power_certificate_to_json(*r.certificate, s).dump() << "\n";
  return kExitOk;
}

std::string join(std::span<const int> v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

int cmd_check_sigma(const Config& cfg, std::ostream& out) {
  if (cfg.k > 0) {
    const auto all = enumerate_sigma(cfg.k);
    if (cfg.json) {
      json j{{"k", cfg.k}, {"count", all.size()}, {"matchings", json::array()}};
      for (const auto& a : all) j["matchings"].push_back(std::vector<int>(a.map().begin(), a.map().end()));
      out << j.dump() << "\n";
    } else {
      out << all.size() << "\n";
      for (const auto& a : all) out << join(a.map()) << "\n";
    }
    return kExitOk;
  }
  const bool in = is_sigma(cfg.alpha);
  if (cfg.json) {
    out << json{{"alpha", cfg.alpha}, {"sigma", in}}.dump() << "\n";
  } else {
    out << (in ? "yes" : "no") << "\n";
  }
  return in ? kExitOk : kExitNegative;
}

int cmd_extend_map(const Config& cfg, std::ostream& out) {
  const auto p = io::partial_contraction_from_json(io::load_json(cfg.partial));
  const auto h = extend_partial_contraction(p);
  const auto s = PointedMetricSpace::interval();
  if (cfg.json) {
    json j = io::point_map_to_json(h);
    if (!cfg.at.empty()) {
      j["at"] = json::object();
      for (const auto& t : cfg.at) j["at"][t] = to_string(h.apply(Point::rational(parse_rational(t))).coordinate());
    }
    out << j.dump() << "\n";
    return kExitOk;
  }
  if (cfg.at.empty()) {
    for (const auto& k : h.knots()) out << to_string(k.t) << " -> " << to_string(k.value) << "\n";
  }
  for (const auto& t : cfg.at) {
    const Point image = h.apply(Point::rational(parse_rational(t)));
    out << to_string(parse_rational(t)) << " -> " << s.name_of(image) << "\n";
  }
  return kExitOk;
}

int cmd_suite(const Config& cfg, std::ostream& out) {
  SuiteOptions options;
  options.seed = cfg.seed;
  const auto outcomes = run_suite(cfg.select, options);
  out << format_suite(outcomes);
  const bool ok = std::all_of(outcomes.begin(), outcomes.end(), [](const auto& p) { return p.ok(); });
  return ok ? kExitOk : kExitNegative;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Exact Graev norms on free groups over pointed metric spaces", "graev"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--space", cfg.space, "space file, or interval / lemma32-m<k> / lemma31-m<k>");
  app.add_flag("--json", cfg.json, "JSON output");
  app.add_option("--seed", cfg.seed, "suite seed");
  app.add_option("--budget-factors", cfg.budget_factors, "search: max number of powers")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--budget-length", cfg.budget_length, "search: max base length")
      ->check(CLI::NonNegativeNumber);

  auto* norm = app.add_subcommand("norm", "Graev norm of a word");
  norm->add_option("word", cfg.words)->expected(0, 1);
  auto* metric = app.add_subcommand("metric", "Graev distance N(u v^-1)");
  metric->add_option("words", cfg.words)->expected(2);
  auto* decompose = app.add_subcommand("decompose", "conjugate decomposition over e1..em");
  decompose->add_option("--m", cfg.m)->required()->check(CLI::PositiveNumber);
  decompose->add_option("word", cfg.words)->expected(0, 1);
  auto* verify = app.add_subcommand("verify", "check a certificate (file or inline JSON)");
  verify->add_option("certificate", cfg.certificate)->required();
  auto* search = app.add_subcommand("search", "bounded search for a power certificate");
  search->add_option("--c", cfg.c, "ball radius");
  search->add_option("--n", cfg.n, "odd exponent >= 3");
  search->add_option("word", cfg.words)->expected(0, 1);
  auto* sigma = app.add_subcommand("check-sigma", "test an involution, or list sigma_k with --k");
  sigma->add_option("--k", cfg.k)->check(CLI::Range(1, kMaxBruteForceLength));
  sigma->add_option("alpha", cfg.alpha);
  auto* extend = app.add_subcommand("extend-map", "extend a partial contraction to [0,1]");
  extend->add_option("partial", cfg.partial)->required();
  extend->add_option("--at", cfg.at, "evaluate at these points");
  auto* suite = app.add_subcommand("suite", "seeded property suites");
  suite->add_option("--select", cfg.select, "group name or all");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*norm) return cmd_norm(cfg, out);
    if (*metric) return cmd_metric(cfg, out);
    if (*decompose) return cmd_decompose(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*search) return cmd_search(cfg, out);
    if (*sigma) {
      if (cfg.k == 0 && cfg.alpha.empty()) {
        err << "error: check-sigma needs an involution or --k\n";
        return kExitUsage;
      }
      return cmd_check_sigma(cfg, out);
    }
    if (*extend) return cmd_extend_map(cfg, out);
    if (*suite) return cmd_suite(cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace graev
