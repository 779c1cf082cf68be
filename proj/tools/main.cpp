#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cpstar/equiv.hpp"
#include "cpstar/moreno.hpp"
#include "cpstar/parse.hpp"
#include "cpstar/reduce.hpp"
#include "cpstar/verify.hpp"
#include "cpstar/wick.hpp"
#include "output.hpp"

using namespace cpstar;
using cli::Format;
using nlohmann::json;

namespace {

struct CliConfig {
  std::string space = "cpn";
  int n = 1;
  std::string mu = "-1/2";
  int order = StarContext::kDefaultOrder;
  std::string d = "1";
  std::uint64_t seed = 42;
  Format format = Format::json;
};

int default_order() {
  if (const char* env = std::getenv("CPSTAR_ORDER")) {
    try {
      int k = std::stoi(env);
      if (k >= 1) return k;
    } catch (const std::exception&) {
    }
    std::cerr << "ignoring CPSTAR_ORDER=" << env << "\n";
  }
  return StarContext::kDefaultOrder;
}

std::vector<Rational> parse_d(const std::string& text) {
  std::vector<Rational> d;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) d.push_back(Rational::parse(item));
  return d;
}

VarSpace make_space(const CliConfig& cfg) {
  if (cfg.space == "dn") return VarSpace::indefinite(cfg.n);
  return VarSpace::euclidean(cfg.n);
}

StarContext make_context(const CliConfig& cfg) {
  return StarContext(make_space(cfg), cfg.order, parse_d(cfg.d), Rational::parse(cfg.mu));
}

void add_context_options(CLI::App* app, CliConfig& cfg) {
  app->add_option("--space", cfg.space, "cpn (Euclidean metric) or dn (signature -,+,...)")
      ->check(CLI::IsMember({"cpn", "dn"}));
  app->add_option("--n", cfg.n, "complex dimension of the reduced space")->check(CLI::Range(1, 7));
  app->add_option("--mu", cfg.mu, "reduction level, a negative rational");
  app->add_option("--order", cfg.order, "truncation order in l (default from CPSTAR_ORDER)")
      ->check(CLI::PositiveNumber);
  app->add_option("--d", cfg.d, "comma-separated d_0,d_1,... of D (d_0 = 1)");
}

void add_format_option(CLI::App* app, CliConfig& cfg) {
  std::map<std::string, Format> names{{"json", Format::json}, {"latex", Format::latex}, {"text", Format::text}};
  app->add_option("--format", cfg.format, "json, latex or text")
      ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
}

int run_mul(const CliConfig& cfg, const std::string& product, const std::string& lhs_text,
            const std::string& rhs_text) {
  StarContext ctx = make_context(cfg);
  LSeries lhs = parse_expr(lhs_text, ctx.space(), ctx.order());
  LSeries rhs = parse_expr(rhs_text, ctx.space(), ctx.order());
  LSeries out = ctx.zero_series();
  if (product == "wick") {
    out = wick_product(lhs, rhs, ctx);
  } else if (product == "tilde") {
    out = tilde_star(lhs, rhs, ctx);
  } else if (ctx.d_trivial()) {
    out = mu_star(lhs, rhs, ctx);
  } else {
    if (!(lhs == ctx.lift(lhs[0])) || !(rhs == ctx.lift(rhs[0])))
      throw std::invalid_argument("the general-D reduced product takes l-independent factors");
    out = mu_star_general(ReducedFn(lhs[0]), ReducedFn(rhs[0]), ctx);
  }
  switch (cfg.format) {
    case Format::json:
      std::cout << json{{"product", product}, {"mu", ctx.mu().str()}, {"series", cli::to_json(out)}}.dump(2)
                << "\n";
      break;
    case Format::latex:
      std::cout << cli::latex(out) << "\n";
      break;
    case Format::text:
      std::cout << format_series(out) << "\n";
      break;
  }
  return 0;
}

int run_table(const std::string& which, int rmax, Format format) {
  const bool a_table = which == "a-coeff";
  // A^(r)_s for 1 <= r <= rmax, 0 <= s <= rmax; c_{r,s} for 1 <= s <= r <= rmax
  auto entry = [&](int r, int s) -> std::optional<Rational> {
    if (a_table) return a_coeff(r, s);
    if (s < 1 || s > r) return std::nullopt;
    return k_coeff(r, s);
  };
  const int s0 = a_table ? 0 : 1;
  if (format == Format::json) {
    json rows = json::array();
    for (int r = 1; r <= rmax; ++r) {
      json row = json::array();
      for (int s = s0; s <= rmax; ++s)
        if (auto v = entry(r, s)) row.push_back(v->str());
      rows.push_back(row);
    }
    std::cout << json{{"table", which}, {"rmax", rmax}, {"first_column", s0}, {"rows", rows}}.dump(2)
              << "\n";
    return 0;
  }
  if (format == Format::latex) {
    std::cout << "\\begin{pmatrix}\n";
    for (int r = 1; r <= rmax; ++r) {
      for (int s = s0; s <= rmax; ++s) {
        auto v = entry(r, s);
        std::cout << (s > s0 ? " & " : "") << (v ? cli::latex(*v) : "0");
      }
      std::cout << (r < rmax ? " \\\\\n" : "\n");
    }
    std::cout << "\\end{pmatrix}\n";
    return 0;
  }
  for (int r = 1; r <= rmax; ++r) {
    std::cout << "r=" << r << ":";
    for (int s = s0; s <= rmax; ++s)
      if (auto v = entry(r, s)) std::cout << " " << v->str();
    std::cout << "\n";
  }
  return 0;
}

int run_moreno(int rmax, Format format) {
  bool ok = true;
  json residuals = json::array();
  std::ostringstream table;
  for (int r = 1; r <= rmax; ++r) {
    UnivarPoly res = moreno_recursion_residual(r);
    ok = ok && res.is_zero();
    // coefficient count of the residual polynomial: 0 when it vanishes
    residuals.push_back({{"r", r}, {"residual", res.str()}, {"nonzero_coefficients", res.degree() + 1}});
    table << "\\tilde{k}_{" << r << "}(\\Delta) &= " << k_poly(r, 1).latex() << " \\\\\n";
  }
  if (format == Format::json) {
    json ks = json::array();
    for (int r = 1; r <= rmax; ++r) ks.push_back(k_poly(r, 1).latex());
    std::cout << json{{"passed", ok}, {"residuals", residuals}, {"k_tilde_latex", ks}}.dump(2) << "\n";
  } else {
    for (const auto& r : residuals)
      std::cout << "r=" << r["r"].get<int>() << " residual " << r["residual"].get<std::string>() << "\n";
    std::cout << "\\begin{align*}\n" << table.str() << "\\end{align*}\n";
  }
  return ok ? 0 : 1;
}

int run_verify(const CliConfig& cfg, const std::string& suite, int rmax, int cases) {
  SuiteConfig sc;
  sc.space = make_space(cfg);
  sc.mu = Rational::parse(cfg.mu);
  sc.order = cfg.order;
  std::vector<Rational> d = parse_d(cfg.d);
  if (d.size() > 1) sc.d = d;
  sc.seed = cfg.seed;
  sc.cases = cases;
  sc.rmax = rmax;
  // validates mu, n and the order
  StarContext(sc.space, sc.order, sc.d, sc.mu);
  Report rep = run_suite(suite, sc);
  if (cfg.format == Format::json) {
    json j = cli::to_json(rep);
    j["suite"] = suite;
    j["seed"] = cfg.seed;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& c : rep.checks()) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.passed) std::cout << ": " << c.detail;
      std::cout << "\n";
    }
  }
  return rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact star products on CP^n and D^n by phase-space reduction"};
  app.require_subcommand(1);
  CliConfig cfg;
  cfg.order = default_order();

  auto* mul = app.add_subcommand("mul", "multiply two expressions, print the l-series");
  add_context_options(mul, cfg);
  add_format_option(mul, cfg);
  std::string lhs, rhs, product = "reduced";
  mul->add_option("--lhs", lhs, "left factor")->required();
  mul->add_option("--rhs", rhs, "right factor")->required();
  mul->add_option("--product", product, "reduced (default), wick or tilde")
      ->check(CLI::IsMember({"reduced", "wick", "tilde"}));

  auto* table = app.add_subcommand("table", "coefficient tables");
  table->require_subcommand(1);
  int rmax = 8;
  for (const char* name : {"a-coeff", "k-coeff"}) {
    auto* sub = table->add_subcommand(name, name[0] == 'a' ? "A^(r)_s" : "c_{r,s}");
    sub->add_option("--rmax", rmax, "largest r")->check(CLI::Range(1, 40));
    add_format_option(sub, cfg);
  }

  auto* moreno = app.add_subcommand("moreno", "recursion residuals and the k_r table");
  moreno->add_option("--rmax", rmax, "largest r")->check(CLI::Range(1, 40));
  add_format_option(moreno, cfg);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  int cases = 10;
  verify->add_option("suite", suite, "all, lemma21, equiv, reduce, moreno or su1n")
      ->check(CLI::IsMember(suite_names()));
  add_context_options(verify, cfg);
  add_format_option(verify, cfg);
  verify->add_option("--seed", cfg.seed, "seed for the random cases");
  verify->add_option("--rmax", rmax, "largest r for table identities")->check(CLI::Range(1, 40));
  verify->add_option("--cases", cases, "random cases per identity")->check(CLI::Range(1, 1000));
  verify->callback([&] {
    if (verify->count("--rmax") == 0) rmax = 10;
    if (verify->count("--order") == 0 && std::getenv("CPSTAR_ORDER") == nullptr) cfg.order = 4;
  });

  CLI11_PARSE(app, argc, argv);

  try {
    if (*mul) return run_mul(cfg, product, lhs, rhs);
    if (*table) {
      for (auto* sub : table->get_subcommands()) return run_table(sub->get_name(), rmax, cfg.format);
    }
    if (*moreno) return run_moreno(rmax, cfg.format == Format::json ? Format::json : Format::latex);
    if (*verify) return run_verify(cfg, suite, rmax, cases);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
