#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cpstar/context.hpp"

namespace cpstar {

struct CheckResult {
  std::string name;
  bool passed = false;
  /// First nonzero residual (or the failure message) when not passed.
  std::string detail;
  double seconds = 0;
};

class Report {
 public:
  void add(CheckResult r) { checks_.push_back(std::move(r)); }
  void merge(const Report& o) { checks_.insert(checks_.end(), o.checks_.begin(), o.checks_.end()); }
  const std::vector<CheckResult>& checks() const { return checks_; }
  bool all_passed() const;
  double seconds() const;

 private:
  std::vector<CheckResult> checks_;
};

struct SuiteConfig {
  VarSpace space = VarSpace::euclidean(1);
  Rational mu{-1, 2};
  int order = 4;
  /// d_r of the special D used by the general-D checks.
  std::vector<Rational> d{Rational(1), Rational(1)};
  std::uint64_t seed = 42;
  int cases = 10;
  int rmax = 10;
};

/// A^(r)_s by inverting prod_{k=1}^r (1 + k u) as a power series.
Rational a_coeff_by_inversion(int r, int s);
/// A^(r)_s = sum_k c_k (-k)^s from the partial fractions of prod (1 + k u)^-1.
Rational a_coeff_by_partial_fractions(int r, int s);

// Individual identity checks. Each draws its random inputs from `seed`.
Report check_wick_associativity(const VarSpace& s, int cases, int max_degree, std::uint64_t seed);
Report check_commutator(const VarSpace& s, int cases, int order, std::uint64_t seed);
Report check_momentum_commutator(const VarSpace& s, int cases, int order, std::uint64_t seed);
Report check_wick_identities(const VarSpace& s, int cases, int order, std::uint64_t seed);
Report check_symbol(int order, const std::vector<Rational>& d);
Report check_s_action(int order, const std::vector<Rational>& d, int jmax);
Report check_a_table(int rmax);
Report check_radial_equivalence(const StarContext& ctx, int cases, std::uint64_t seed);
Report check_tilde(const StarContext& ctx, int cases, std::uint64_t seed);
Report check_tilde_associativity(const StarContext& ctx, int cases, std::uint64_t seed);
Report check_mu_star(const StarContext& ctx, int cases, std::uint64_t seed);
Report check_k_table(int rmax);
Report check_triangle(const StarContext& ctx, int cases, std::uint64_t seed);
Report check_remarks(const StarContext& ctx, int cases, std::uint64_t seed);
Report check_moreno(int rmax);
Report check_chart(int rmax, int cases, std::uint64_t seed);
Report check_product_formula(int rmax, int nmax, int cases, std::uint64_t seed);

/// Named suites: all, lemma21, equiv, reduce, moreno, su1n.
Report run_suite(const std::string& name, const SuiteConfig& cfg);
const std::vector<std::string>& suite_names();

}  // namespace cpstar
