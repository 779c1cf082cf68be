#include "output.hpp"

#include <sstream>

namespace cpstar::cli {

using nlohmann::json;

json to_json(const LaurentElem& e) {
  json terms = json::array();
  for (const auto& [m, c] : e.numerator().terms()) {
    json exps = json::array();
    for (std::size_t v = 0; v < e.space().nvars(); ++v) exps.push_back(m[v]);
    terms.push_back({{"exponents", exps}, {"coeff", c.str()}});
  }
  json vars = json::array();
  for (std::size_t v = 0; v < e.space().nvars(); ++v) vars.push_back(e.space().var_name(v));
  return {{"variables", vars}, {"terms", terms}, {"x_power", -e.xpow()}, {"text", e.str()}};
}

json to_json(const LSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
  return {{"order", s.order()}, {"coefficients", coeffs}};
}

json to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks()) {
    json j = {{"name", c.name}, {"passed", c.passed}, {"seconds", c.seconds}};
    if (!c.passed) j["residual"] = c.detail;
    checks.push_back(j);
  }
  return {{"passed", r.all_passed()}, {"checks", checks}};
}

std::string latex(const Rational& r) {
  if (r.denominator() == 1) return r.str();
  std::string num = r.numerator().get_str();
  std::string sign;
  if (num.front() == '-') {
    sign = "-";
    num.erase(0, 1);
  }
  return sign + "\\frac{" + num + "}{" + r.denominator().get_str() + "}";
}

namespace {

std::string latex_coeff(const Complex& c, bool bare) {
  if (c.is_real()) {
    if (bare) return latex(c.re());
    if (c.re().is_one()) return "";
    if (c.re() == Rational(-1)) return "-";
    return latex(c.re()) + " ";
  }
  std::string s = "(" + latex(c.re()) + (c.im().sign() < 0 ? "" : "+") + latex(c.im()) + "i)";
  if (c.re().is_zero()) s = (c.im().is_one() ? "" : latex(c.im())) + "i";
  return bare ? s : s + " ";
}

std::string latex_var(const VarSpace& s, std::size_t v) {
  std::string name = s.var_name(v);
  bool bar = name.size() > 1 && name[1] == 'b';
  std::string base(1, name[0]);
  std::string idx = name.substr(bar ? 2 : 1);
  return (bar ? "\\bar{" + base + "}" : base) + "_{" + idx + "}";
}

}  // namespace

std::string latex(const LaurentElem& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : e.numerator().terms()) {
    std::string t = latex_coeff(c, m.is_one());
    for (std::size_t v = 0; v < e.space().nvars(); ++v) {
      if (m[v] == 0) continue;
      t += latex_var(e.space(), v);
      if (m[v] != 1) t += "^{" + std::to_string(m[v]) + "}";
    }
    if (!first && !t.empty() && t.front() == '-') os << " - " << t.substr(1);
    else os << (first ? "" : " + ") << t;
    first = false;
  }
  int p = e.xpow();
  if (p == 0) return os.str();
  if (p < 0) return "(" + os.str() + ") x^{" + std::to_string(-p) + "}";
  return "\\frac{" + os.str() + "}{x" + (p == 1 ? "" : "^{" + std::to_string(p) + "}") + "}";
}

std::string latex(const LSeries& s) {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= s.order(); ++k) {
    if (s[k].is_zero()) continue;
    if (!first) os << " + ";
    os << (k == 0 ? "" : k == 1 ? "\\lambda " : "\\lambda^{" + std::to_string(k) + "} ");
    os << "\\left(" << latex(s[k]) << "\\right)";
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace cpstar::cli
