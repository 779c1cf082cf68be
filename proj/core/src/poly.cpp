#include "cpstar/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace cpstar {

VarSpace::VarSpace(int n, std::uint32_t negative_mask, bool two_point)
    : n_(n), mask_(negative_mask), two_point_(two_point) {
  if (n < 1) throw std::invalid_argument("VarSpace requires n >= 1");
  if (nvars() > kMaxVars)
    throw std::invalid_argument("VarSpace too large: at most " + std::to_string(kMaxVars) +
                                " variables");
  if (n + 1 < 32 && (mask_ >> (n + 1)) != 0)
    throw std::invalid_argument("metric mask has entries beyond dimension");
}

VarSpace VarSpace::from_signs(std::span<const int> signs, bool two_point) {
  if (signs.size() < 2) throw std::invalid_argument("metric needs n+1 >= 2 signs");
  std::uint32_t mask = 0;
  for (std::size_t k = 0; k < signs.size(); ++k) {
    if (signs[k] == -1) {
      mask |= 1u << k;
    } else if (signs[k] != 1) {
      throw std::invalid_argument("metric entries must be +1 or -1");
    }
  }
  return {static_cast<int>(signs.size()) - 1, mask, two_point};
}

std::string VarSpace::var_name(std::size_t v) const {
  auto d = static_cast<std::size_t>(dim());
  std::size_t block = v / (2 * d);
  std::size_t within = v % (2 * d);
  bool bar = within >= d;
  std::size_t k = bar ? within - d : within;
  std::string base = block == 0 ? "z" : "w";
  return base + (bar ? "b" : "") + std::to_string(k);
}

SparsePoly VarSpace::x_poly(int block) const {
  SparsePoly x(nvars());
  for (int k = 0; k <= n_; ++k) {
    Monomial m;
    m[z(k, block)] = 1;
    m[zb(k, block)] = 1;
    x.add_term(m, Complex(g(k)));
  }
  return x;
}

std::optional<SparsePoly> divide_by_x(const SparsePoly& p, const VarSpace& space, int block) {
  std::size_t nv = space.nvars();
  if (p.nvars() != nv) throw std::invalid_argument("polynomial does not belong to the space");
  SparsePoly quotient(nv);
  if (p.is_zero()) return quotient;
  const int n = space.n();
  const std::size_t lead_z = space.z(n, block), lead_zb = space.zb(n, block);
  const Complex inv_gn(space.g(n));  // g_n = +-1 is its own inverse
  SparsePoly rest(nv);                // x minus its leading term z^n zb^n
  for (int k = 0; k < n; ++k) {
    Monomial m;
    m[space.z(k, block)] = 1;
    m[space.zb(k, block)] = 1;
    rest.add_term(m, Complex(space.g(k)));
  }
  SparsePoly r = p;
  while (true) {
    SparsePoly lowered(nv), kept(nv);
    for (const auto& [m, c] : r.terms()) {
      if (m[lead_z] > 0 && m[lead_zb] > 0) {
        Monomial low = m;
        low[lead_z] = static_cast<Monomial::Exp>(low[lead_z] - 1);
        low[lead_zb] = static_cast<Monomial::Exp>(low[lead_zb] - 1);
        lowered.add_term(low, c * inv_gn);
      } else {
        kept.add_term(m, c);
      }
    }
    if (lowered.is_zero()) break;
    quotient += lowered;
    kept -= lowered * rest;
    r = std::move(kept);
  }
  if (!r.is_zero()) return std::nullopt;
  return quotient;
}

LaurentElem::LaurentElem(const VarSpace& space) : space_(space), num_(space.nvars()) {}

LaurentElem::LaurentElem(const VarSpace& space, const Complex& c)
    : space_(space), num_(space.nvars(), c) {}

LaurentElem::LaurentElem(const VarSpace& space, SparsePoly numerator, int xpow, int wpow)
    : space_(space), num_(std::move(numerator)), xpow_{xpow, wpow} {
  if (num_.nvars() != space_.nvars())
    throw std::invalid_argument("numerator does not belong to the space");
  if (!space_.two_point() && wpow != 0)
    throw std::invalid_argument("second block power on a single-point space");
  for (const auto& [m, c] : num_.terms())
    for (std::size_t v = 0; v < space_.nvars(); ++v)
      if (m[v] < 0) throw MathError("negative power of a non-x variable");
  canonicalize();
}

LaurentElem LaurentElem::z(const VarSpace& s, int k, int block) {
  if (k < 0 || k > s.n() || block >= s.blocks()) throw std::out_of_range("no such variable");
  return {s, SparsePoly::variable(s.nvars(), s.z(k, block))};
}

LaurentElem LaurentElem::zb(const VarSpace& s, int k, int block) {
  if (k < 0 || k > s.n() || block >= s.blocks()) throw std::out_of_range("no such variable");
  return {s, SparsePoly::variable(s.nvars(), s.zb(k, block))};
}

LaurentElem LaurentElem::x(const VarSpace& s, int power, int block) {
  LaurentElem r(s, Complex(1));
  r.xpow_[static_cast<std::size_t>(block)] = -power;
  return r;
}

void LaurentElem::canonicalize() {
  if (num_.is_zero()) {
    xpow_ = {0, 0};
    return;
  }
  for (int b = 0; b < space_.blocks(); ++b) {
    while (auto q = divide_by_x(num_, space_, b)) {
      num_ = std::move(*q);
      --xpow_[static_cast<std::size_t>(b)];
    }
  }
}

void LaurentElem::require_same(const LaurentElem& o) const {
  if (!(space_ == o.space_)) throw std::invalid_argument("Laurent elements in different spaces");
}

LaurentElem LaurentElem::inverse() const {
  if (!is_unit()) throw MathError("element is not a unit of the Laurent class");
  LaurentElem r(space_, num_.constant_term().inverse());
  r.xpow_ = {-xpow_[0], -xpow_[1]};
  return r;
}

LaurentElem& LaurentElem::operator+=(const LaurentElem& o) {
  require_same(o);
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (xpow_ == o.xpow_) {
    num_ += o.num_;
  } else {
    SparsePoly a = num_, b = o.num_;
    for (int blk = 0; blk < space_.blocks(); ++blk) {
      auto i = static_cast<std::size_t>(blk);
      int top = std::max(xpow_[i], o.xpow_[i]);
      SparsePoly xb = space_.x_poly(blk);
      if (top > xpow_[i]) a *= xb.pow(static_cast<unsigned>(top - xpow_[i]));
      if (top > o.xpow_[i]) b *= xb.pow(static_cast<unsigned>(top - o.xpow_[i]));
      xpow_[i] = top;
    }
    num_ = a + b;
  }
  canonicalize();
  return *this;
}

LaurentElem& LaurentElem::operator-=(const LaurentElem& o) { return *this += -o; }

LaurentElem& LaurentElem::operator*=(const LaurentElem& o) {
  require_same(o);
  if (is_zero() || o.is_zero()) {
    num_ = SparsePoly(space_.nvars());
    xpow_ = {0, 0};
    return *this;
  }
  // the block quadratics are prime, so a product of canonical numerators is canonical
  num_ *= o.num_;
  xpow_[0] += o.xpow_[0];
  xpow_[1] += o.xpow_[1];
  return *this;
}

LaurentElem& LaurentElem::operator*=(const Complex& c) {
  num_ *= c;
  if (num_.is_zero()) xpow_ = {0, 0};
  return *this;
}

LaurentElem LaurentElem::operator-() const {
  LaurentElem r = *this;
  r.num_ = -r.num_;
  return r;
}

LaurentElem LaurentElem::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  LaurentElem result(space_, Complex(1)), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

LaurentElem LaurentElem::times_xpow(int k, int block) const {
  LaurentElem r = *this;
  if (!r.is_zero()) r.xpow_[static_cast<std::size_t>(block)] -= k;
  return r;
}

bool LaurentElem::equals_by_cross_multiplication(const LaurentElem& o) const {
  require_same(o);
  SparsePoly a = num_, b = o.num_;
  for (int blk = 0; blk < space_.blocks(); ++blk) {
    auto i = static_cast<std::size_t>(blk);
    // a x^-p == b x^-q  <=>  a x^(top-p) == b x^(top-q)
    int top = std::max(xpow_[i], o.xpow_[i]);
    SparsePoly xb = space_.x_poly(blk);
    if (top > xpow_[i]) a *= xb.pow(static_cast<unsigned>(top - xpow_[i]));
    if (top > o.xpow_[i]) b *= xb.pow(static_cast<unsigned>(top - o.xpow_[i]));
  }
  return a == b;
}

SparsePoly quotient_rule_numerator(const SparsePoly& num, int m, std::size_t var,
                                   const VarSpace& space) {
  if (var >= space.nvars()) throw std::out_of_range("variable not in space");
  auto d = static_cast<std::size_t>(space.dim());
  int block = static_cast<int>(var / (2 * d));
  std::size_t within = var % (2 * d);
  bool bar = within >= d;
  int k = static_cast<int>(bar ? within - d : within);
  // dx/dz^k = g_k zb^k, dx/dzb^k = g_k z^k
  std::size_t partner = bar ? space.z(k, block) : space.zb(k, block);
  SparsePoly out = num.diff(var) * space.x_poly(block);
  if (m != 0) {
    Monomial dx;
    dx[partner] = 1;
    out -= num.shifted(dx) * Complex(static_cast<long>(m) * space.g(k));
  }
  return out;
}

LaurentElem LaurentElem::diff(std::size_t var) const {
  if (var >= space_.nvars()) throw std::out_of_range("variable not in space");
  auto block = static_cast<std::size_t>(var / (2 * static_cast<std::size_t>(space_.dim())));
  int m = xpow_[block];
  if (m == 0) return {space_, num_.diff(var), xpow_[0], xpow_[1]};
  std::array<int, 2> p = xpow_;
  ++p[block];
  return {space_, quotient_rule_numerator(num_, m, var, space_), p[0], p[1]};
}

std::optional<std::pair<int, int>> LaurentElem::bidegree(int block) const {
  if (is_zero()) return std::pair{0, 0};
  auto d = static_cast<std::size_t>(space_.dim());
  std::size_t base = static_cast<std::size_t>(block) * 2 * d;
  int m = xpow_[static_cast<std::size_t>(block)];
  std::optional<std::pair<int, int>> out;
  for (const auto& [mono, c] : num_.terms()) {
    std::pair<int, int> t{mono.degree(base, d) - m, mono.degree(base + d, d) - m};
    if (!out) {
      out = t;
    } else if (*out != t) {
      return std::nullopt;
    }
  }
  return out;
}

bool LaurentElem::is_homogeneous() const {
  for (int b = 0; b < space_.blocks(); ++b) {
    auto bd = bidegree(b);
    if (!bd || *bd != std::pair{0, 0}) return false;
  }
  return true;
}

bool LaurentElem::is_u1_invariant() const {
  auto d = static_cast<std::size_t>(space_.dim());
  for (const auto& [mono, c] : num_.terms())
    for (int b = 0; b < space_.blocks(); ++b) {
      std::size_t base = static_cast<std::size_t>(b) * 2 * d;
      if (mono.degree(base, d) != mono.degree(base + d, d)) return false;
    }
  return true;
}

LaurentElem LaurentElem::euler(EulerOp op) const {
  if (op == EulerOp::Hfull && !space_.two_point())
    throw std::invalid_argument("H requires the two-point space");
  auto d = static_cast<std::size_t>(space_.dim());
  SparsePoly out = num_.transform([&](const Monomial& mono, const Complex& c) -> Complex {
    int a = mono.degree(0, d) - xpow_[0];
    int b = mono.degree(d, d) - xpow_[0];
    switch (op) {
      case EulerOp::E:
        return c * Complex(a);
      case EulerOp::Ebar:
        return c * Complex(b);
      case EulerOp::Y:
        return c * Complex::i() * Complex(a - b);
      case EulerOp::Hfull: {
        int w = mono.degree(2 * d, 2 * d) - 2 * xpow_[1];
        return c * Complex(a + b + w);
      }
    }
    return Complex();
  });
  return {space_, std::move(out), xpow_[0], xpow_[1]};
}

LaurentElem LaurentElem::conj() const {
  std::vector<std::size_t> perm(space_.nvars());
  for (int b = 0; b < space_.blocks(); ++b)
    for (int k = 0; k <= space_.n(); ++k) {
      perm[space_.z(k, b)] = space_.zb(k, b);
      perm[space_.zb(k, b)] = space_.z(k, b);
    }
  LaurentElem r = *this;
  r.num_ = num_.conj_permuted(perm);
  return r;
}

Complex LaurentElem::eval(std::span<const Complex> point) const {
  auto d = static_cast<std::size_t>(space_.dim());
  std::size_t need = d * static_cast<std::size_t>(space_.blocks());
  if (point.size() != need) throw std::invalid_argument("evaluation point has wrong length");
  std::vector<Complex> full(space_.nvars());
  for (int b = 0; b < space_.blocks(); ++b)
    for (int k = 0; k <= space_.n(); ++k) {
      const Complex& zk = point[static_cast<std::size_t>(b) * d + static_cast<std::size_t>(k)];
      full[space_.z(k, b)] = zk;
      full[space_.zb(k, b)] = zk.conj();
    }
  Complex value = num_.eval(full);
  bool vanishes = false;
  for (int b = 0; b < space_.blocks(); ++b) {
    int m = xpow_[static_cast<std::size_t>(b)];
    if (m == 0) continue;
    Complex xv = space_.x_poly(b).eval(full);
    if (xv.is_zero() && m > 0) throw MathError("evaluation on the null set of the quadratic");
    vanishes = vanishes || xv.is_zero();
    if (!vanishes) value *= xv.pow(-m);
  }
  return vanishes ? Complex() : value;
}

LaurentElem LaurentElem::diagonal() const {
  if (!space_.two_point()) throw std::invalid_argument("diagonal needs the two-point space");
  VarSpace single = space_.single();
  std::vector<std::size_t> perm(space_.nvars());
  for (int k = 0; k <= space_.n(); ++k)
    for (int b = 0; b < 2; ++b) {
      perm[space_.z(k, b)] = single.z(k);
      perm[space_.zb(k, b)] = single.zb(k);
    }
  return {single, num_.remapped(perm, single.nvars()), xpow_[0] + xpow_[1]};
}

LaurentElem tensor(const LaurentElem& f, const LaurentElem& g) {
  if (!(f.space() == g.space()) || f.space().two_point())
    throw std::invalid_argument("tensor needs two elements of the same single-point space");
  VarSpace single = f.space();
  VarSpace two = single.doubled();
  std::vector<std::size_t> first(single.nvars()), second(single.nvars());
  for (int k = 0; k <= single.n(); ++k) {
    first[single.z(k)] = two.z(k, 0);
    first[single.zb(k)] = two.zb(k, 0);
    second[single.z(k)] = two.z(k, 1);
    second[single.zb(k)] = two.zb(k, 1);
  }
  SparsePoly num = f.numerator().remapped(first, two.nvars()) *
                   g.numerator().remapped(second, two.nvars());
  return {two, std::move(num), f.xpow(), g.xpow()};
}

std::map<int, LaurentElem> homogeneous_slices(const LaurentElem& f) {
  const VarSpace& s = f.space();
  if (s.two_point()) throw std::invalid_argument("slices are defined on the single-point space");
  if (!f.is_u1_invariant()) throw MathError("element is not U(1)-invariant");
  auto d = static_cast<std::size_t>(s.dim());
  std::map<int, SparsePoly> by_degree;
  for (const auto& [m, c] : f.numerator().terms()) {
    int deg = m.degree(0, d);
    auto it = by_degree.try_emplace(deg, s.nvars()).first;
    it->second.add_term(m, c);
  }
  std::map<int, LaurentElem> out;
  for (auto& [deg, p] : by_degree) out.emplace(deg - f.xpow(), LaurentElem(s, std::move(p), deg));
  return out;
}

namespace {

std::string coeff_prefix(const Complex& c, bool monomial_is_one) {
  if (monomial_is_one) return c.is_real() ? c.str() : "(" + c.str() + ")";
  if (c.is_one()) return "";
  if (c == Complex(-1)) return "-";
  return (c.is_real() ? c.str() : "(" + c.str() + ")") + "*";
}

}  // namespace

std::string LaurentElem::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : num_.terms()) {
    std::ostringstream term;
    term << coeff_prefix(c, m.is_one());
    bool first_factor = true;
    for (std::size_t v = 0; v < space_.nvars(); ++v) {
      if (m[v] == 0) continue;
      if (!first_factor) term << "*";
      term << space_.var_name(v);
      if (m[v] != 1) term << "^" << m[v];
      first_factor = false;
    }
    std::string t = term.str();
    if (first) {
      os << t;
    } else if (t[0] == '-') {
      os << " - " << t.substr(1);
    } else {
      os << " + " << t;
    }
    first = false;
  }
  std::string body = os.str();
  if (xpow_[0] == 0 && xpow_[1] == 0) return body;
  std::string out = num_.size() > 1 ? "(" + body + ")" : body;
  bool bare = num_.is_constant() && xpow_[0] <= 0 && xpow_[1] <= 0;
  if (bare && (body == "1" || body == "-1")) {
    // x^2 rather than 1*x^2
    std::string prod;
    const char* names[2] = {"x", "xw"};
    for (int b = 0; b < 2; ++b) {
      int m = -xpow_[static_cast<std::size_t>(b)];
      if (m == 0) continue;
      if (!prod.empty()) prod += "*";
      prod += names[b];
      if (m != 1) prod += "^" + std::to_string(m);
    }
    return (body == "-1" ? "-" : "") + prod;
  }
  const char* names[2] = {"x", "xw"};
  for (int b = 0; b < 2; ++b) {
    int m = xpow_[static_cast<std::size_t>(b)];
    if (m == 0) continue;
    out += m > 0 ? "/" : "*";
    out += names[b];
    if (std::abs(m) != 1) out += "^" + std::to_string(std::abs(m));
  }
  return out;
}

}  // namespace cpstar
