#include "cpstar/sparse_poly.hpp"

#include <stdexcept>

namespace cpstar {

Monomial::Monomial(std::initializer_list<int> exps) {
  if (exps.size() > kMaxVars) throw std::invalid_argument("too many variables");
  std::size_t v = 0;
  for (int e : exps) e_[v++] = static_cast<Exp>(e);
}

bool Monomial::is_one() const {
  for (Exp e : e_)
    if (e != 0) return false;
  return true;
}

int Monomial::degree(std::size_t first, std::size_t count) const {
  int d = 0;
  for (std::size_t v = first; v < first + count; ++v) d += e_[v];
  return d;
}

SparsePoly::SparsePoly(std::size_t nvars) : nvars_(nvars) {
  if (nvars > kMaxVars) throw std::invalid_argument("too many variables");
}

SparsePoly::SparsePoly(std::size_t nvars, const Complex& c) : SparsePoly(nvars) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

SparsePoly SparsePoly::variable(std::size_t nvars, std::size_t v, int power) {
  if (v >= nvars) throw std::out_of_range("variable index out of range");
  Monomial m;
  m[v] = static_cast<Monomial::Exp>(power);
  return monomial(nvars, m, Complex(1));
}

SparsePoly SparsePoly::monomial(std::size_t nvars, const Monomial& m, const Complex& c) {
  SparsePoly p(nvars);
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

bool SparsePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Complex SparsePoly::constant_term() const { return coeff(Monomial{}); }

Complex SparsePoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Complex() : it->second;
}

void SparsePoly::add_term(const Monomial& m, const Complex& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void SparsePoly::check(const SparsePoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomials live in different rings");
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  check(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  check(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Complex& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  a.check(b);
  SparsePoly r(a.nvars_);
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma * mb;
      auto [it, inserted] = r.terms_.try_emplace(m, ca);
      if (inserted) {
        it->second *= cb;
      } else {
        it->second += ca * cb;
      }
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

SparsePoly SparsePoly::pow(unsigned e) const {
  SparsePoly result(nvars_, Complex(1)), base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

SparsePoly SparsePoly::diff(std::size_t v) const {
  if (v >= nvars_) throw std::out_of_range("variable index out of range");
  SparsePoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[v] == 0) continue;
    Monomial dm = m;
    dm[v] = static_cast<Monomial::Exp>(dm[v] - 1);
    r.terms_.emplace_hint(r.terms_.end(), dm, c * Complex(static_cast<long>(m[v])));
  }
  return r;
}

SparsePoly SparsePoly::shifted(const Monomial& s) const {
  SparsePoly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m * s, c);
  return r;
}

SparsePoly SparsePoly::remapped(std::span<const std::size_t> perm, std::size_t new_nvars) const {
  if (perm.size() < nvars_) throw std::invalid_argument("variable map too short");
  SparsePoly r(new_nvars);
  for (const auto& [m, c] : terms_) {
    Monomial out;
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (m[v] == 0) continue;
      if (perm[v] >= new_nvars) throw std::out_of_range("variable map target out of range");
      out[perm[v]] = static_cast<Monomial::Exp>(out[perm[v]] + m[v]);
    }
    r.add_term(out, c);
  }
  return r;
}

SparsePoly SparsePoly::conj_permuted(std::span<const std::size_t> perm) const {
  SparsePoly r = remapped(perm, nvars_);
  for (auto& [m, c] : r.terms_) c = c.conj();
  return r;
}

SparsePoly SparsePoly::substitute(std::size_t v, const SparsePoly& value) const {
  check(value);
  SparsePoly r(nvars_);
  std::map<int, SparsePoly> powers;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    int e = rest[v];
    rest[v] = 0;
    if (e < 0) throw MathError("cannot substitute into a negative power");
    auto it = powers.find(e);
    if (it == powers.end()) it = powers.emplace(e, value.pow(static_cast<unsigned>(e))).first;
    r += it->second.shifted(rest) * c;
  }
  return r;
}

Complex SparsePoly::eval(std::span<const Complex> point) const {
  if (point.size() < nvars_) throw std::invalid_argument("evaluation point too short");
  Complex sum;
  for (const auto& [m, c] : terms_) {
    Complex t = c;
    for (std::size_t v = 0; v < nvars_; ++v)
      if (m[v] != 0) t *= point[v].pow(m[v]);
    sum += t;
  }
  return sum;
}

SparsePoly SparsePoly::transform(
    const std::function<Complex(const Monomial&, const Complex&)>& f) const {
  SparsePoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    Complex v = f(m, c);
    if (!v.is_zero()) r.terms_.emplace_hint(r.terms_.end(), m, std::move(v));
  }
  return r;
}

}  // namespace cpstar
