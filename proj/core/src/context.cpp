#include "cpstar/context.hpp"

#include <stdexcept>

namespace cpstar {

StarContext::StarContext(VarSpace space, int order, std::vector<Rational> d, Rational mu)
    : space_(space), order_(order), d_(std::move(d)), mu_(std::move(mu)) {
  if (order_ < 1) throw std::invalid_argument("truncation order must be >= 1");
  if (d_.empty() || !d_.front().is_one()) throw std::invalid_argument("D series needs d_0 = 1");
  if (mu_.sign() >= 0) throw std::invalid_argument("reduction level mu must be negative");
  while (d_.size() > 1 && d_.back().is_zero()) d_.pop_back();
}

Rational StarContext::d(int r) const {
  if (r < 0 || static_cast<std::size_t>(r) >= d_.size()) return Rational(0);
  return d_[static_cast<std::size_t>(r)];
}

bool StarContext::d_trivial() const { return d_.size() == 1; }

StarContext StarContext::with_order(int order) const { return StarContext(space_, order, d_, mu_); }
StarContext StarContext::with_d(std::vector<Rational> d) const {
  return StarContext(space_, order_, std::move(d), mu_);
}
StarContext StarContext::with_mu(Rational mu) const {
  return StarContext(space_, order_, d_, std::move(mu));
}
StarContext StarContext::with_space(VarSpace space) const {
  return StarContext(space, order_, d_, mu_);
}

}  // namespace cpstar
