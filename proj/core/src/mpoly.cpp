#include "hql/mpoly.hpp"

#include <algorithm>
#include <cmath>

namespace hql {

namespace {
constexpr double kDropTol = 0.0;  // exact zero only; callers clean up noise
}

MPoly::MPoly(int n, std::initializer_list<std::pair<MultiIndex, cplx>> terms) : MPoly(n) {
  for (const auto& [k, c] : terms) add_term(k, c);
}

MPoly MPoly::constant(int n, cplx c) {
  MPoly p(n);
  p.add_term(MultiIndex(std::vector<int>(static_cast<size_t>(n), 0)), c);
  return p;
}

MPoly MPoly::monomial(int n, MultiIndex k, cplx c) {
  MPoly p(n);
  p.add_term(std::move(k), c);
  return p;
}

MPoly MPoly::variable(int n, int var) {
  std::vector<int> k(static_cast<size_t>(n), 0);
  k[static_cast<size_t>(var)] = 1;
  return monomial(n, MultiIndex(std::move(k)));
}

cplx MPoly::coeff(const MultiIndex& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? cplx(0.0) : it->second;
}

void MPoly::add_term(const MultiIndex& k, cplx c) {
  if (k.size() != n_) throw VariableCountMismatch("MPoly::add_term");
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    if (std::abs(c) > kDropTol) terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (std::abs(it->second) <= kDropTol) terms_.erase(it);
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.total_degree());
  return d;
}

int MPoly::degree_in(int i) const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k[i]);
  return d;
}

bool MPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.total_degree();
  for (const auto& [k, c] : terms_)
    if (k.total_degree() != d) return false;
  return true;
}

int MPoly::homogeneous_degree() const {
  if (terms_.empty()) throw ZeroPolynomial("homogeneous_degree of 0");
  if (!is_homogeneous()) throw NotHomogeneous("homogeneous_degree");
  return terms_.begin()->first.total_degree();
}

MPoly MPoly::operator+(const MPoly& o) const {
  if (n_ != o.n_) throw VariableCountMismatch("MPoly::operator+");
  MPoly out = *this;
  for (const auto& [k, c] : o.terms_) out.add_term(k, c);
  return out;
}

MPoly MPoly::operator-(const MPoly& o) const {
  if (n_ != o.n_) throw VariableCountMismatch("MPoly::operator-");
  MPoly out = *this;
  for (const auto& [k, c] : o.terms_) out.add_term(k, -c);
  return out;
}

MPoly MPoly::operator*(const MPoly& o) const {
  if (n_ != o.n_) throw VariableCountMismatch("MPoly::operator*");
  MPoly out(n_);
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      std::vector<int> k(static_cast<size_t>(n_));
      for (int i = 0; i < n_; ++i) k[static_cast<size_t>(i)] = ka[i] + kb[i];
      out.add_term(MultiIndex(std::move(k)), ca * cb);
    }
  return out;
}

MPoly MPoly::operator*(cplx s) const {
  MPoly out(n_);
  if (std::abs(s) == 0.0) return out;
  for (const auto& [k, c] : terms_) out.add_term(k, c * s);
  return out;
}

MPoly operator*(cplx s, const MPoly& p) { return p * s; }

cplx MPoly::evaluate(const std::vector<cplx>& w) const {
  if (static_cast<int>(w.size()) != n_) throw VariableCountMismatch("MPoly::evaluate");
  cplx acc = 0.0;
  for (const auto& [k, c] : terms_) {
    cplx term = c;
    for (int i = 0; i < n_; ++i) term *= std::pow(w[static_cast<size_t>(i)], k[i]);
    acc += term;
  }
  return acc;
}

double MPoly::hardy_norm() const {
  double s = 0.0;
  for (const auto& [k, c] : terms_) s += std::norm(c);
  return std::sqrt(s);
}

MPoly MPoly::swap_variables() const {
  MPoly out(n_);
  for (const auto& [k, c] : terms_) {
    std::vector<int> e = k.exponents();
    std::reverse(e.begin(), e.end());
    out.add_term(MultiIndex(std::move(e)), c);
  }
  return out;
}

CoeffVector MPoly::on_grid(GridPtr grid) const {
  if (grid->var_count() != n_) throw VariableCountMismatch("MPoly::on_grid");
  CoeffVector v = CoeffVector::zero(grid);
  for (const auto& [k, c] : terms_) {
    const int pos = grid->position_of(k);
    if (pos < 0) throw GridMismatch("MPoly::on_grid: term outside grid");
    v.entries[pos] = c;
  }
  return v;
}

}  // namespace hql
