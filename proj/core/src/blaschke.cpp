#include "hql/blaschke.hpp"

#include <algorithm>
#include <cmath>

namespace hql {

Poly1 poly1_mul(const Poly1& a, const Poly1& b) {
  if (a.empty() || b.empty()) return {};
  Poly1 out(a.size() + b.size() - 1, cplx(0.0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

cplx poly1_eval(const Poly1& p, cplx z) {
  cplx acc = 0.0;
  for (size_t j = p.size(); j-- > 0;) acc = acc * z + p[j];
  return acc;
}

Poly1 poly1_derivative(const Poly1& p) {
  if (p.size() <= 1) return {cplx(0.0)};
  Poly1 out(p.size() - 1);
  for (size_t j = 1; j < p.size(); ++j) out[j - 1] = static_cast<double>(j) * p[j];
  return out;
}

Poly1 poly1_trim(Poly1 p, double tol) {
  while (p.size() > 1 && std::abs(p.back()) <= tol) p.pop_back();
  return p;
}

BlaschkeProduct::BlaschkeProduct(std::vector<cplx> zeros, cplx front)
    : zeros_(std::move(zeros)), front_(front) {
  for (cplx a : zeros_)
    if (std::abs(a) >= 1.0) throw Error("BlaschkeProduct: zero outside the open disc");
  const double m = std::abs(front_);
  if (std::abs(m - 1.0) > 1e-12) throw Error("BlaschkeProduct: front constant must be unimodular");
  front_ /= m;  // exact modulus 1
}

BlaschkeProduct BlaschkeProduct::monomial(int m) {
  if (m < 0) throw Error("BlaschkeProduct::monomial: negative power");
  return BlaschkeProduct(std::vector<cplx>(static_cast<size_t>(m), cplx(0.0)));
}

BlaschkeProduct BlaschkeProduct::factor(cplx a) { return BlaschkeProduct({a}); }

bool BlaschkeProduct::is_monomial() const {
  for (cplx a : zeros_)
    if (std::abs(a) != 0.0) return false;
  return true;
}

cplx BlaschkeProduct::evaluate(cplx z) const {
  cplx acc = front_;
  for (cplx a : zeros_) acc *= (z - a) / (1.0 - std::conj(a) * z);
  return acc;
}

cplx BlaschkeProduct::derivative(cplx z) const {
  // Product rule over the factors: B' / B = sum_j f_j'/f_j with
  // f_j'(z) = (1 - |a_j|^2) / (1 - conj(a_j) z)^2.  Evaluate without dividing
  // by potentially vanishing factors.
  cplx total = 0.0;
  for (size_t j = 0; j < zeros_.size(); ++j) {
    cplx term = front_;
    for (size_t l = 0; l < zeros_.size(); ++l) {
      const cplx a = zeros_[l];
      if (l == j) {
        const cplx den = 1.0 - std::conj(a) * z;
        term *= (1.0 - std::norm(a)) / (den * den);
      } else {
        term *= (z - a) / (1.0 - std::conj(a) * z);
      }
    }
    total += term;
  }
  return total;
}

Poly1 BlaschkeProduct::numerator() const {
  Poly1 num{front_};
  for (cplx a : zeros_) num = poly1_mul(num, Poly1{-a, 1.0});
  return num;
}

Poly1 BlaschkeProduct::denominator() const {
  Poly1 den{cplx(1.0)};
  for (cplx a : zeros_) den = poly1_mul(den, Poly1{1.0, -std::conj(a)});
  return den;
}

Poly1 BlaschkeProduct::taylor(int N) const {
  if (N < 0) throw Error("BlaschkeProduct::taylor: N must be >= 0");
  const Poly1 num = numerator();
  const Poly1 den = denominator();  // den[0] == 1
  Poly1 c(static_cast<size_t>(N) + 1, cplx(0.0));
  for (int k = 0; k <= N; ++k) {
    cplx acc = k < static_cast<int>(num.size()) ? num[static_cast<size_t>(k)] : cplx(0.0);
    for (int j = 1; j <= k && j < static_cast<int>(den.size()); ++j)
      acc -= den[static_cast<size_t>(j)] * c[static_cast<size_t>(k - j)];
    c[static_cast<size_t>(k)] = acc;
  }
  return c;
}

BlaschkeProduct BlaschkeProduct::operator*(const BlaschkeProduct& o) const {
  std::vector<cplx> zs = zeros_;
  zs.insert(zs.end(), o.zeros_.begin(), o.zeros_.end());
  return BlaschkeProduct(std::move(zs), front_ * o.front_);
}

static bool take_zero(std::vector<cplx>& pool, cplx a) {
  for (size_t i = 0; i < pool.size(); ++i) {
    if (std::abs(pool[i] - a) <= 1e-9) {
      pool.erase(pool.begin() + static_cast<long>(i));
      return true;
    }
  }
  return false;
}

bool BlaschkeProduct::divisible_by(const BlaschkeProduct& o) const {
  std::vector<cplx> pool = zeros_;
  for (cplx a : o.zeros_)
    if (!take_zero(pool, a)) return false;
  return true;
}

BlaschkeProduct BlaschkeProduct::divide(const BlaschkeProduct& o) const {
  std::vector<cplx> pool = zeros_;
  for (cplx a : o.zeros_)
    if (!take_zero(pool, a)) throw SpecViolation("BlaschkeProduct::divide: not a factor");
  return BlaschkeProduct(std::move(pool), front_ / o.front_);
}

}  // namespace hql
