#include "hql/multi_index.hpp"

#include <algorithm>

namespace hql {

MultiIndex::MultiIndex(std::vector<int> exponents) : k_(std::move(exponents)) {
  for (int e : k_)
    if (e < 0) throw Error("MultiIndex: negative exponent");
}

MultiIndex::MultiIndex(std::initializer_list<int> exponents)
    : MultiIndex(std::vector<int>(exponents)) {}

MultiIndex MultiIndex::raised(int i) const {
  std::vector<int> k = k_;
  k[static_cast<size_t>(i)] += 1;
  return MultiIndex(std::move(k));
}

MultiIndex MultiIndex::lowered(int i) const {
  std::vector<int> k = k_;
  k[static_cast<size_t>(i)] -= 1;
  return MultiIndex(std::move(k));
}

bool MultiIndex::graded_lex_less(const MultiIndex& a, const MultiIndex& b) {
  const int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return a.exponents() < b.exponents();
}

TruncationGrid::TruncationGrid(std::vector<int> caps) : caps_(std::move(caps)) {
  if (caps_.empty()) throw Error("TruncationGrid: needs at least one variable");
  long long total = 1;
  for (int d : caps_) {
    if (d < 0) throw Error("TruncationGrid: negative cap");
    total *= d + 1;
    if (total > (1LL << 24)) throw DimensionOverflow("TruncationGrid: basis too large");
  }

  strides_.resize(caps_.size());
  int stride = 1;
  for (size_t i = 0; i < caps_.size(); ++i) {
    strides_[i] = stride;
    stride *= caps_[i] + 1;
  }

  order_.reserve(static_cast<size_t>(total));
  std::vector<int> k(caps_.size(), 0);
  while (true) {
    order_.emplace_back(k);
    size_t i = 0;
    for (; i < k.size(); ++i) {
      if (k[i] < caps_[i]) {
        ++k[i];
        break;
      }
      k[i] = 0;
    }
    if (i == k.size()) break;
  }
  std::sort(order_.begin(), order_.end(), MultiIndex::graded_lex_less);

  position_by_code_.assign(static_cast<size_t>(total), -1);
  for (size_t pos = 0; pos < order_.size(); ++pos)
    position_by_code_[static_cast<size_t>(flat_code(order_[pos]))] = static_cast<int>(pos);
}

int TruncationGrid::min_cap() const { return *std::min_element(caps_.begin(), caps_.end()); }

int TruncationGrid::flat_code(const MultiIndex& k) const {
  int code = 0;
  for (int i = 0; i < var_count(); ++i) code += strides_[static_cast<size_t>(i)] * k[i];
  return code;
}

int TruncationGrid::position_of(const MultiIndex& k) const {
  if (k.size() != var_count()) throw GridMismatch("position_of: wrong variable count");
  for (int i = 0; i < var_count(); ++i)
    if (k[i] < 0 || k[i] > cap(i)) return -1;
  return position_by_code_[static_cast<size_t>(flat_code(k))];
}

GridPtr make_grid(std::vector<int> caps) {
  return std::make_shared<const TruncationGrid>(std::move(caps));
}

GridPtr make_grid(int n, int uniform_cap) {
  return make_grid(std::vector<int>(static_cast<size_t>(n), uniform_cap));
}

}  // namespace hql
