#ifndef HQL_MULTI_INDEX_HPP
#define HQL_MULTI_INDEX_HPP

#include <memory>
#include <numeric>
#include <vector>

#include "hql/errors.hpp"

namespace hql {

/// Exponent tuple (k_1, ..., k_n) of a monomial z^k, all entries >= 0.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exponents);
  MultiIndex(std::initializer_list<int> exponents);

  int size() const { return static_cast<int>(k_.size()); }
  int operator[](int i) const { return k_[static_cast<size_t>(i)]; }
  int total_degree() const { return std::accumulate(k_.begin(), k_.end(), 0); }
  const std::vector<int>& exponents() const { return k_; }

  /// k + e_i (raise variable i by one).
  MultiIndex raised(int i) const;
  /// k - e_i; negative result is a logic error, guarded by the caller.
  MultiIndex lowered(int i) const;

  bool operator==(const MultiIndex& o) const { return k_ == o.k_; }
  bool operator!=(const MultiIndex& o) const { return !(*this == o); }

  /// Graded-lexicographic order: total degree first, ties broken by
  /// entrywise lexicographic comparison.
  static bool graded_lex_less(const MultiIndex& a, const MultiIndex& b);

 private:
  std::vector<int> k_;
};

/// Rectangular truncation {k : k_i <= D_i} of the monomial lattice with a
/// fixed graded-lex enumeration.  Immutable; shared between vectors/models.
class TruncationGrid {
 public:
  explicit TruncationGrid(std::vector<int> caps);

  int var_count() const { return static_cast<int>(caps_.size()); }
  int cap(int i) const { return caps_[static_cast<size_t>(i)]; }
  const std::vector<int>& caps() const { return caps_; }
  int min_cap() const;

  /// Number of lattice points, prod (D_i + 1).
  int basis_size() const { return static_cast<int>(order_.size()); }

  const MultiIndex& index_at(int position) const { return order_[static_cast<size_t>(position)]; }
  const std::vector<MultiIndex>& enumeration() const { return order_; }

  /// Position of k in the enumeration; -1 when k is outside the grid.
  int position_of(const MultiIndex& k) const;
  bool contains(const MultiIndex& k) const { return position_of(k) >= 0; }

  bool operator==(const TruncationGrid& o) const { return caps_ == o.caps_; }
  bool operator!=(const TruncationGrid& o) const { return !(*this == o); }

 private:
  int flat_code(const MultiIndex& k) const;

  std::vector<int> caps_;
  std::vector<int> strides_;
  std::vector<MultiIndex> order_;      // graded-lex enumeration
  std::vector<int> position_by_code_;  // mixed-radix code -> position
};

using GridPtr = std::shared_ptr<const TruncationGrid>;

GridPtr make_grid(std::vector<int> caps);
/// n variables, the same cap D in each.
GridPtr make_grid(int n, int uniform_cap);

}  // namespace hql

#endif
