#pragma once

#include <optional>
#include <vector>

#include "cyclotomic.hpp"

namespace primhom {

namespace detail {
inline bool k_is_zero(const Rat& x) { return x == 0; }
inline bool k_is_zero(const Cyclo& x) { return x.is_zero(); }
inline Rat k_inv(const Rat& x) { return Rat(1) / x; }
inline Cyclo k_inv(const Cyclo& x) { return x.inverse(); }
}  // namespace detail

// Incremental row-echelon basis over a field K (Rat or Cyclo).
// Rows are kept normalized with leading 1 at the pivot column and
// reduced against each other; insertion order fixes pivots deterministically.
template <class K>
class Echelon {
 public:
  explicit Echelon(size_t cols) : cols_(cols) {}

  size_t rank() const { return rows_.size(); }
  size_t cols() const { return cols_; }
  const std::vector<std::vector<K>>& rows() const { return rows_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

  // Reduces v against the basis in place; returns pivot column if a
  // nonzero residue remains (v is then normalized), nullopt otherwise.
  std::optional<size_t> residue(std::vector<K>& v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      const K& c = v[pivots_[r]];
      if (detail::k_is_zero(c)) continue;
      K f = c;
      for (size_t j = 0; j < cols_; ++j) v[j] = v[j] - f * rows_[r][j];
    }
    for (size_t j = 0; j < cols_; ++j)
      if (!detail::k_is_zero(v[j])) {
        K inv = detail::k_inv(v[j]);
        for (size_t k = j; k < cols_; ++k) v[k] = inv * v[k];
        return j;
      }
    return std::nullopt;
  }

  // Returns true if v enlarged the span.
  bool insert(std::vector<K> v) {
    auto piv = residue(v);
    if (!piv) return false;
    rows_.push_back(std::move(v));
    pivots_.push_back(*piv);
    return true;
  }

  bool contains(std::vector<K> v) const { return !residue(v).has_value(); }

  // Coefficients x with x * rows == v, if v lies in the span.
  std::optional<std::vector<K>> coordinates(std::vector<K> v) const {
    std::vector<K> x(rows_.size(), K());
    for (size_t r = 0; r < rows_.size(); ++r) {
      K c = v[pivots_[r]];
      if (detail::k_is_zero(c)) continue;
      x[r] = c;
      for (size_t j = 0; j < cols_; ++j) v[j] = v[j] - c * rows_[r][j];
    }
    for (size_t j = 0; j < cols_; ++j)
      if (!detail::k_is_zero(v[j])) return std::nullopt;
    return x;
  }

 private:
  size_t cols_;
  std::vector<std::vector<K>> rows_;
  std::vector<size_t> pivots_;
};

template <class K>
size_t rank_of(const std::vector<std::vector<K>>& rows, size_t cols) {
  Echelon<K> e(cols);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

struct CycloMatrix {
  size_t rows = 0, cols = 0;
  std::vector<Cyclo> a;  // row-major

  CycloMatrix() = default;
  CycloMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
  Cyclo& at(size_t i, size_t j) { return a[i * cols + j]; }
  const Cyclo& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

struct RankNullspace {
  size_t rank;
  std::vector<std::vector<Cyclo>> nullspace;  // basis vectors, length cols
};

// Exact Gaussian elimination; deterministic pivoting (first nonzero row in
// column order).  Nullspace basis from free columns in ascending order.
RankNullspace rank_and_nullspace(const CycloMatrix& m);

}  // namespace primhom
