#ifndef MCGFIN_LINALG_HPP_
#define MCGFIN_LINALG_HPP_

// Exact linear algebra over a field of scalars T (Rational or FieldElement).
// T must provide + - * /, == and an is_zero overload.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mcgfin/numfield.hpp"

namespace mcgfin::linalg {

  template <typename T>
  using Vec = std::vector<T>;

  // Row-reduces `rows` in place to reduced row echelon form; returns the
  // pivot column of each nonzero row.
  template <typename T>
  std::vector<std::size_t> rref(std::vector<Vec<T>>& rows, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t              r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
      std::size_t p = r;
      while (p < rows.size() && is_zero(rows[p][c])) {
        ++p;
      }
      if (p == rows.size()) {
        continue;
      }
      std::swap(rows[r], rows[p]);
      T inv = rows[r][c];
      for (std::size_t j = c; j < ncols; ++j) {
        rows[r][j] = rows[r][j] / inv;
      }
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == r || is_zero(rows[i][c])) {
          continue;
        }
        T f = rows[i][c];
        for (std::size_t j = c; j < ncols; ++j) {
          if (!is_zero(rows[r][j])) {
            rows[i][j] = rows[i][j] - f * rows[r][j];
          }
        }
      }
      pivots.push_back(c);
      ++r;
    }
    rows.resize(r);
    return pivots;
  }

  // Basis of { v : rows * v = 0 }.  `zero` and `one` fix the scalar field.
  template <typename T>
  std::vector<Vec<T>> kernel(std::vector<Vec<T>> rows,
                             std::size_t         ncols,
                             T const&            zero,
                             T const&            one) {
    auto                     pivots = rref(rows, ncols);
    std::vector<bool>        is_pivot(ncols, false);
    for (auto c : pivots) {
      is_pivot[c] = true;
    }
    std::vector<Vec<T>> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
      if (is_pivot[free]) {
        continue;
      }
      Vec<T> v(ncols, zero);
      v[free] = one;
      for (std::size_t i = 0; i < pivots.size(); ++i) {
        v[pivots[i]] = zero - rows[i][free];
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // Incrementally built echelon basis that also tracks, for each stored
  // row, its expression in terms of the vectors that were added.  Adding a
  // vector already in the span yields the coefficients of that dependency.
  template <typename T>
  class DependencyFinder {
   public:
    DependencyFinder(T zero, T one) : _zero(std::move(zero)), _one(std::move(one)) {}

    std::size_t size() const noexcept {
      return _count;
    }
    std::size_t rank() const noexcept {
      return _rows.size();
    }

    // Returns c with v == sum_j c[j] * (j-th added vector) when v is
    // dependent (v itself is not stored then); otherwise stores v.
    std::optional<Vec<T>> add(Vec<T> v) {
      Vec<T> combo(_count + 1, _zero);
      combo[_count] = _one;
      for (auto& row : _rows) {
        if (is_zero(v[row.pivot])) {
          continue;
        }
        T f = v[row.pivot] / row.vec[row.pivot];
        for (std::size_t j = 0; j < v.size(); ++j) {
          if (!is_zero(row.vec[j])) {
            v[j] = v[j] - f * row.vec[j];
          }
        }
        for (std::size_t j = 0; j < row.combo.size(); ++j) {
          if (!is_zero(row.combo[j])) {
            combo[j] = combo[j] - f * row.combo[j];
          }
        }
      }
      std::size_t pivot = 0;
      while (pivot < v.size() && is_zero(v[pivot])) {
        ++pivot;
      }
      if (pivot == v.size()) {
        // combo . (added vectors, v) == 0 with combo[last] == 1
        Vec<T> dep(_count, _zero);
        for (std::size_t j = 0; j < _count; ++j) {
          dep[j] = _zero - combo[j];
        }
        return dep;
      }
      _rows.push_back({std::move(v), std::move(combo), pivot});
      ++_count;
      return std::nullopt;
    }

   private:
    struct Row {
      Vec<T>      vec;
      Vec<T>      combo;
      std::size_t pivot;
    };
    T                _zero;
    T                _one;
    std::vector<Row> _rows;
    std::size_t      _count = 0;
  };

}  // namespace mcgfin::linalg

#endif  // MCGFIN_LINALG_HPP_
