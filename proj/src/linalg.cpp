#include "linalg.hpp"

#include <algorithm>

namespace primhom {

RankNullspace rank_and_nullspace(const CycloMatrix& m) {
  size_t rows = m.rows, cols = m.cols;
  std::vector<std::vector<Cyclo>> a(rows, std::vector<Cyclo>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) a[i][j] = m.at(i, j);

  std::vector<size_t> pivot_col;
  size_t pr = 0;  // current pivot row
  for (size_t col = 0; col < cols && pr < rows; ++col) {
    size_t sel = pr;
    while (sel < rows && a[sel][col].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(a[pr], a[sel]);
    Cyclo inv = a[pr][col].inverse();
    for (size_t j = col; j < cols; ++j) a[pr][j] = inv * a[pr][j];
    for (size_t i = 0; i < rows; ++i) {
      if (i == pr || a[i][col].is_zero()) continue;
      Cyclo f = a[i][col];
      for (size_t j = col; j < cols; ++j) a[i][j] = a[i][j] - f * a[pr][j];
    }
    pivot_col.push_back(col);
    ++pr;
  }

  RankNullspace out;
  out.rank = pivot_col.size();
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Cyclo> v(cols, Cyclo::zero());
    v[free] = Cyclo::one();
    for (size_t r = 0; r < pivot_col.size(); ++r)
      v[pivot_col[r]] = -a[r][free];
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

}  // namespace primhom
