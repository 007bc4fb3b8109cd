#include "pws/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace pws {

std::vector<int> rref(RatMatrix& a) {
  const int m = static_cast<int>(a.size());
  const int n = m ? static_cast<int>(a[0].size()) : 0;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int sel = -1;
    for (int i = row; i < m; ++i) {
      if (!a[i][col].is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(a[sel], a[row]);
    const Rational inv = Rational(1) / a[row][col];
    for (int j = col; j < n; ++j) a[row][j] *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      const Rational f = a[i][col];
      for (int j = col; j < n; ++j) a[i][j] -= f * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::optional<RatVector> lin_solve(RatMatrix a, RatVector b) {
  const int m = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != m) throw std::invalid_argument("lin_solve: size mismatch");
  const int n = m ? static_cast<int>(a[0].size()) : 0;
  for (int i = 0; i < m; ++i) a[i].push_back(b[i]);
  std::vector<int> pivots = rref(a);
  for (size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == n) return std::nullopt;  // row reads 0 = 1
  }
  RatVector x(n, Rational(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][n];
  return x;
}

std::vector<RatVector> nullspace(RatMatrix a) {
  const int m = static_cast<int>(a.size());
  const int n = m ? static_cast<int>(a[0].size()) : 0;
  std::vector<int> pivots = rref(a);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(n, Rational(0));
    v[f] = Rational(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace pws
