#ifndef QUIVERFORGE_LINALG_HPP
#define QUIVERFORGE_LINALG_HPP

#include <optional>
#include <vector>

#include "scalar.hpp"

namespace qf {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<int> rref(Mat &m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int rows = (int)m.size(), cols = (int)m[0].size();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    Scalar inv = m[r][c].inverse();
    for (int j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline int rank(Mat m) { return (int)rref(m).size(); }

// One solution of a x = b, if any.
inline std::optional<Vec> solve(Mat a, Vec const &b) {
  if (a.empty()) {
    for (auto const &x : b)
      if (!x.is_zero()) return std::nullopt;
    return Vec{};
  }
  int rows = (int)a.size(), cols = (int)a[0].size();
  for (int i = 0; i < rows; ++i) a[i].push_back(b[i]);
  auto pivots = rref(a);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  Vec x(cols, Scalar(0, b.empty() ? 0u : b[0].characteristic()));
  if (!a.empty() && cols > 0) x.assign(cols, Scalar(0, a[0][0].characteristic()));
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][cols];
  return x;
}

// Basis of the right nullspace of a (columns = unknowns).
inline std::vector<Vec> nullspace(Mat a, int cols, unsigned chr) {
  std::vector<Vec> out;
  auto pivots = rref(a);
  std::vector<char> is_pivot(cols, 0);
  for (int c : pivots) is_pivot[c] = 1;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, Scalar(0, chr));
    v[free] = Scalar(1, chr);
    for (size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -a[i][free];
    out.push_back(std::move(v));
  }
  return out;
}

inline std::optional<Mat> inverse(Mat a, unsigned chr) {
  int n = (int)a.size();
  for (int i = 0; i < n; ++i) {
    if ((int)a[i].size() != n) return std::nullopt;
    for (int j = 0; j < n; ++j) a[i].push_back(Scalar(i == j ? 1 : 0, chr));
  }
  auto pivots = rref(a);
  if ((int)pivots.size() != n) return std::nullopt;
  Mat inv(n, Vec(n, Scalar(0, chr)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

} // namespace qf

#endif
