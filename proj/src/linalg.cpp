#include "lgt/linalg.hpp"

namespace lgt {

std::vector<size_t> rref(QMat& A) {
  std::vector<size_t> pivots;
  if (A.empty()) return pivots;
  const size_t m = A.size(), n = A[0].size();
  size_t r = 0;
  for (size_t c = 0; c < n && r < m; ++c) {
    size_t p = r;
    while (p < m && A[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(A[p], A[r]);
    Rational inv = 1 / A[r][c];
    for (auto& x : A[r]) x *= inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == r || A[i][c] == 0) continue;
      Rational f = A[i][c];
      for (size_t j = c; j < n; ++j) A[i][j] -= f * A[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

size_t rank(QMat A) { return rref(A).size(); }

std::vector<QVec> nullspace(QMat A, size_t ncols) {
  auto piv = rref(A);
  std::vector<bool> is_piv(ncols, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<QVec> basis;
  for (size_t f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    QVec v(ncols, 0);
    v[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -A[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QMat> inverse(const QMat& A) {
  const size_t n = A.size();
  QMat aug(n, QVec(2 * n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = A[i][j];
    aug[i][n + i] = 1;
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  QMat inv(n, QVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

}  // namespace lgt
