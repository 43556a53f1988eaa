#ifndef LGT_LINALG_HPP
#define LGT_LINALG_HPP

#include <optional>
#include <vector>

#include "lgt/rational.hpp"

namespace lgt {

using QMat = std::vector<QVec>;  // row-major

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(QMat& A);
size_t rank(QMat A);
// Basis of {x : A x = 0}; ncols needed when A has no rows.
std::vector<QVec> nullspace(QMat A, size_t ncols);
std::optional<QMat> inverse(const QMat& A);

}  // namespace lgt

#endif
