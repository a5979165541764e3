#include <optional>

#include "qspace/eigen_scalar.hpp"
#include "qspace/error.hpp"

namespace qspace {

QRational determinant(const RMatrixQ& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::domain, "determinant of a non-square matrix");
  RMatrixQ a = m;
  const Eigen::Index n = a.rows();
  QRational det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return QRational(0);
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    QRational inv = a(col, col).inverse();
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      QRational f = a(r, col) * inv;
      for (Eigen::Index c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

std::optional<RMatrixQ> solve_exact(RMatrixQ a, RMatrixQ b) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols; ++col) {
    Eigen::Index pivot = rank;
    while (pivot < rows && a(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) throw Error(ErrorKind::singular, "linear system has a nontrivial kernel");
    if (pivot != rank) {
      a.row(pivot).swap(a.row(rank));
      b.row(pivot).swap(b.row(rank));
    }
    QRational inv = a(rank, col).inverse();
    for (Eigen::Index c = col; c < cols; ++c) a(rank, c) *= inv;
    for (Eigen::Index c = 0; c < b.cols(); ++c) b(rank, c) *= inv;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == rank || a(r, col).is_zero()) continue;
      QRational f = a(r, col);
      for (Eigen::Index c = col; c < cols; ++c) a(r, c) -= f * a(rank, c);
      for (Eigen::Index c = 0; c < b.cols(); ++c) b(r, c) -= f * b(rank, c);
    }
    ++rank;
  }
  for (Eigen::Index r = rank; r < rows; ++r)
    for (Eigen::Index c = 0; c < b.cols(); ++c)
      if (!b(r, c).is_zero()) return std::nullopt;
  return RMatrixQ(b.topRows(cols));
}

}  // namespace qspace
