#include "austere/linalg.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace austere {

Eigen::VectorXd flatten(const FMat& m) {
  const int n = m.n();
  Eigen::VectorXd v(4 * n * n);
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Quaternion& q = m.at(i, j);
      v[k++] = q.w;
      v[k++] = q.x;
      v[k++] = q.y;
      v[k++] = q.z;
    }
  return v;
}

int numerical_rank(const Eigen::MatrixXd& rows, double rel_tol, double* gap_ratio) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(rows);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv[0] == 0.0) {
    if (gap_ratio) *gap_ratio = std::numeric_limits<double>::infinity();
    return 0;
  }
  int r = 0;
  while (r < sv.size() && sv[r] > rel_tol * sv[0]) ++r;
  if (gap_ratio) {
    if (r == sv.size() || sv[r] == 0.0)
      *gap_ratio = std::numeric_limits<double>::infinity();
    else
      *gap_ratio = (r == 0) ? 0.0 : sv[r - 1] / sv[r];
  }
  return r;
}

double orthonormalize(std::vector<FMat>& block) {
  if (block.empty()) return 1.0;
  const int d = static_cast<int>(block.size());
  Eigen::MatrixXd gram(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) gram(i, j) = frobenius_inner(block[static_cast<size_t>(i)], block[static_cast<size_t>(j)]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  if (lo <= 0.0) throw std::runtime_error("orthonormalize: dependent block");
  for (size_t i = 0; i < block.size(); ++i) {
    for (int pass = 0; pass < 2; ++pass)
      for (size_t j = 0; j < i; ++j) block[i] -= frobenius_inner(block[j], block[i]) * block[j];
    block[i] *= 1.0 / block[i].norm();
  }
  return std::sqrt(hi / lo);
}

}  // namespace austere
