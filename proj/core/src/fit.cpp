#include "focal/fit.hpp"

#include <Eigen/Dense>

#include "focal/errors.hpp"

namespace focal {

double line_fit_residual(const std::vector<MVector>& points) {
  if (points.size() < 3) return 0.0;
  const int dim = points.front().dim();
  Eigen::MatrixXd m(static_cast<Eigen::Index>(points.size()), dim);
  for (std::size_t r = 0; r < points.size(); ++r) {
    require_same_dim(points[r], points.front());
    for (int c = 0; c < dim; ++c) m(static_cast<Eigen::Index>(r), c) = points[r][c];
  }
  const Eigen::RowVectorXd centroid = m.colwise().mean();
  const Eigen::MatrixXd centred = m.rowwise() - centroid;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(centred.transpose() * centred);
  const Eigen::VectorXd dir = eig.eigenvectors().col(dim - 1);
  double worst = 0.0;
  for (Eigen::Index r = 0; r < centred.rows(); ++r) {
    const Eigen::VectorXd p = centred.row(r).transpose();
    worst = std::max(worst, (p - p.dot(dir) * dir).norm());
  }
  return worst;
}

}  // namespace focal
