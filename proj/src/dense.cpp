#include "ontic/dense.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace ontic {

double max_norm(const DenseOperator& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

double max_abs_diff(const DenseOperator& a, const DenseOperator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  return max_norm(a - b);
}

double unitarity_defect(const DenseOperator& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("unitarity_defect: matrix is not square");
  }
  const DenseOperator id = DenseOperator::Identity(m.rows(), m.cols());
  return max_norm(m * m.adjoint() - id);
}

double hermiticity_defect(const DenseOperator& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("hermiticity_defect: matrix is not square");
  }
  return max_norm(m - m.adjoint());
}

DenseOperator exp_normal(const DenseOperator& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("exp_normal: matrix is not square");
  }
  if (a.rows() == 0) return a;
  const double scale = std::max(1.0, max_norm(a));
  const double normality = max_norm(a * a.adjoint() - a.adjoint() * a);
  if (normality > 1e-9 * scale * scale * static_cast<double>(a.rows())) {
    throw std::invalid_argument("exp_normal: exponent is not a normal matrix");
  }
  Eigen::ComplexSchur<DenseOperator> schur(a, true);
  if (schur.info() != Eigen::Success) {
    throw std::runtime_error("exp_normal: Schur factorisation did not converge");
  }
  const DenseOperator& q = schur.matrixU();
  DenseVector diag = schur.matrixT().diagonal();
  for (Eigen::Index k = 0; k < diag.size(); ++k) diag(k) = std::exp(diag(k));
  return q * diag.asDiagonal() * q.adjoint();
}

double wrap_phase(double theta, double snap) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi - snap) r = 0.0;
  return r;
}

}  // namespace ontic
