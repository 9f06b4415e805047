#include "qadv/linalg.hpp"

#include <cmath>

namespace qadv {

NumericConfig& NumericConfig::instance() {
  static NumericConfig c;
  return c;
}

HermEig herm_eig(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()));
  return {es.eigenvalues(), es.eigenvectors()};
}

RealVector clipped_spectrum(const Matrix& m) {
  RealVector v = herm_eig(m).values;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) < cfg().eig_clip) v(i) = 0.0;
  return v;
}

Matrix matrix_sqrt(const Matrix& psd) {
  auto [vals, vecs] = herm_eig(psd);
  RealVector s(vals.size());
  for (Eigen::Index i = 0; i < vals.size(); ++i)
    s(i) = vals(i) > cfg().eig_clip ? std::sqrt(vals(i)) : 0.0;
  return vecs * s.asDiagonal() * vecs.adjoint();
}

Matrix matrix_log2(const Matrix& psd) {
  auto [vals, vecs] = herm_eig(psd);
  RealVector s(vals.size());
  for (Eigen::Index i = 0; i < vals.size(); ++i)
    s(i) = vals(i) > cfg().eig_clip ? std::log2(vals(i)) : 0.0;
  return vecs * s.asDiagonal() * vecs.adjoint();
}

Matrix matrix_exp_herm(const Matrix& herm) {
  auto [vals, vecs] = herm_eig(herm);
  RealVector s(vals.size());
  double vmax = vals.maxCoeff();
  // shift before exponentiating; callers renormalize to unit trace anyway
  for (Eigen::Index i = 0; i < vals.size(); ++i) s(i) = std::exp(vals(i) - vmax);
  return vecs * s.asDiagonal() * vecs.adjoint();
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

bool is_hermitian(const Matrix& m, double tol) {
  return max_abs(m - m.adjoint()) <= tol;
}

double min_eigenvalue(const Matrix& m) { return herm_eig(m).values.minCoeff(); }

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

}  // namespace qadv
