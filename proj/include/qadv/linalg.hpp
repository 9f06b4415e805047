#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "qadv/config.hpp"

namespace qadv {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Complex = std::complex<double>;

struct HermEig {
  RealVector values;  // ascending
  Matrix vectors;     // columns
};

// Eigendecomposition of a Hermitian matrix; the single primitive behind
// PSD checks, square roots, logs and spectral projectors.
HermEig herm_eig(const Matrix& m);

// Spectrum clipped at cfg().eig_clip, so sqrt/log never see negative noise.
RealVector clipped_spectrum(const Matrix& m);

Matrix matrix_sqrt(const Matrix& psd);
// log2 on the support; off-support directions contribute 0 (never used
// against states living outside the support).
Matrix matrix_log2(const Matrix& psd);
Matrix matrix_exp_herm(const Matrix& herm);

double max_abs(const Matrix& m);
bool is_hermitian(const Matrix& m, double tol);
double min_eigenvalue(const Matrix& m);

// Kronecker product, row-major composite indexing: (i,j) -> i*dim(b)+j.
Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

}  // namespace qadv
