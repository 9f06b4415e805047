#include "qadv/qstate.hpp"

#include <algorithm>
#include <cmath>

namespace qadv {

std::size_t SystemShape::total_dim() const {
  std::size_t d = 1;
  for (auto f : factors) {
    if (f == 0) throw DimensionError("zero factor in SystemShape");
    d *= f;
  }
  return d;
}

void SystemShape::check_matches(std::size_t dim) const {
  if (total_dim() != dim)
    throw DimensionError("SystemShape total dim " + std::to_string(total_dim()) +
                         " does not match matrix dim " + std::to_string(dim));
}

DensityMatrix::DensityMatrix(Matrix m, std::string label)
    : mat_(std::move(m)), label_(std::move(label)) {
  if (mat_.rows() != mat_.cols() || mat_.rows() == 0)
    throw InvalidState("density matrix must be square and nonempty");
  if (static_cast<std::size_t>(mat_.rows()) > cfg().max_total_dim)
    throw DimensionError("dimension exceeds configured cap");
  if (!is_hermitian(mat_, cfg().hermiticity_tol))
    throw InvalidState("density matrix not Hermitian");
  mat_ = 0.5 * (mat_ + mat_.adjoint().eval());
  if (min_eigenvalue(mat_) < -cfg().psd_tol)
    throw InvalidState("density matrix not PSD");
  if (std::abs(mat_.trace().real() - 1.0) > cfg().trace_tol ||
      std::abs(mat_.trace().imag()) > cfg().trace_tol)
    throw InvalidState("density matrix trace differs from 1");
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t d) {
  return DensityMatrix(Matrix::Identity(d, d) / static_cast<double>(d));
}

PureState::PureState(Vector amplitudes, std::string label)
    : amp_(std::move(amplitudes)), label_(std::move(label)) {
  if (amp_.size() == 0) throw InvalidState("empty pure state");
  if (std::abs(amp_.squaredNorm() - 1.0) > cfg().unit_norm_tol)
    throw InvalidState("pure state not normalized");
}

DensityMatrix PureState::projector() const {
  return DensityMatrix(amp_ * amp_.adjoint());
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() * b.dim() > cfg().max_total_dim)
    throw DimensionError("tensor product exceeds configured dimension cap");
  return DensityMatrix(kron(a.matrix(), b.matrix()));
}

namespace {

std::vector<std::size_t> strides_of(const SystemShape& shape) {
  std::vector<std::size_t> s(shape.size(), 1);
  for (std::size_t k = shape.size(); k-- > 1;)
    s[k - 1] = s[k] * shape.factors[k];
  return s;
}

}  // namespace

Matrix partial_trace(const Matrix& m, const SystemShape& shape,
                     const std::vector<std::size_t>& keep) {
  shape.check_matches(static_cast<std::size_t>(m.rows()));
  if (keep.empty()) throw DimensionError("empty keep set");
  std::vector<bool> kept(shape.size(), false);
  for (auto k : keep) {
    if (k >= shape.size()) throw DimensionError("keep index out of range");
    kept[k] = true;
  }
  std::vector<std::size_t> traced;
  for (std::size_t k = 0; k < shape.size(); ++k)
    if (!kept[k]) traced.push_back(k);

  const auto strides = strides_of(shape);
  std::size_t d_keep = 1, d_tr = 1;
  for (auto k : keep) d_keep *= shape.factors[k];
  for (auto k : traced) d_tr *= shape.factors[k];

  // flat index from digit tuple of the (keep, traced) split
  auto flat = [&](std::size_t ik, std::size_t it) {
    std::size_t idx = 0;
    for (std::size_t a = keep.size(); a-- > 0;) {
      idx += (ik % shape.factors[keep[a]]) * strides[keep[a]];
      ik /= shape.factors[keep[a]];
    }
    for (std::size_t a = traced.size(); a-- > 0;) {
      idx += (it % shape.factors[traced[a]]) * strides[traced[a]];
      it /= shape.factors[traced[a]];
    }
    return idx;
  };

  Matrix out = Matrix::Zero(d_keep, d_keep);
  for (std::size_t i = 0; i < d_keep; ++i)
    for (std::size_t j = 0; j < d_keep; ++j)
      for (std::size_t t = 0; t < d_tr; ++t)
        out(i, j) += m(flat(i, t), flat(j, t));
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const SystemShape& shape,
                            const std::vector<std::size_t>& keep) {
  return DensityMatrix(partial_trace(rho.matrix(), shape, keep));
}

PureState maximally_entangled(std::size_t d) {
  Vector v = Vector::Zero(d * d);
  const double a = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t i = 0; i < d; ++i) v(i * d + i) = a;
  return PureState(std::move(v));
}

PureState canonical_purification(const DensityMatrix& rho) {
  const std::size_t d = rho.dim();
  const Matrix r = matrix_sqrt(rho.matrix());
  // (sqrt(rho) (x) I)|gamma> has amplitudes sqrt(rho)[i][j]/sqrt(d); the
  // 1/sqrt(d) is absorbed by the final renormalization.
  Vector v(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) v(i * d + j) = r(i, j);
  v /= v.norm();
  return PureState(std::move(v));
}

Matrix permute_factors(const Matrix& m, const SystemShape& shape,
                       const std::vector<std::size_t>& perm) {
  shape.check_matches(static_cast<std::size_t>(m.rows()));
  if (perm.size() != shape.size()) throw DimensionError("bad permutation size");
  const auto strides = strides_of(shape);
  SystemShape new_shape;
  for (auto p : perm) new_shape.factors.push_back(shape.factors[p]);
  const auto new_strides = strides_of(new_shape);
  const std::size_t d = shape.total_dim();

  // old flat index for each new flat index
  std::vector<std::size_t> map(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t idx = 0, rest = i;
    for (std::size_t k = 0; k < perm.size(); ++k) {
      const std::size_t digit = rest / new_strides[k];
      rest %= new_strides[k];
      idx += digit * strides[perm[k]];
    }
    map[i] = idx;
  }
  Matrix out(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out(i, j) = m(map[i], map[j]);
  return out;
}

}  // namespace qadv
