#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qadv/linalg.hpp"

namespace qadv {

struct InvalidState : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ordered list of local dimensions of a composite system, row-major
// composite indexing: (i_0, ..., i_{k-1}) -> ((i_0*d_1 + i_1)*d_2 + ...).
struct SystemShape {
  std::vector<std::size_t> factors;
  std::vector<std::string> names;

  SystemShape() = default;
  SystemShape(std::initializer_list<std::size_t> f) : factors(f) {}
  explicit SystemShape(std::vector<std::size_t> f) : factors(std::move(f)) {}

  std::size_t total_dim() const;
  std::size_t size() const { return factors.size(); }
  void check_matches(std::size_t dim) const;
};

// Hermitian, PSD, unit-trace operator. Validated on construction.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m, std::string label = "");

  std::size_t dim() const { return static_cast<std::size_t>(mat_.rows()); }
  const Matrix& matrix() const { return mat_; }
  const std::string& label() const { return label_; }

  static DensityMatrix maximally_mixed(std::size_t d);

 private:
  Matrix mat_;
  std::string label_;
};

class PureState {
 public:
  explicit PureState(Vector amplitudes, std::string label = "");

  std::size_t dim() const { return static_cast<std::size_t>(amp_.size()); }
  const Vector& amplitudes() const { return amp_; }

  DensityMatrix projector() const;

 private:
  Vector amp_;
  std::string label_;
};

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

// Raw partial trace; shape annotates m, `keep` lists factor indices to keep
// (order preserved as listed in shape).
Matrix partial_trace(const Matrix& m, const SystemShape& shape,
                     const std::vector<std::size_t>& keep);
DensityMatrix partial_trace(const DensityMatrix& rho, const SystemShape& shape,
                            const std::vector<std::size_t>& keep);

// |gamma> = (1/sqrt(d)) sum_i |i>|i>
PureState maximally_entangled(std::size_t d);

// |rho> = (sqrt(rho) (x) I)|gamma>.  First marginal is rho; the second is
// rho transposed (elementwise, computational basis).
PureState canonical_purification(const DensityMatrix& rho);

// Permute tensor factors of a square matrix: perm[k] = index (in `shape`)
// of the factor that ends up in slot k.
Matrix permute_factors(const Matrix& m, const SystemShape& shape,
                       const std::vector<std::size_t>& perm);

}  // namespace qadv
