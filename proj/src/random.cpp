#include "qadv/random.hpp"

#include <cmath>

namespace qadv {

PureState haar_random_pure(std::size_t dim, Rng& rng) {
  std::normal_distribution<double> g;
  Vector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v(i) = Complex(g(rng), g(rng));
  v /= v.norm();
  return PureState(std::move(v));
}

DensityMatrix random_density(std::size_t dim, Rng& rng) {
  std::normal_distribution<double> g;
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = Complex(g(rng), g(rng));
  Matrix rho = m * m.adjoint();
  rho /= rho.trace();
  return DensityMatrix(std::move(rho));
}

std::vector<double> random_distribution(std::size_t n, Rng& rng) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> p(n);
  double s = 0;
  for (auto& v : p) s += (v = e(rng));
  for (auto& v : p) v /= s;
  return p;
}

}  // namespace qadv
