#pragma once

#include <random>

#include "qadv/qstate.hpp"

namespace qadv {

using Rng = std::mt19937_64;

// normalized complex Gaussian vector
PureState haar_random_pure(std::size_t dim, Rng& rng);

// Hilbert-Schmidt-ish random full-rank state (G G^dag normalized).
DensityMatrix random_density(std::size_t dim, Rng& rng);

// random point on the probability simplex (Dirichlet(1))
std::vector<double> random_distribution(std::size_t n, Rng& rng);

}  // namespace qadv
