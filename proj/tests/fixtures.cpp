#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qadv::fixtures {

QuantumChannel controlled_id_dephasing() {
  // K1 = I_A (x) <0|_E; K2 = |0><0|_A (x) <1|; K3 = |1><1|_A (x) <1|
  Matrix k1 = Matrix::Zero(2, 4), k2 = Matrix::Zero(2, 4), k3 = Matrix::Zero(2, 4);
  // input index (a, e) -> a*2 + e
  k1(0, 0) = 1;
  k1(1, 2) = 1;
  k2(0, 1) = 1;
  k3(1, 3) = 1;
  return from_kraus(2, 2, 2, {k1, k2, k3});
}

QuantumChannel jammer_swap() {
  // trace out A, forward E: K_a = <a|_A (x) I_E
  Matrix k0 = Matrix::Zero(2, 4), k1 = Matrix::Zero(2, 4);
  k0(0, 0) = 1;
  k0(1, 1) = 1;
  k1(0, 2) = 1;
  k1(1, 3) = 1;
  return from_kraus(2, 2, 2, {k0, k1});
}

QuantumChannel identity_on_A(std::size_t d_A, std::size_t d_E) {
  std::vector<Matrix> ops;
  for (std::size_t e = 0; e < d_E; ++e) {
    Matrix k = Matrix::Zero(d_A, d_A * d_E);
    for (std::size_t a = 0; a < d_A; ++a) k(a, a * d_E + e) = 1;
    ops.push_back(std::move(k));
  }
  return from_kraus(d_A, d_E, d_A, ops);
}

QuantumChannel dephasing_channel(double p) {
  Matrix i = Matrix::Identity(2, 2), z = Matrix::Zero(2, 2);
  z(0, 0) = 1;
  z(1, 1) = -1;
  return from_kraus(2, 1, 2, {std::sqrt(1 - p) * i, std::sqrt(p) * z});
}

ClassicalTable jammer_selected_bsc(double p0, double p1) {
  ClassicalTable t;
  t.n_X = t.n_E = t.n_Y = 2;
  t.W.assign(2, std::vector<std::vector<double>>(2, std::vector<double>(2)));
  const double pe[2] = {p0, p1};
  for (std::size_t y = 0; y < 2; ++y)
    for (std::size_t x = 0; x < 2; ++x)
      for (std::size_t e = 0; e < 2; ++e)
        t.W[y][x][e] = (y == x) ? 1 - pe[e] : pe[e];
  return t;
}

ClassicalTable jammer_flipped_identity() {
  ClassicalTable t;
  t.n_X = t.n_E = t.n_Y = 2;
  t.W.assign(2, std::vector<std::vector<double>>(2, std::vector<double>(2)));
  for (std::size_t y = 0; y < 2; ++y)
    for (std::size_t x = 0; x < 2; ++x)
      for (std::size_t e = 0; e < 2; ++e) t.W[y][x][e] = (y == (x ^ e)) ? 1 : 0;
  return t;
}

ClassicalTable random_classical_table(std::size_t nx, std::size_t ne,
                                      std::size_t ny, Rng& rng) {
  ClassicalTable t;
  t.n_X = nx;
  t.n_E = ne;
  t.n_Y = ny;
  t.W.assign(ny, std::vector<std::vector<double>>(nx, std::vector<double>(ne)));
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t e = 0; e < ne; ++e) {
      const auto col = random_distribution(ny, rng);
      for (std::size_t y = 0; y < ny; ++y) t.W[y][x][e] = col[y];
    }
  return t;
}

QuantumChannel random_cptp(std::size_t d_A, std::size_t d_E, std::size_t d_B,
                           Rng& rng) {
  const std::size_t d_in = d_A * d_E, d = d_in * d_B;
  std::normal_distribution<double> g;
  Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = Complex(g(rng), g(rng));
  Matrix G = m * m.adjoint();
  const Matrix R = partial_trace(G, SystemShape{d_in, d_B}, {0});
  auto [vals, vecs] = herm_eig(R);
  RealVector ri(vals.size());
  for (Eigen::Index i = 0; i < vals.size(); ++i) ri(i) = 1.0 / std::sqrt(vals(i));
  const Matrix rinv = vecs * ri.asDiagonal() * vecs.adjoint();
  const Matrix fix = kron(rinv, Matrix::Identity(d_B, d_B));
  return QuantumChannel(d_A, d_E, d_B, fix * G * fix);
}

double classical_np_value(const std::vector<double>& p,
                          const std::vector<double>& q, double eps) {
  // exact randomized Neyman-Pearson: include outcomes by decreasing
  // likelihood ratio p_i/q_i, randomizing on the marginal outcome
  std::vector<std::size_t> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double ra = q[a] > 0 ? p[a] / q[a] : (p[a] > 0 ? 1e300 : 0);
    const double rb = q[b] > 0 ? p[b] / q[b] : (p[b] > 0 ? 1e300 : 0);
    return ra > rb;
  });
  double need = 1.0 - eps, beta = 0.0;
  for (const auto i : order) {
    if (need <= 0) break;
    if (p[i] >= need) {
      beta += q[i] * (need / std::max(p[i], 1e-300));
      need = 0;
    } else {
      beta += q[i];
      need -= p[i];
    }
  }
  if (beta <= 0) return std::numeric_limits<double>::infinity();
  return -std::log2(beta);
}

}  // namespace qadv::fixtures
