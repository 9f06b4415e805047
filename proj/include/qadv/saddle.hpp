#pragma once

#include <cstdint>

#include "qadv/channels.hpp"
#include "qadv/entropy.hpp"
#include "qadv/random.hpp"

namespace qadv {

struct SaddleResult {
  double value = 0.0;  // bits
  DensityMatrix rho_star = DensityMatrix::maximally_mixed(1);
  DensityMatrix sigma_star = DensityMatrix::maximally_mixed(1);
  double gap = 0.0;  // sup-side minus inf-side one-shot certificate
  int iterations = 0;
  bool converged = false;
};

struct CQCapacityResult {
  double value = 0.0;
  std::vector<double> p_star;
  DensityMatrix sigma_star = DensityMatrix::maximally_mixed(1);
  double gap = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct QQRegularizedResult {
  double value = 0.0;  // per channel use
  double gap = 0.0;    // certificate relative to the capped ensemble class
  std::size_t ensemble_size = 0;
  std::vector<double> p_star;
  std::vector<PureState> signals;
  DensityMatrix sigma_star = DensityMatrix::maximally_mixed(1);
  bool converged = false;
};

// I(A':B) of (id (x) N)(|rho><rho| (x) sigma), canonical purification on A'.
double payoff_ea(const QuantumChannel& chan, const DensityMatrix& rho,
                 const DensityMatrix& sigma);

// Euclidean gradients: payoff(rho + tH) = payoff + t tr(H G) + O(t^2) for
// Hermitian H (and likewise in sigma). Exact at full-rank arguments.
Matrix payoff_ea_grad_rho(const QuantumChannel& chan, const DensityMatrix& rho,
                          const DensityMatrix& sigma);
Matrix payoff_ea_grad_sigma(const QuantumChannel& chan, const DensityMatrix& rho,
                            const DensityMatrix& sigma);

// sup_rho inf_sigma I(A':B); gap certified by one-sided resolves at the
// returned pair.
SaddleResult solve_ea_saddle(const QuantumChannel& chan, double tol = 1e-4,
                             int max_iter = 5000);

// inf_sigma sup_p I(X:B); Blahut-Arimoto inner, mirror descent outer.
CQCapacityResult solve_cq_sr(const CQChannelTable& table, double tol = 1e-4,
                             int max_iter = 5000);

// (1/n) inf_{sigma_{E^n}} sup over capped pure-signal ensembles of I(X:B^n),
// n in {1,2}. The ensemble cap (d_A)^{2n} is an approximation knob; the
// reported gap is relative to that class.
QQRegularizedResult regularized_qq_sr(const QuantumChannel& chan, std::size_t n,
                                      double tol = 1e-4, std::uint64_t seed = 0);

// Holevo quantity I(X:B) of the ensemble {p_x, rho_x} in bits.
double holevo_quantity(const std::vector<double>& p,
                       const std::vector<DensityMatrix>& states);

}  // namespace qadv
