#pragma once

#include <limits>
#include <optional>
#include <string>

#include "qadv/qstate.hpp"

namespace qadv {

inline constexpr double kInfBits = std::numeric_limits<double>::infinity();

struct DivergenceResult {
  double value = 0.0;  // bits; may be +inf
  std::optional<Matrix> achiever;  // optimal test operator, when applicable
  std::string diagnostics;
};

// All values in bits (log base 2).
double von_neumann_entropy(const DensityMatrix& rho);
double entropy_of_spectrum(const RealVector& clipped);

// +inf when supp(rho) is not contained in supp(sigma).
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

// S(A) + S(B) - S(AB) for a bipartite shape.
double mutual_information(const DensityMatrix& rho_AB, const SystemShape& shape);

// S(B) - S(AB); may be negative.
double coherent_information(const DensityMatrix& rho_AB, const SystemShape& shape);

// Max-relative entropy: log2 of the least lambda with rho <= 2^lambda sigma.
double dmax(const DensityMatrix& rho, const DensityMatrix& sigma);

// Hypothesis-testing divergence D_h^eps:
//   -log2 min{ tr(M sigma) : 0 <= M <= I, tr(M rho) >= 1 - eps }.
// Solved by the quantum Neyman-Pearson construction: the optimal test is the
// positive spectral part of rho - t*sigma plus a fractional weight on its
// near-zero eigenspace, with t located by bisection on tr(M rho).
DivergenceResult dh(const DensityMatrix& rho, const DensityMatrix& sigma,
                    double eps);

double binary_entropy(double p);

}  // namespace qadv
