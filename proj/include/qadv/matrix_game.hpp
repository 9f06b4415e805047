#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

namespace qadv {

struct MatrixGameSolution {
  double value = 0.0;          // max_x min_y x^T A y
  Eigen::VectorXd row_mixture;  // maximizer
  Eigen::VectorXd col_mixture;  // minimizer
  double lower = 0.0;  // min_c (x^T A)_c, guaranteed by the row mixture
  double upper = 0.0;  // max_r (A y)_r, guaranteed by the column mixture
  double gap = 0.0;    // upper - lower
};

struct LPError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Zero-sum matrix game: row player maximizes, column player minimizes.
// Self-contained dense simplex on the standard reciprocal-value LP; Bland's
// lowest-index rule for both entering and leaving variables.
MatrixGameSolution solve_matrix_game(const Eigen::MatrixXd& payoff);

}  // namespace qadv
