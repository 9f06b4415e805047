#include "qadv/matrix_game.hpp"

#include <limits>

#include "qadv/config.hpp"

namespace qadv {

namespace {
constexpr double kPivotTol = 1e-11;
}

MatrixGameSolution solve_matrix_game(const Eigen::MatrixXd& payoff) {
  const Eigen::Index R = payoff.rows(), C = payoff.cols();
  if (R == 0 || C == 0) throw LPError("empty payoff matrix");

  // shift so all entries >= 1; the game value shifts by the same constant
  const double shift = 1.0 - payoff.minCoeff();
  const Eigen::MatrixXd A = payoff.array() + shift;

  // max 1'w  s.t.  A w <= 1, w >= 0; slack basis is feasible
  const Eigen::Index n = C + R;
  Eigen::MatrixXd T(R, n + 1);
  T.block(0, 0, R, C) = A;
  T.block(0, C, R, R) = Eigen::MatrixXd::Identity(R, R);
  T.col(n).setOnes();
  Eigen::VectorXd obj = Eigen::VectorXd::Zero(n + 1);
  obj.head(C).setOnes();
  std::vector<Eigen::Index> basis(R);
  for (Eigen::Index r = 0; r < R; ++r) basis[r] = C + r;

  const int max_pivots = 20000;
  for (int iter = 0;; ++iter) {
    if (iter > max_pivots) throw LPError("simplex pivot limit exceeded");
    // Bland: lowest-index entering variable with positive reduced cost
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < n; ++j)
      if (obj(j) > kPivotTol) {
        enter = j;
        break;
      }
    if (enter < 0) break;

    Eigen::Index leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (Eigen::Index r = 0; r < R; ++r) {
      if (T(r, enter) > kPivotTol) {
        const double ratio = T(r, n) / T(r, enter);
        if (ratio < best_ratio - 1e-15 ||
            (ratio < best_ratio + 1e-15 &&
             (leave < 0 || basis[r] < basis[leave]))) {
          best_ratio = ratio;
          leave = r;
        }
      }
    }
    if (leave < 0) throw LPError("unbounded LP (internal bug)");

    T.row(leave) /= T(leave, enter);
    for (Eigen::Index r = 0; r < R; ++r)
      if (r != leave && std::abs(T(r, enter)) > 0)
        T.row(r) -= T(r, enter) * T.row(leave);
    obj -= obj(enter) * T.row(leave).transpose();
    basis[leave] = enter;
  }

  Eigen::VectorXd w = Eigen::VectorXd::Zero(C);
  for (Eigen::Index r = 0; r < R; ++r)
    if (basis[r] < C) w(basis[r]) = T(r, n);
  Eigen::VectorXd u(R);
  for (Eigen::Index r = 0; r < R; ++r) u(r) = std::max(0.0, -obj(C + r));

  const double zw = w.sum(), zu = u.sum();
  if (zw <= 0 || zu <= 0) throw LPError("degenerate game LP solution");

  MatrixGameSolution sol;
  sol.col_mixture = w / zw;
  sol.row_mixture = u / zu;
  sol.lower = (sol.row_mixture.transpose() * payoff).minCoeff();
  sol.upper = (payoff * sol.col_mixture).maxCoeff();
  sol.gap = sol.upper - sol.lower;
  sol.value = 1.0 / zw - shift;
  if (sol.gap > 100 * cfg().lp_gap_tol)
    throw LPError("matrix-game duality gap " + std::to_string(sol.gap));
  return sol;
}

}  // namespace qadv
