#pragma once

#include <optional>

#include "qadv/channels.hpp"
#include "qadv/matrix_game.hpp"
#include "qadv/random.hpp"

namespace qadv {

// Shared-randomness / entanglement-assisted code for M messages over n uses.
// encoder_states live on A^n (x) K and decoder effects on B^n (x) K, where
// K is the receiver half of the assistance resource (d_K = 1: plain code).
// Arbitrary signal states on A^n (x) K model any shared pure resource of
// Schmidt rank <= d_K; `resource` records the nominal shared state.
struct Code {
  std::size_t n = 1;
  std::size_t M = 2;
  std::size_t d_K = 1;
  std::vector<DensityMatrix> encoder_states;
  std::vector<Matrix> decoder_povm;
  std::optional<PureState> resource;

  void validate() const;  // POVM completeness and PSD, state validity
};

struct ErrorOperator {
  Matrix matrix;  // Hermitian on E^n; error(sigma) = tr(matrix * sigma)
  std::string code_ref;
};

struct GameRound {
  int round = 0;
  double lower = 0.0, upper = 0.0, gap = 0.0;
};

struct GameResult {
  double lower_value = 0.0;  // min over code mixtures of exact worst-case error
  double upper_value = 0.0;  // best known code response to the jammer mixture
  double gap = 0.0;
  std::vector<double> code_mixture;
  std::vector<double> jammer_mixture;
  std::vector<Code> code_pool;
  std::vector<DensityMatrix> jammer_pool;
  std::vector<GameRound> trace;
  bool converged = false;
};

// chan must already be the n-fold jammed channel matching the code.
double error_probability(const Code& code, const QuantumChannel& chan,
                         const DensityMatrix& sigma);

// T with error(sigma) = tr(T sigma), assembled by evaluating the error on a
// symmetrized matrix-unit basis of E^n and reconstructing linearly.
ErrorOperator error_operator(const Code& code, const QuantumChannel& chan);

// (lambda_max(T), top-eigenvector projector): exact jammer best response.
std::pair<double, DensityMatrix> worst_case_error(const Code& code,
                                                  const QuantumChannel& chan);

// Minimum-error discrimination of the given output states under the uniform
// prior. Helstrom for two states; PGM seed plus monotone-guarded fixed-point
// refinement otherwise.
std::vector<Matrix> best_decoder(const std::vector<DensityMatrix>& outputs,
                                 int max_iter = 200);

std::vector<DensityMatrix> best_encoder(const std::vector<Matrix>& decoder_povm,
                                        const QuantumChannel& chan,
                                        const DensityMatrix& sigma,
                                        std::size_t M, std::size_t d_K = 1);

Code see_saw_code(const QuantumChannel& chan, const DensityMatrix& sigma,
                  std::size_t M, int restarts, double tol, Rng& rng,
                  std::size_t d_K = 1);

// Double-oracle solve of the code-vs-jammer zero-sum game on N^{(x)n}.
// The jammer side expands by exact eigenvector best responses; the code side
// by see-saw, so lower_value is a certified guarantee while upper_value is
// only as good as the see-saw oracle.
GameResult double_oracle(const QuantumChannel& chan, std::size_t M,
                         std::size_t n, double tol, int max_rounds,
                         std::uint64_t seed = 0, std::size_t d_K = 1);

// Exact LP value of the classical game by full deterministic-code enumeration.
GameResult classical_game_value(const ClassicalTable& table, std::size_t M,
                                std::size_t n);

// Entanglement-fidelity payoff <gamma|(id (x) D o N_sigma o E)(gamma)|gamma>
// for quantum-message codes given as encoding/decoding CPTP maps; bilinear in
// sigma and in the joint code map.
double entanglement_fidelity_payoff(const QuantumChannel& encoder,
                                    const QuantumChannel& decoder,
                                    const QuantumChannel& chan,
                                    const DensityMatrix& sigma);

}  // namespace qadv
