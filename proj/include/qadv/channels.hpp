#pragma once

#include <vector>

#include "qadv/qstate.hpp"

namespace qadv {

// CPTP map N_{AE->B}, stored as its Choi operator with factor order
// (A, E, B) and the unnormalized convention tr_B(choi) = I_{AE}.
// E is the jammer slot; d_E = 1 models a channel with no jammer.
class QuantumChannel {
 public:
  QuantumChannel(std::size_t d_A, std::size_t d_E, std::size_t d_B, Matrix choi);

  std::size_t d_A() const { return d_A_; }
  std::size_t d_E() const { return d_E_; }
  std::size_t d_B() const { return d_B_; }
  std::size_t d_in() const { return d_A_ * d_E_; }
  const Matrix& choi() const { return choi_; }

 private:
  std::size_t d_A_, d_E_, d_B_;
  Matrix choi_;
};

// Finite input alphabet X; per-symbol channels E->B (d_A = 1).
struct CQChannelTable {
  std::vector<QuantumChannel> per_symbol;

  std::size_t alphabet_size() const { return per_symbol.size(); }
  std::size_t d_E() const { return per_symbol.at(0).d_E(); }
  std::size_t d_B() const { return per_symbol.at(0).d_B(); }

  void validate() const;
};

// Classical table W(y|x,e), stored as W[y][x][e].
struct ClassicalTable {
  std::size_t n_X = 0, n_E = 0, n_Y = 0;
  std::vector<std::vector<std::vector<double>>> W;

  void validate() const;
};

// Kraus operators are d_B x (d_A*d_E), input index (a,e) row-major.
QuantumChannel from_kraus(std::size_t d_A, std::size_t d_E, std::size_t d_B,
                          const std::vector<Matrix>& kraus_ops);

QuantumChannel identity_channel(std::size_t d);

// Induced channel A->B at a fixed jammer state: rho -> N(rho (x) sigma).
QuantumChannel fix_jammer(const QuantumChannel& chan, const DensityMatrix& sigma);

DensityMatrix apply(const QuantumChannel& chan, const DensityMatrix& rho);
Matrix apply_raw(const QuantumChannel& chan, const Matrix& rho);

// Heisenberg-picture adjoint; unital on the identity.
Matrix apply_adjoint(const QuantumChannel& chan, const Matrix& obs);

// Choi of N^{(x)n}, inputs regrouped so (A^n, E^n) are contiguous blocks.
QuantumChannel n_fold(const QuantumChannel& chan, std::size_t n);

// Completely dephasing embedding of W(y|x,e) with A = X, E, B = Y classical.
QuantumChannel classical_to_quantum(const ClassicalTable& table);

// Per-symbol E->B channels sigma -> sum_{e,y} W(y|x,e) sigma_ee |y><y|.
CQChannelTable cq_table_from_classical(const ClassicalTable& table);

// CQ table as a jammed quantum channel that dephases A in the X basis.
QuantumChannel cq_embed(const CQChannelTable& table);

// Kraus decomposition recovered from the Choi eigenvectors.
std::vector<Matrix> kraus_of(const QuantumChannel& chan);

// Complementary channel to the environment, from the Choi rank decomposition.
// complementary(chan, rho)[k][l] = tr(K_k rho K_l^dag).
Matrix apply_complementary(const std::vector<Matrix>& kraus, const Matrix& rho);

}  // namespace qadv
