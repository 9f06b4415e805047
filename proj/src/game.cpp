#include "qadv/game.hpp"

#include <algorithm>
#include <cmath>

namespace qadv {

namespace {

// channel on (A^n, E^n) applied to a state on (A^n, K, E^n); output (B^n, K)
Matrix apply_code_state(const QuantumChannel& chan, const Matrix& zeta,
                        std::size_t d_K, const Matrix& sigma) {
  const std::size_t dAn = chan.d_A(), dEn = chan.d_E(), dB = chan.d_B();
  Matrix full = kron(zeta, sigma);  // (A^n, K, E^n)
  full = permute_factors(full, SystemShape{dAn, d_K, dEn}, {0, 2, 1});
  // now (A^n, E^n, K): contract channel input, keep trailing K
  const std::size_t d_in = dAn * dEn;
  const auto& J = chan.choi();
  Matrix out = Matrix::Zero(dB * d_K, dB * d_K);
  for (std::size_t b = 0; b < dB; ++b)
    for (std::size_t bp = 0; bp < dB; ++bp)
      for (std::size_t k = 0; k < d_K; ++k)
        for (std::size_t kp = 0; kp < d_K; ++kp) {
          Complex v = 0;
          for (std::size_t i = 0; i < d_in; ++i)
            for (std::size_t ip = 0; ip < d_in; ++ip)
              v += full(i * d_K + k, ip * d_K + kp) * J(i * dB + b, ip * dB + bp);
          out(b * d_K + k, bp * d_K + kp) = v;
        }
  return out;
}

// adjoint with trailing spectator K: tr(D * out) = tr(X * zeta_with_sigma)
Matrix adjoint_with_spectator(const QuantumChannel& chan, const Matrix& obs,
                              std::size_t d_K) {
  const std::size_t d_in = chan.d_in(), dB = chan.d_B();
  const auto& J = chan.choi();
  Matrix X = Matrix::Zero(d_in * d_K, d_in * d_K);
  for (std::size_t i = 0; i < d_in; ++i)
    for (std::size_t ip = 0; ip < d_in; ++ip)
      for (std::size_t k = 0; k < d_K; ++k)
        for (std::size_t kp = 0; kp < d_K; ++kp) {
          Complex v = 0;
          for (std::size_t b = 0; b < dB; ++b)
            for (std::size_t bp = 0; bp < dB; ++bp)
              v += obs(b * d_K + k, bp * d_K + kp) * J(ip * dB + bp, i * dB + b);
          X(i * d_K + k, ip * d_K + kp) = v;
        }
  return X;
}

double success_raw(const Code& code, const QuantumChannel& chan,
                   const Matrix& sigma) {
  double s = 0;
  for (std::size_t m = 0; m < code.M; ++m) {
    const Matrix out =
        apply_code_state(chan, code.encoder_states[m].matrix(), code.d_K, sigma);
    s += (code.decoder_povm[m] * out).trace().real();
  }
  return s / static_cast<double>(code.M);
}

void check_code_dims(const Code& code, const QuantumChannel& chan) {
  if (code.encoder_states.size() != code.M ||
      code.decoder_povm.size() != code.M)
    throw DimensionError("code has wrong number of states/effects");
  if (code.encoder_states[0].dim() != chan.d_A() * code.d_K)
    throw DimensionError("encoder state dimension mismatch");
  if (static_cast<std::size_t>(code.decoder_povm[0].rows()) !=
      chan.d_B() * code.d_K)
    throw DimensionError("decoder effect dimension mismatch");
}

}  // namespace

void Code::validate() const {
  if (M < 2) throw InvalidState("code needs at least 2 messages");
  if (encoder_states.size() != M || decoder_povm.size() != M)
    throw InvalidState("code has wrong number of states/effects");
  const auto d = decoder_povm[0].rows();
  Matrix sum = Matrix::Zero(d, d);
  for (const auto& eff : decoder_povm) {
    if (eff.rows() != d || eff.cols() != d)
      throw InvalidState("ragged decoder POVM");
    if (!is_hermitian(eff, cfg().hermiticity_tol))
      throw InvalidState("decoder effect not Hermitian");
    if (min_eigenvalue(eff) < -cfg().psd_tol)
      throw InvalidState("decoder effect not PSD");
    sum += eff;
  }
  if (max_abs(sum - Matrix::Identity(d, d)) > cfg().tp_tol)
    throw InvalidState("decoder POVM does not sum to identity");
}

double error_probability(const Code& code, const QuantumChannel& chan,
                         const DensityMatrix& sigma) {
  check_code_dims(code, chan);
  if (sigma.dim() != chan.d_E())
    throw DimensionError("jammer state dimension mismatch");
  return 1.0 - success_raw(code, chan, sigma.matrix());
}

ErrorOperator error_operator(const Code& code, const QuantumChannel& chan) {
  check_code_dims(code, chan);
  const std::size_t dE = chan.d_E();
  // evaluate on the orthonormal symmetrized matrix-unit basis and rebuild
  Matrix T = Matrix::Zero(dE, dE);
  auto eval = [&](const Matrix& B) {
    return B.trace().real() - success_raw(code, chan, B);
  };
  for (std::size_t e = 0; e < dE; ++e)
    for (std::size_t ep = 0; ep <= e; ++ep) {
      Matrix B = Matrix::Zero(dE, dE);
      if (e == ep) {
        B(e, e) = 1.0;
        const double v = eval(B);
        T += v * B;
      } else {
        const double r = 1.0 / std::sqrt(2.0);
        B(e, ep) = B(ep, e) = r;
        const double vr = eval(B);
        Matrix Bi = Matrix::Zero(dE, dE);
        Bi(e, ep) = Complex(0, -r);
        Bi(ep, e) = Complex(0, r);
        const double vi = eval(Bi);
        T += vr * B + vi * Bi;
      }
    }
  T = 0.5 * (T + T.adjoint().eval());

  ErrorOperator op{T, ""};
  // reconstruction residual check on a deterministic probe set
  Rng rng(12345);
  for (int t = 0; t < 8; ++t) {
    const DensityMatrix s = random_density(dE, rng);
    const double direct = error_probability(code, chan, s);
    const double lin = (T * s.matrix()).trace().real();
    if (std::abs(direct - lin) > cfg().reconstruction_tol)
      throw InvalidState("error-operator reconstruction residual " +
                         std::to_string(std::abs(direct - lin)));
  }
  return op;
}

std::pair<double, DensityMatrix> worst_case_error(const Code& code,
                                                  const QuantumChannel& chan) {
  const ErrorOperator op = error_operator(code, chan);
  auto [vals, vecs] = herm_eig(op.matrix);
  const Eigen::Index top = vals.size() - 1;
  const Vector v = vecs.col(top);
  return {vals(top), DensityMatrix(v * v.adjoint())};
}

namespace {

Matrix pinv_sqrt(const Matrix& psd) {
  auto [vals, vecs] = herm_eig(psd);
  const double cut = std::max(vals.maxCoeff(), 0.0) * cfg().support_rel_tol;
  RealVector s(vals.size());
  for (Eigen::Index i = 0; i < vals.size(); ++i)
    s(i) = vals(i) > cut ? 1.0 / std::sqrt(vals(i)) : 0.0;
  return vecs * s.asDiagonal() * vecs.adjoint();
}

double povm_success(const std::vector<Matrix>& povm,
                    const std::vector<DensityMatrix>& outputs) {
  double s = 0;
  for (std::size_t m = 0; m < povm.size(); ++m)
    s += (povm[m] * outputs[m].matrix()).trace().real();
  return s / static_cast<double>(povm.size());
}

}  // namespace

std::vector<Matrix> best_decoder(const std::vector<DensityMatrix>& outputs,
                                 int max_iter) {
  const std::size_t M = outputs.size();
  if (M < 2) throw DimensionError("need at least two output states");
  const std::size_t d = outputs[0].dim();
  const Matrix I = Matrix::Identity(d, d);

  if (M == 2) {
    // Helstrom measurement is exactly optimal for two states
    auto [vals, vecs] = herm_eig(outputs[0].matrix() - outputs[1].matrix());
    Matrix D0 = Matrix::Zero(d, d);
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
      if (vals(i) > 1e-12)
        D0 += vecs.col(i) * vecs.col(i).adjoint();
      else if (vals(i) > -1e-12)
        D0 += 0.5 * (vecs.col(i) * vecs.col(i).adjoint());
    }
    return {D0, I - D0};
  }

  // pretty-good measurement seed
  Matrix S = Matrix::Zero(d, d);
  for (const auto& o : outputs) S += o.matrix() / static_cast<double>(M);
  const Matrix si = pinv_sqrt(S);
  Matrix supp = si * S * si;  // support projector of S
  std::vector<Matrix> povm(M);
  for (std::size_t m = 0; m < M; ++m)
    povm[m] = si * (outputs[m].matrix() / static_cast<double>(M)) * si +
              (I - supp) / static_cast<double>(M);

  // fixed-point refinement, reverting if an update ever decreases success
  double succ = povm_success(povm, outputs);
  for (int it = 0; it < max_iter; ++it) {
    Matrix lambda = Matrix::Zero(d, d);
    std::vector<Matrix> next(M);
    for (std::size_t m = 0; m < M; ++m)
      lambda += outputs[m].matrix() * povm[m] * outputs[m].matrix();
    const Matrix li = pinv_sqrt(0.5 * (lambda + lambda.adjoint().eval()));
    Matrix tot = Matrix::Zero(d, d);
    for (std::size_t m = 0; m < M; ++m) {
      next[m] = li * outputs[m].matrix() * povm[m] * outputs[m].matrix() * li;
      next[m] = 0.5 * (next[m] + next[m].adjoint().eval());
      tot += next[m];
    }
    // repair completeness drift off the support
    const Matrix rest = I - tot;
    for (std::size_t m = 0; m < M; ++m)
      next[m] += rest / static_cast<double>(M);
    const double nsucc = povm_success(next, outputs);
    if (nsucc < succ + 1e-14) break;
    povm = std::move(next);
    succ = nsucc;
  }
  return povm;
}

std::vector<DensityMatrix> best_encoder(const std::vector<Matrix>& decoder_povm,
                                        const QuantumChannel& chan,
                                        const DensityMatrix& sigma,
                                        std::size_t M, std::size_t d_K) {
  const QuantumChannel fixed = fix_jammer(chan, sigma);
  std::vector<DensityMatrix> enc;
  enc.reserve(M);
  for (std::size_t m = 0; m < M; ++m) {
    const Matrix X = adjoint_with_spectator(fixed, decoder_povm[m], d_K);
    auto [vals, vecs] = herm_eig(X);
    const Vector v = vecs.col(vals.size() - 1);
    enc.emplace_back(Matrix(v * v.adjoint()));
  }
  return enc;
}

Code see_saw_code(const QuantumChannel& chan, const DensityMatrix& sigma,
                  std::size_t M, int restarts, double tol, Rng& rng,
                  std::size_t d_K) {
  const std::size_t d_enc = chan.d_A() * d_K;
  Code best;
  double best_succ = -1;
  for (int rs = 0; rs < std::max(restarts, 1); ++rs) {
    Code code;
    code.M = M;
    code.d_K = d_K;
    for (std::size_t m = 0; m < M; ++m)
      code.encoder_states.push_back(haar_random_pure(d_enc, rng).projector());
    if (d_K > 1) code.resource = maximally_entangled(d_K);
    double succ = -1;
    for (int it = 0; it < 100; ++it) {
      std::vector<DensityMatrix> outs;
      for (std::size_t m = 0; m < M; ++m)
        outs.emplace_back(apply_code_state(chan, code.encoder_states[m].matrix(),
                                           d_K, sigma.matrix()));
      code.decoder_povm = best_decoder(outs);
      code.encoder_states =
          best_encoder(code.decoder_povm, chan, sigma, M, d_K);
      const double s = success_raw(code, chan, sigma.matrix());
      if (s < succ + tol) {
        succ = std::max(succ, s);
        break;
      }
      succ = s;
    }
    if (succ > best_succ) {
      best_succ = succ;
      best = code;
    }
  }
  return best;
}

GameResult double_oracle(const QuantumChannel& chan, std::size_t M,
                         std::size_t n, double tol, int max_rounds,
                         std::uint64_t seed, std::size_t d_K) {
  const QuantumChannel nf = n == 1 ? chan : n_fold(chan, n);
  const std::size_t dEn = nf.d_E();
  Rng rng(seed);

  GameResult res;
  res.jammer_pool.push_back(DensityMatrix::maximally_mixed(dEn));
  {
    Code c0 = see_saw_code(nf, res.jammer_pool[0], M, 3, tol / 10, rng, d_K);
    c0.n = n;
    res.code_pool.push_back(std::move(c0));
  }
  std::vector<Matrix> ops;
  ops.push_back(error_operator(res.code_pool[0], nf).matrix);

  double best_lower = std::numeric_limits<double>::infinity();
  double best_upper = -std::numeric_limits<double>::infinity();
  std::vector<double> best_q, best_pj;
  std::size_t best_q_size = 1, best_pj_size = 1;

  for (int round = 1; round <= max_rounds; ++round) {
    const std::size_t nc = res.code_pool.size(), nj = res.jammer_pool.size();
    Eigen::MatrixXd A(nj, nc);
    for (std::size_t j = 0; j < nj; ++j)
      for (std::size_t i = 0; i < nc; ++i)
        A(j, i) = (ops[i] * res.jammer_pool[j].matrix()).trace().real();
    const MatrixGameSolution lp = solve_matrix_game(A);

    // exact jammer best response to the optimal code mixture
    Matrix Tmix = Matrix::Zero(dEn, dEn);
    for (std::size_t i = 0; i < nc; ++i) Tmix += lp.col_mixture(i) * ops[i];
    auto [tv, tvec] = herm_eig(Tmix);
    const double lower = tv(tv.size() - 1);
    if (lower < best_lower) {
      best_lower = lower;
      best_q.assign(lp.col_mixture.data(), lp.col_mixture.data() + nc);
      best_q_size = nc;
    }

    // see-saw code response to the optimal jammer mixture
    Matrix sig_mix = Matrix::Zero(dEn, dEn);
    for (std::size_t j = 0; j < nj; ++j)
      sig_mix += lp.row_mixture(j) * res.jammer_pool[j].matrix();
    const DensityMatrix sigma_bar{sig_mix};
    Code cand = see_saw_code(nf, sigma_bar, M, 3, tol / 10, rng, d_K);
    cand.n = n;
    const Matrix Tc = error_operator(cand, nf).matrix;
    double upper = (Tc * sig_mix).trace().real();
    for (std::size_t i = 0; i < nc; ++i)
      upper = std::min(upper, (ops[i] * sig_mix).trace().real());
    if (upper > best_upper) {
      best_upper = upper;
      best_pj.assign(lp.row_mixture.data(), lp.row_mixture.data() + nj);
      best_pj_size = nj;
    }

    res.trace.push_back(
        {round, best_lower, best_upper, best_lower - best_upper});
    res.gap = best_lower - best_upper;
    if (res.gap <= tol) {
      res.converged = true;
      break;
    }

    const bool jammer_helps = lower > lp.value + tol / 10;
    const bool code_helps =
        (Tc * sig_mix).trace().real() < lp.value - tol / 10;
    if (!jammer_helps && !code_helps) break;
    if (jammer_helps) {
      const Vector v = tvec.col(tv.size() - 1);
      res.jammer_pool.emplace_back(Matrix(v * v.adjoint()));
    }
    if (code_helps) {
      res.code_pool.push_back(std::move(cand));
      ops.push_back(Tc);
    }
  }

  res.lower_value = best_lower;
  res.upper_value = best_upper;
  res.gap = best_lower - best_upper;
  res.code_mixture.assign(res.code_pool.size(), 0.0);
  for (std::size_t i = 0; i < best_q_size && i < best_q.size(); ++i)
    res.code_mixture[i] = best_q[i];
  res.jammer_mixture.assign(res.jammer_pool.size(), 0.0);
  for (std::size_t j = 0; j < best_pj_size && j < best_pj.size(); ++j)
    res.jammer_mixture[j] = best_pj[j];
  return res;
}

namespace {

std::vector<std::vector<std::size_t>> all_words(std::size_t alphabet,
                                                std::size_t n) {
  std::vector<std::vector<std::size_t>> words;
  std::vector<std::size_t> w(n, 0);
  while (true) {
    words.push_back(w);
    std::size_t k = n;
    while (k > 0) {
      if (++w[k - 1] < alphabet) break;
      w[--k] = 0;
    }
    if (k == 0) break;
  }
  return words;
}

}  // namespace

GameResult classical_game_value(const ClassicalTable& table, std::size_t M,
                                std::size_t n) {
  table.validate();
  if (table.n_X > 4 || table.n_Y > 4 || table.n_E > 4 || n > 2 || M > 4 || M < 2)
    throw DimensionError("classical game caps exceeded (|X|,|Y|,|E| <= 4, n <= 2, M <= 4)");

  const auto xwords = all_words(table.n_X, n);
  const auto ywords = all_words(table.n_Y, n);
  const auto ewords = all_words(table.n_E, n);

  auto wn = [&](const std::vector<std::size_t>& y,
                const std::vector<std::size_t>& x,
                const std::vector<std::size_t>& e) {
    double p = 1;
    for (std::size_t k = 0; k < n; ++k) p *= table.W[y[k]][x[k]][e[k]];
    return p;
  };

  // encoders: M-tuples of codewords; decoders: maps Y^n -> message
  std::vector<std::vector<std::size_t>> encoders;
  {
    std::vector<std::size_t> idx(M, 0);
    while (true) {
      encoders.push_back(idx);
      std::size_t k = M;
      while (k > 0) {
        if (++idx[k - 1] < xwords.size()) break;
        idx[--k] = 0;
      }
      if (k == 0) break;
    }
  }
  const auto decoders = all_words(M, ywords.size());
  const std::size_t n_codes = encoders.size() * decoders.size();
  if (n_codes > 2'000'000 || n_codes * ewords.size() > 50'000'000)
    throw DimensionError("deterministic code enumeration too large");

  Eigen::MatrixXd A(ewords.size(), n_codes);  // rows: jammer words (maximizer)
  std::size_t col = 0;
  for (const auto& enc : encoders)
    for (const auto& dec : decoders) {
      for (std::size_t j = 0; j < ewords.size(); ++j) {
        double succ = 0;
        for (std::size_t m = 0; m < M; ++m)
          for (std::size_t yi = 0; yi < ywords.size(); ++yi)
            if (dec[yi] == m) succ += wn(ywords[yi], xwords[enc[m]], ewords[j]);
        A(j, col) = 1.0 - succ / static_cast<double>(M);
      }
      ++col;
    }

  const MatrixGameSolution lp = solve_matrix_game(A);
  GameResult res;
  res.lower_value = lp.upper;   // guaranteed by the code mixture
  res.upper_value = lp.lower;   // guaranteed by the jammer mixture
  res.gap = std::abs(lp.gap);
  res.code_mixture.assign(lp.col_mixture.data(),
                          lp.col_mixture.data() + lp.col_mixture.size());
  res.jammer_mixture.assign(lp.row_mixture.data(),
                            lp.row_mixture.data() + lp.row_mixture.size());
  res.converged = res.gap <= cfg().lp_gap_tol * 100;
  return res;
}

double entanglement_fidelity_payoff(const QuantumChannel& encoder,
                                    const QuantumChannel& decoder,
                                    const QuantumChannel& chan,
                                    const DensityMatrix& sigma) {
  if (encoder.d_E() != 1 || decoder.d_E() != 1)
    throw DimensionError("code maps must not have jammer slots");
  if (encoder.d_B() != chan.d_A() || decoder.d_A() != chan.d_B() ||
      decoder.d_B() != encoder.d_A() || sigma.dim() != chan.d_E())
    throw DimensionError("entanglement-fidelity dimension mismatch");
  const std::size_t dM = encoder.d_A();
  const Vector gamma = maximally_entangled(dM).amplitudes();
  const Matrix state = gamma * gamma.adjoint();  // (M', M)
  // encode the M half, pass through the jammed channel, decode
  Matrix enc_out = Matrix::Zero(dM * chan.d_A(), dM * chan.d_A());
  {
    const auto& J = encoder.choi();
    const std::size_t dB = encoder.d_B();
    for (std::size_t s = 0; s < dM; ++s)
      for (std::size_t sp = 0; sp < dM; ++sp)
        for (std::size_t b = 0; b < dB; ++b)
          for (std::size_t bp = 0; bp < dB; ++bp) {
            Complex v = 0;
            for (std::size_t i = 0; i < dM; ++i)
              for (std::size_t ip = 0; ip < dM; ++ip)
                v += state(s * dM + i, sp * dM + ip) * J(i * dB + b, ip * dB + bp);
            enc_out(s * dB + b, sp * dB + bp) = v;
          }
  }
  // joint with the jammer state: factors (M', A, E) already match the
  // channel's (A, E) input ordering
  const Matrix with_sigma = kron(enc_out, sigma.matrix());
  const std::size_t d_in = chan.d_in(), dB = chan.d_B();
  Matrix chan_out = Matrix::Zero(dM * dB, dM * dB);
  {
    const auto& J = chan.choi();
    for (std::size_t s = 0; s < dM; ++s)
      for (std::size_t sp = 0; sp < dM; ++sp)
        for (std::size_t b = 0; b < dB; ++b)
          for (std::size_t bp = 0; bp < dB; ++bp) {
            Complex v = 0;
            for (std::size_t i = 0; i < d_in; ++i)
              for (std::size_t ip = 0; ip < d_in; ++ip)
                v += with_sigma(s * d_in + i, sp * d_in + ip) *
                     J(i * dB + b, ip * dB + bp);
            chan_out(s * dB + b, sp * dB + bp) = v;
          }
  }
  Matrix dec_out = Matrix::Zero(dM * dM, dM * dM);
  {
    const auto& J = decoder.choi();
    const std::size_t di = decoder.d_A();
    for (std::size_t s = 0; s < dM; ++s)
      for (std::size_t sp = 0; sp < dM; ++sp)
        for (std::size_t b = 0; b < dM; ++b)
          for (std::size_t bp = 0; bp < dM; ++bp) {
            Complex v = 0;
            for (std::size_t i = 0; i < di; ++i)
              for (std::size_t ip = 0; ip < di; ++ip)
                v += chan_out(s * di + i, sp * di + ip) * J(i * dM + b, ip * dM + bp);
            dec_out(s * dM + b, sp * dM + bp) = v;
          }
  }
  return (gamma.adjoint() * dec_out * gamma)(0, 0).real();
}

}  // namespace qadv
