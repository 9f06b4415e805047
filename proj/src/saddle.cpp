#include "qadv/saddle.hpp"

#include <algorithm>
#include <cmath>

namespace qadv {

namespace {

constexpr double kLn2 = 0.6931471805599453;

// channel applied to the trailing (A,E) factors of a state on spec (x) in
Matrix apply_with_spectator(std::size_t spec_dim, const QuantumChannel& chan,
                            const Matrix& state) {
  const std::size_t d_in = chan.d_in(), dB = chan.d_B();
  if (static_cast<std::size_t>(state.rows()) != spec_dim * d_in)
    throw DimensionError("spectator state dimension mismatch");
  const auto& J = chan.choi();
  Matrix out = Matrix::Zero(spec_dim * dB, spec_dim * dB);
  for (std::size_t s = 0; s < spec_dim; ++s)
    for (std::size_t sp = 0; sp < spec_dim; ++sp)
      for (std::size_t b = 0; b < dB; ++b)
        for (std::size_t bp = 0; bp < dB; ++bp) {
          Complex v = 0;
          for (std::size_t i = 0; i < d_in; ++i)
            for (std::size_t ip = 0; ip < d_in; ++ip)
              v += state(s * d_in + i, sp * d_in + ip) * J(i * dB + b, ip * dB + bp);
          out(s * dB + b, sp * dB + bp) = v;
        }
  return out;
}

// ln with a floor, for mirror steps (never clips to 0 like matrix_log2)
Matrix ln_floored(const Matrix& psd) {
  auto [vals, vecs] = herm_eig(psd);
  RealVector s(vals.size());
  for (Eigen::Index i = 0; i < vals.size(); ++i)
    s(i) = std::log(std::max(vals(i), 1e-280));
  return vecs * s.asDiagonal() * vecs.adjoint();
}

DensityMatrix mirror_step(const DensityMatrix& x, const Matrix& grad_bits,
                          double eta) {
  // exp(ln x + eta * ln2 * G), renormalized to unit trace
  Matrix e = matrix_exp_herm(ln_floored(x.matrix()) + (eta * kLn2) * grad_bits);
  e /= e.trace();
  return DensityMatrix(std::move(e));
}

Matrix purification_projector(const DensityMatrix& rho) {
  const Vector v = canonical_purification(rho).amplitudes();
  return v * v.adjoint();
}

struct InnerResult {
  DensityMatrix x = DensityMatrix::maximally_mixed(1);
  double value = 0.0;
  double bound = 0.0;  // certified one-sided bound
  int iterations = 0;
};

// adaptive proximal entropic mirror ascent of a concave objective over states;
// bound = min over iterates of the simplex linearization upper bound
template <typename F, typename G>
InnerResult ascend(const DensityMatrix& x0, F&& value_of, G&& grad_of,
                   double tol, int max_iter) {
  InnerResult best;
  best.x = x0;
  best.value = value_of(x0);
  best.bound = std::numeric_limits<double>::infinity();
  DensityMatrix x = x0;
  double val = best.value, eta = 1.0;
  for (int k = 0; k < max_iter; ++k) {
    const Matrix g = grad_of(x);
    const double ub =
        val + herm_eig(g).values.maxCoeff() - (g * x.matrix()).trace().real();
    best.bound = std::min(best.bound, ub);
    if (val > best.value) {
      best.value = val;
      best.x = x;
    }
    best.iterations = k + 1;
    if (best.bound - best.value <= tol) break;
    DensityMatrix next = mirror_step(x, g, eta);
    const double nval = value_of(next);
    if (nval >= val - 1e-13) {
      x = std::move(next);
      val = nval;
      eta = std::min(eta * 1.25, 1e4);
    } else {
      eta = std::max(eta * 0.5, 1e-10);
    }
  }
  return best;
}

template <typename F, typename G>
InnerResult descend(const DensityMatrix& x0, F&& value_of, G&& grad_of,
                    double tol, int max_iter) {
  auto neg_val = [&](const DensityMatrix& x) { return -value_of(x); };
  auto neg_grad = [&](const DensityMatrix& x) { return Matrix(-grad_of(x)); };
  InnerResult r = ascend(x0, neg_val, neg_grad, tol, max_iter);
  r.value = -r.value;
  r.bound = -r.bound;  // certified lower bound
  return r;
}

}  // namespace

double payoff_ea(const QuantumChannel& chan, const DensityMatrix& rho,
                 const DensityMatrix& sigma) {
  if (rho.dim() != chan.d_A() || sigma.dim() != chan.d_E())
    throw DimensionError("payoff_ea dimension mismatch");
  const Matrix full = kron(purification_projector(rho), sigma.matrix());
  const Matrix omega = apply_with_spectator(chan.d_A(), chan, full);
  return mutual_information(DensityMatrix(omega),
                            SystemShape{chan.d_A(), chan.d_B()});
}

Matrix payoff_ea_grad_rho(const QuantumChannel& chan, const DensityMatrix& rho,
                          const DensityMatrix& sigma) {
  // payoff = S(rho) + S(M(rho^T)) - S(M_c(rho^T)) with M the fixed-jammer
  // channel and M_c its complementary channel
  const QuantumChannel M = fix_jammer(chan, sigma);
  const auto kraus = kraus_of(M);
  const Matrix rho_t = rho.matrix().transpose();
  const Matrix out = apply_raw(M, rho_t);
  const Matrix env = apply_complementary(kraus, rho_t);
  const std::size_t d = rho.dim();
  const Matrix c = Matrix::Identity(d, d) / kLn2;

  const Matrix t1 = -(matrix_log2(rho.matrix()) + c);
  Matrix adj_out = apply_adjoint(M, matrix_log2(out));
  Matrix adj_env = Matrix::Zero(d, d);
  const Matrix lenv = matrix_log2(env);
  for (std::size_t k = 0; k < kraus.size(); ++k)
    for (std::size_t l = 0; l < kraus.size(); ++l)
      adj_env += lenv(l, k) * (kraus[l].adjoint() * kraus[k]);
  // the 1/ln2 constants of the two channel terms cancel (both adjoints are
  // unital on A)
  return t1 - adj_out.transpose() + adj_env.transpose();
}

Matrix payoff_ea_grad_sigma(const QuantumChannel& chan, const DensityMatrix& rho,
                            const DensityMatrix& sigma) {
  const std::size_t dA = chan.d_A(), dB = chan.d_B(), dE = chan.d_E();
  const Matrix P = purification_projector(rho);
  const Matrix omega =
      apply_with_spectator(dA, chan, kron(P, sigma.matrix()));
  const SystemShape sh{dA, dB};
  const Matrix la = matrix_log2(partial_trace(omega, sh, {0}));
  const Matrix lb = matrix_log2(partial_trace(omega, sh, {1}));
  const Matrix g_omega = matrix_log2(omega) -
                         kron(la, Matrix::Identity(dB, dB)) -
                         kron(Matrix::Identity(dA, dA), lb);
  // omega is affine in sigma: pull g_omega back through a Hermitian basis
  Matrix g = Matrix::Zero(dE, dE);
  for (std::size_t e = 0; e < dE; ++e)
    for (std::size_t ep = 0; ep <= e; ++ep) {
      Matrix B = Matrix::Zero(dE, dE);
      if (e == ep) {
        B(e, e) = 1.0;
        const Matrix w = apply_with_spectator(dA, chan, kron(P, B));
        g(e, e) = (g_omega * w).trace().real();
      } else {
        B(e, ep) = B(ep, e) = 1.0 / std::sqrt(2.0);
        const Matrix wr = apply_with_spectator(dA, chan, kron(P, B));
        const double cr = (g_omega * wr).trace().real();
        B(e, ep) = Complex(0, -1.0 / std::sqrt(2.0));
        B(ep, e) = Complex(0, 1.0 / std::sqrt(2.0));
        const Matrix wi = apply_with_spectator(dA, chan, kron(P, B));
        const double ci = (g_omega * wi).trace().real();
        // g = cr*B_real + ci*B_imag with B_imag(e,ep) = -i/sqrt(2)
        g(e, ep) = (cr - Complex(0, 1) * ci) / std::sqrt(2.0);
        g(ep, e) = std::conj(g(e, ep));
      }
    }
  return g;
}

SaddleResult solve_ea_saddle(const QuantumChannel& chan, double tol,
                             int max_iter) {
  const std::size_t dA = chan.d_A(), dE = chan.d_E();
  const double inner_tol = tol / 4;
  const int inner_iter = std::max(200, max_iter / 10);

  // outer adaptive mirror descent on the jammer state with Danskin
  // gradients; the step accepts only if the certified sup value decreased
  DensityMatrix sigma = DensityMatrix::maximally_mixed(dE);
  DensityMatrix trial = sigma;
  DensityMatrix rho0 = DensityMatrix::maximally_mixed(dA);
  Matrix g_acc;
  double phi_acc = std::numeric_limits<double>::infinity();
  double eta = 1.0;

  double U = std::numeric_limits<double>::infinity();
  double L = -std::numeric_limits<double>::infinity();
  SaddleResult res;
  res.sigma_star = sigma;
  res.rho_star = rho0;
  int total_iters = 0;
  const int max_rounds = 200;
  for (int r = 1; r <= max_rounds; ++r) {
    auto up = ascend(
        rho0, [&](const DensityMatrix& x) { return payoff_ea(chan, x, trial); },
        [&](const DensityMatrix& x) { return payoff_ea_grad_rho(chan, x, trial); },
        inner_tol, inner_iter);
    total_iters += up.iterations;
    if (up.bound < U) {
      U = up.bound;
      res.sigma_star = trial;
      res.rho_star = up.x;
    }
    if (up.value <= phi_acc + 1e-12) {
      sigma = trial;
      phi_acc = up.value;
      g_acc = payoff_ea_grad_sigma(chan, up.x, sigma);
      eta = std::min(eta * 1.25, 1e4);
      rho0 = up.x;  // warm start

      auto down = descend(
          sigma,
          [&](const DensityMatrix& s) { return payoff_ea(chan, up.x, s); },
          [&](const DensityMatrix& s) {
            return payoff_ea_grad_sigma(chan, up.x, s);
          },
          inner_tol, inner_iter);
      total_iters += down.iterations;
      L = std::max(L, down.bound);
    } else {
      eta = std::max(eta * 0.5, 1e-10);
    }

    res.gap = U - L;
    res.iterations = total_iters;
    if (res.gap <= tol) {
      res.converged = true;
      break;
    }
    if (total_iters >= max_iter) break;
    trial = mirror_step(sigma, -g_acc, eta);
  }
  res.value = payoff_ea(chan, res.rho_star, res.sigma_star);
  return res;
}

double holevo_quantity(const std::vector<double>& p,
                       const std::vector<DensityMatrix>& states) {
  if (p.size() != states.size() || p.empty())
    throw DimensionError("ensemble size mismatch");
  const std::size_t d = states[0].dim();
  Matrix avg = Matrix::Zero(d, d);
  for (std::size_t x = 0; x < p.size(); ++x) avg += p[x] * states[x].matrix();
  double chi = entropy_of_spectrum(clipped_spectrum(avg));
  for (std::size_t x = 0; x < p.size(); ++x)
    chi -= p[x] * entropy_of_spectrum(clipped_spectrum(states[x].matrix()));
  return chi;
}

namespace {

struct BAResult {
  std::vector<double> p;
  double chi = 0.0;
  double ub = 0.0;  // max_x D(rho_x || rho_bar), a capacity upper bound
};

BAResult blahut_arimoto(const std::vector<Matrix>& states, double tol,
                        int max_iter, std::vector<double> p0 = {}) {
  const std::size_t nx = states.size();
  const std::size_t d = states[0].rows();
  std::vector<double> p =
      p0.size() == nx ? p0 : std::vector<double>(nx, 1.0 / nx);
  std::vector<Matrix> logs(nx);
  std::vector<double> self_entropy(nx);
  for (std::size_t x = 0; x < nx; ++x) {
    logs[x] = matrix_log2(states[x]);
    self_entropy[x] = -(states[x] * logs[x]).trace().real();
  }
  BAResult best;
  best.ub = std::numeric_limits<double>::infinity();
  best.chi = -1;
  for (int it = 0; it < max_iter; ++it) {
    Matrix avg = Matrix::Zero(d, d);
    for (std::size_t x = 0; x < nx; ++x) avg += p[x] * states[x];
    const Matrix lavg = matrix_log2(avg);
    std::vector<double> div(nx);
    double chi = 0, ub = -std::numeric_limits<double>::infinity();
    for (std::size_t x = 0; x < nx; ++x) {
      div[x] = -self_entropy[x] - (states[x] * lavg).trace().real();
      chi += p[x] * div[x];
      ub = std::max(ub, div[x]);
    }
    if (chi > best.chi) {
      best.chi = chi;
      best.p = p;
    }
    best.ub = std::min(best.ub, ub);
    if (best.ub - best.chi <= tol) break;
    double z = 0;
    for (std::size_t x = 0; x < nx; ++x)
      z += (p[x] = std::max(p[x] * std::exp2(div[x] - ub), 1e-300));
    for (auto& v : p) v /= z;
  }
  return best;
}

// gradient in sigma of chi at fixed p: sum_x p_x N_x^dag(log rho_x - log avg)
Matrix chi_grad_sigma(const std::vector<QuantumChannel>& per_symbol,
                      const std::vector<double>& p, const DensityMatrix& sigma) {
  const std::size_t dB = per_symbol[0].d_B(), dE = per_symbol[0].d_E();
  std::vector<Matrix> outs(per_symbol.size());
  Matrix avg = Matrix::Zero(dB, dB);
  for (std::size_t x = 0; x < per_symbol.size(); ++x) {
    outs[x] = apply_raw(per_symbol[x], sigma.matrix());
    avg += p[x] * outs[x];
  }
  const Matrix lavg = matrix_log2(avg);
  Matrix g = Matrix::Zero(dE, dE);
  for (std::size_t x = 0; x < per_symbol.size(); ++x)
    if (p[x] > 0)
      g += p[x] * apply_adjoint(per_symbol[x], matrix_log2(outs[x]) - lavg);
  return g;
}

double chi_value(const std::vector<QuantumChannel>& per_symbol,
                 const std::vector<double>& p, const DensityMatrix& sigma) {
  const std::size_t dB = per_symbol[0].d_B();
  Matrix avg = Matrix::Zero(dB, dB);
  double chi = 0;
  std::vector<Matrix> outs(per_symbol.size());
  for (std::size_t x = 0; x < per_symbol.size(); ++x) {
    outs[x] = apply_raw(per_symbol[x], sigma.matrix());
    avg += p[x] * outs[x];
    chi -= p[x] * entropy_of_spectrum(clipped_spectrum(outs[x]));
  }
  chi += entropy_of_spectrum(clipped_spectrum(avg));
  return chi;
}

}  // namespace

CQCapacityResult solve_cq_sr(const CQChannelTable& table, double tol,
                             int max_iter) {
  table.validate();
  const auto& chans = table.per_symbol;
  const std::size_t dE = table.d_E();
  const double inner_tol = tol / 4;
  const int inner_iter = std::max(200, max_iter / 10);

  // outer adaptive mirror descent on sigma, accepting steps that reduce
  // the Blahut-Arimoto sup value
  DensityMatrix sigma = DensityMatrix::maximally_mixed(dE);
  DensityMatrix trial = sigma;
  Matrix g_acc;
  double phi_acc = std::numeric_limits<double>::infinity();
  double eta = 1.0;
  CQCapacityResult res;
  res.sigma_star = sigma;
  double U = std::numeric_limits<double>::infinity();
  double L = -std::numeric_limits<double>::infinity();
  int total = 0;
  std::vector<double> warm;
  const int max_rounds = 500;
  for (int r = 1; r <= max_rounds; ++r) {
    std::vector<Matrix> outs(chans.size());
    for (std::size_t x = 0; x < chans.size(); ++x)
      outs[x] = apply_raw(chans[x], trial.matrix());
    BAResult ba = blahut_arimoto(outs, inner_tol, inner_iter, warm);
    warm = ba.p;
    total += 1;
    if (ba.ub < U) {
      U = ba.ub;
      res.sigma_star = trial;
      res.p_star = ba.p;
    }
    if (ba.chi <= phi_acc + 1e-12) {
      sigma = trial;
      phi_acc = ba.chi;
      g_acc = chi_grad_sigma(chans, ba.p, sigma);
      eta = std::min(eta * 1.25, 1e4);

      auto down = descend(
          sigma,
          [&](const DensityMatrix& s) { return chi_value(chans, ba.p, s); },
          [&](const DensityMatrix& s) { return chi_grad_sigma(chans, ba.p, s); },
          inner_tol, inner_iter);
      total += down.iterations;
      L = std::max(L, down.bound);
    } else {
      eta = std::max(eta * 0.5, 1e-10);
    }

    res.gap = U - L;
    res.iterations = total;
    if (res.gap <= tol) {
      res.converged = true;
      break;
    }
    if (total >= max_iter) break;
    trial = mirror_step(sigma, -g_acc, eta);
  }
  res.value = 0.5 * (U + L);
  if (!std::isfinite(res.value)) res.value = U;
  return res;
}

namespace {

struct QQEnsemble {
  std::vector<Vector> psi;  // pure signals on A^n
  std::vector<double> p;
};

std::vector<Matrix> qq_outputs(const QuantumChannel& nfold,
                               const QQEnsemble& ens, const Matrix& sigma) {
  std::vector<Matrix> outs(ens.psi.size());
  for (std::size_t x = 0; x < ens.psi.size(); ++x)
    outs[x] = apply_raw(nfold, kron(Matrix(ens.psi[x] * ens.psi[x].adjoint()),
                                    sigma));
  return outs;
}

double qq_chi(const QuantumChannel& nfold, const QQEnsemble& ens,
              const Matrix& sigma) {
  auto outs = qq_outputs(nfold, ens, sigma);
  const std::size_t dB = nfold.d_B();
  Matrix avg = Matrix::Zero(dB, dB);
  double chi = 0;
  for (std::size_t x = 0; x < outs.size(); ++x) {
    avg += ens.p[x] * outs[x];
    chi -= ens.p[x] * entropy_of_spectrum(clipped_spectrum(outs[x]));
  }
  return chi + entropy_of_spectrum(clipped_spectrum(avg));
}

// X on (A^n, E^n) contracted against |psi><psi| on A^n
Matrix contract_signal(const Matrix& X, const Vector& psi, std::size_t dE) {
  const std::size_t dA = psi.size();
  Matrix g = Matrix::Zero(dE, dE);
  for (std::size_t e = 0; e < dE; ++e)
    for (std::size_t ep = 0; ep < dE; ++ep) {
      Complex v = 0;
      for (std::size_t a = 0; a < dA; ++a)
        for (std::size_t ap = 0; ap < dA; ++ap)
          v += X(a * dE + e, ap * dE + ep) * psi(ap) * std::conj(psi(a));
      g(e, ep) = v;
    }
  return g;
}

Matrix qq_grad_sigma(const QuantumChannel& nfold, const QQEnsemble& ens,
                     const DensityMatrix& sigma) {
  auto outs = qq_outputs(nfold, ens, sigma.matrix());
  const std::size_t dB = nfold.d_B(), dE = nfold.d_E();
  Matrix avg = Matrix::Zero(dB, dB);
  for (std::size_t x = 0; x < outs.size(); ++x) avg += ens.p[x] * outs[x];
  const Matrix lavg = matrix_log2(avg);
  Matrix g = Matrix::Zero(dE, dE);
  for (std::size_t x = 0; x < outs.size(); ++x) {
    if (ens.p[x] <= 0) continue;
    const Matrix X = apply_adjoint(nfold, matrix_log2(outs[x]) - lavg);
    g += ens.p[x] * contract_signal(X, ens.psi[x], dE);
  }
  return g;
}

// alternate BA on p with top-eigenvector signal refinement; keeps only
// improving updates
void qq_see_saw(const QuantumChannel& nfold, QQEnsemble& ens,
                const Matrix& sigma, double tol, int rounds) {
  const std::size_t dE = nfold.d_E();
  for (int r = 0; r < rounds; ++r) {
    auto outs = qq_outputs(nfold, ens, sigma);
    BAResult ba = blahut_arimoto(outs, tol / 4, 500, ens.p);
    ens.p = ba.p;
    double chi = qq_chi(nfold, ens, sigma);
    bool improved = false;
    Matrix avg = Matrix::Zero(nfold.d_B(), nfold.d_B());
    for (std::size_t x = 0; x < outs.size(); ++x) avg += ens.p[x] * outs[x];
    const Matrix lavg = matrix_log2(avg);
    for (std::size_t x = 0; x < ens.psi.size(); ++x) {
      if (ens.p[x] < 1e-12) continue;
      const Matrix X =
          apply_adjoint(nfold, matrix_log2(outs[x]) - lavg);
      // direction operator on A^n for this signal
      const std::size_t dAn = nfold.d_A();
      Matrix dir = Matrix::Zero(dAn, dAn);
      for (std::size_t a = 0; a < dAn; ++a)
        for (std::size_t ap = 0; ap < dAn; ++ap) {
          Complex v = 0;
          for (std::size_t e = 0; e < dE; ++e)
            for (std::size_t ep = 0; ep < dE; ++ep)
              v += X(a * dE + e, ap * dE + ep) * sigma(ep, e);
          dir(a, ap) = v;
        }
      auto [vals, vecs] = herm_eig(0.5 * (dir + dir.adjoint()));
      const Vector cand = vecs.col(vals.size() - 1);
      const Vector old = ens.psi[x];
      ens.psi[x] = cand;
      const double chi2 = qq_chi(nfold, ens, sigma);
      if (chi2 > chi + 1e-12) {
        chi = chi2;
        improved = true;
      } else {
        ens.psi[x] = old;
      }
    }
    if (!improved && r > 0) break;
  }
}

}  // namespace

QQRegularizedResult regularized_qq_sr(const QuantumChannel& chan, std::size_t n,
                                      double tol, std::uint64_t seed) {
  if (n != 1 && n != 2)
    throw std::invalid_argument("regularized_qq_sr supports n in {1,2}");
  const QuantumChannel nf = n == 1 ? chan : n_fold(chan, 2);
  const std::size_t dAn = nf.d_A(), dEn = nf.d_E();
  std::size_t ens_size = 1;
  for (std::size_t k = 0; k < 2 * n; ++k) ens_size *= chan.d_A();

  Rng rng(seed);
  QQEnsemble ens;
  DensityMatrix sigma = DensityMatrix::maximally_mixed(dEn);
  if (n == 2) {
    // tensor the n=1 optimizer so product strategies are always available
    QQRegularizedResult base = regularized_qq_sr(chan, 1, tol, seed);
    for (std::size_t i = 0; i < base.signals.size(); ++i)
      for (std::size_t j = 0; j < base.signals.size(); ++j) {
        ens.psi.push_back(
            kron(base.signals[i].amplitudes(), base.signals[j].amplitudes()));
        ens.p.push_back(base.p_star[i] * base.p_star[j]);
      }
    sigma = DensityMatrix(
        kron(base.sigma_star.matrix(), base.sigma_star.matrix()));
  } else {
    for (std::size_t x = 0; x < ens_size; ++x) {
      if (x < dAn) {
        Vector v = Vector::Zero(dAn);
        v(x) = 1.0;
        ens.psi.push_back(std::move(v));
      } else {
        ens.psi.push_back(haar_random_pure(dAn, rng).amplitudes());
      }
      ens.p.push_back(1.0 / ens_size);
    }
  }

  double U = std::numeric_limits<double>::infinity();
  double L = -std::numeric_limits<double>::infinity();
  QQRegularizedResult res;
  res.ensemble_size = ens.psi.size();
  res.sigma_star = sigma;
  const int max_rounds = 150;
  for (int r = 1; r <= max_rounds; ++r) {
    qq_see_saw(nf, ens, sigma.matrix(), tol, 20);
    auto outs = qq_outputs(nf, ens, sigma.matrix());
    BAResult ba = blahut_arimoto(outs, tol / 4, 500, ens.p);
    ens.p = ba.p;
    if (ba.ub < U) {
      U = ba.ub;
      res.sigma_star = sigma;
      res.p_star = ens.p;
      res.signals.clear();
      for (const auto& v : ens.psi) res.signals.emplace_back(v);
    }
    auto down = descend(
        sigma,
        [&](const DensityMatrix& s) { return qq_chi(nf, ens, s.matrix()); },
        [&](const DensityMatrix& s) { return qq_grad_sigma(nf, ens, s); },
        tol / 4, 300);
    L = std::max(L, down.bound);
    res.gap = U - L;
    if (res.gap <= tol) {
      res.converged = true;
      break;
    }
    const Matrix g = qq_grad_sigma(nf, ens, sigma);
    sigma = mirror_step(sigma, -g, 1.0 / std::sqrt(static_cast<double>(r)));
  }
  res.value = 0.5 * (U + L) / static_cast<double>(n);
  if (!std::isfinite(res.value)) res.value = U / static_cast<double>(n);
  res.gap /= static_cast<double>(n);
  return res;
}

}  // namespace qadv
