// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "fixtures.hpp"
#include "qadv/game.hpp"
#include "qadv/io.hpp"
#include "qadv/saddle.hpp"

using namespace qadv;
using namespace qadv::fixtures;

namespace {

int failures = 0;

void report(const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", name,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

double now_s() {
  using clock = std::chrono::steady_clock;
  static const auto t0 = clock::now();
  return std::chrono::duration<double>(clock::now() - t0).count();
}

DensityMatrix basis_state(std::size_t d, std::size_t i) {
  Matrix m = Matrix::Zero(d, d);
  m(i, i) = 1;
  return DensityMatrix(std::move(m));
}

// --- criterion 1: classical minimax equality ------------------------------
void criterion_classical_minimax() {
  const double t0 = now_s();
  bool ok = true;
  std::string detail;
  double max_gap = 0;
  Rng rng(1001);
  for (int t = 0; t < 20; ++t) {
    const auto table = random_classical_table(2, 2, 2, rng);
    const auto res = classical_game_value(table, 2, 1);
    max_gap = std::max(max_gap, res.gap);
    if (res.gap > 1e-8) ok = false;
  }
  const auto flip = classical_game_value(jammer_flipped_identity(), 2, 1);
  const auto bsc = classical_game_value(jammer_selected_bsc(0.05, 0.25), 2, 1);
  if (std::abs(flip.lower_value - 0.5) > 1e-8) ok = false;
  if (std::abs(bsc.lower_value - 0.25) > 1e-8) ok = false;
  const double dt = now_s() - t0;
  if (dt > 10.0) ok = false;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "max LP gap %.2e, flip value %.9f, bsc value %.9f, %.1f s",
                max_gap, flip.lower_value, bsc.lower_value, dt);
  report("classical minimax equality (20 random + 2 fixtures)", ok, buf);
}

// --- criterion 2: quantum minimax pinch -----------------------------------
void criterion_quantum_pinch() {
  const double t0 = now_s();
  const auto res = double_oracle(controlled_id_dephasing(), 2, 1, 1e-3, 20, 7);
  const double dt = now_s() - t0;
  bool ok = res.gap <= 1e-3 && dt <= 60.0;

  // the certified side must equal the recomputed worst case of the
  // returned code mixture
  const std::size_t dE = 2;
  Matrix tmix = Matrix::Zero(dE, dE);
  for (std::size_t i = 0; i < res.code_pool.size(); ++i)
    tmix += res.code_mixture[i] *
            error_operator(res.code_pool[i], controlled_id_dephasing()).matrix;
  const double lam = herm_eig(tmix).values.maxCoeff();
  if (std::abs(lam - res.lower_value) > 1e-10) ok = false;

  char buf[160];
  std::snprintf(buf, sizeof buf,
                "gap %.2e, value in [%.6f, %.6f], recompute dev %.1e, %.1f s",
                res.gap, res.upper_value, res.lower_value,
                std::abs(lam - res.lower_value), dt);
  report("quantum minimax pinch (double oracle)", ok, buf);
}

// --- criterion 3: EA saddle values ----------------------------------------
double ea_grid_oracle() {
  // jammer diagonal by dephasing symmetry; Alice states real by symmetry:
  // rho = [[p, c],[c, 1-p]]
  const auto chan = controlled_id_dephasing();
  double best = 1e300;
  for (int qi = 0; qi <= 40; ++qi) {
    const double q = qi / 40.0;
    Matrix s = Matrix::Zero(2, 2);
    s(0, 0) = q;
    s(1, 1) = 1 - q;
    const DensityMatrix sigma{std::move(s)};
    double inner = 0;
    for (int pi = 0; pi <= 40; ++pi) {
      const double p = pi / 40.0;
      const double cmax = std::sqrt(std::max(p * (1 - p), 0.0));
      for (int ci = 0; ci <= 10; ++ci) {
        const double c = cmax * ci / 10.0;
        Matrix r(2, 2);
        r << p, c, c, 1 - p;
        inner = std::max(inner, payoff_ea(chan, DensityMatrix{std::move(r)},
                                          sigma));
      }
    }
    best = std::min(best, inner);
  }
  return best;
}

void criterion_ea_saddle() {
  const double t0 = now_s();
  bool ok = true;

  const auto id = solve_ea_saddle(identity_on_A(2, 2), 1e-4, 5000);
  const double t_id = now_s() - t0;
  if (std::abs(id.value - 2.0) > 1e-3 || id.gap > 1e-4 || t_id > 5.0)
    ok = false;

  const auto swap = solve_ea_saddle(jammer_swap(), 1e-4, 5000);
  if (std::abs(swap.value) > 1e-4) ok = false;

  const double t1 = now_s();
  const auto ctrl = solve_ea_saddle(controlled_id_dephasing(), 1e-4, 5000);
  const double oracle = ea_grid_oracle();
  const double t_ctrl = now_s() - t1;
  if (std::abs(ctrl.value - 1.0) > 1e-3 || std::abs(ctrl.value - oracle) > 1e-3)
    ok = false;
  if (t_ctrl > 60.0) ok = false;

  char buf[200];
  std::snprintf(buf, sizeof buf,
                "identity %.6f (gap %.1e, %.1f s), swap %.2e, controlled %.6f "
                "vs grid %.6f (%.1f s)",
                id.value, id.gap, t_id, swap.value, ctrl.value, oracle, t_ctrl);
  report("EA saddle values", ok, buf);
}

// --- criterion 4: hypothesis-testing divergence ---------------------------
void criterion_dh() {
  bool ok = true;
  double worst = 0;
  Rng rng(1004);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  for (int t = 0; t < 100; ++t) {
    auto p = random_distribution(2, rng);
    auto q = random_distribution(2, rng);
    const double eps = u(rng);
    Matrix mp = Matrix::Zero(2, 2), mq = Matrix::Zero(2, 2);
    mp(0, 0) = p[0];
    mp(1, 1) = p[1];
    mq(0, 0) = q[0];
    mq(1, 1) = q[1];
    const double got = dh(DensityMatrix{mp}, DensityMatrix{mq}, eps).value;
    const double want = classical_np_value(p, q, eps);
    const double dev = std::abs(got - want);
    worst = std::max(worst, dev);
    if (dev > 1e-8) ok = false;
  }

  double worst_eq = 0;
  const auto rho = random_density(3, rng);
  for (int k = 1; k <= 9; ++k) {
    const double eps = k / 10.0;
    const double dev =
        std::abs(dh(rho, rho, eps).value + std::log2(1 - eps));
    worst_eq = std::max(worst_eq, dev);
    if (dev > 1e-10) ok = false;
  }

  for (int t = 0; t < 10; ++t) {
    const auto r = random_density(2, rng);
    const auto s = random_density(2, rng);
    double prev = -1e300;
    for (int k = 1; k <= 19; ++k) {
      const double v = dh(r, s, k / 20.0).value;
      if (v < prev - 1e-10) ok = false;
      prev = v;
    }
  }

  char buf[160];
  std::snprintf(buf, sizeof buf,
                "NP oracle dev %.1e (100 pairs), equal-state dev %.1e, "
                "monotone on 10 grids",
                worst, worst_eq);
  report("hypothesis-testing divergence correctness", ok, buf);
}

// --- criterion 5: bilinearity / affinity suites ---------------------------
void criterion_bilinearity() {
  bool ok = true;
  double worst = 0;
  Rng rng(1005);
  const auto chan = random_cptp(2, 2, 2, rng);
  std::uniform_real_distribution<double> u(0, 1);
  for (int t = 0; t < 200; ++t) {
    const auto s1 = random_density(2, rng);
    const auto s2 = random_density(2, rng);
    const double w = u(rng);
    const DensityMatrix smix(w * s1.matrix() + (1 - w) * s2.matrix());

    // fix_jammer affinity
    const double dev_fj =
        max_abs(fix_jammer(chan, smix).choi() -
                (w * fix_jammer(chan, s1).choi() +
                 (1 - w) * fix_jammer(chan, s2).choi()));

    Code c1, c2;
    c1.n = c2.n = 1;
    c1.M = c2.M = 2;
    c1.encoder_states = {random_density(2, rng), random_density(2, rng)};
    c2.encoder_states = {random_density(2, rng), random_density(2, rng)};
    Matrix p1 = haar_random_pure(2, rng).projector().matrix();
    Matrix p2 = haar_random_pure(2, rng).projector().matrix();
    c1.decoder_povm = {p1, Matrix::Identity(2, 2) - p1};
    c2.decoder_povm = {p2, Matrix::Identity(2, 2) - p2};

    const double dev_sigma =
        std::abs(error_probability(c1, chan, smix) -
                 (w * error_probability(c1, chan, s1) +
                  (1 - w) * error_probability(c1, chan, s2)));

    const Matrix tmix = w * error_operator(c1, chan).matrix +
                        (1 - w) * error_operator(c2, chan).matrix;
    const double dev_code =
        std::abs((tmix * s1.matrix()).trace().real() -
                 (w * error_probability(c1, chan, s1) +
                  (1 - w) * error_probability(c2, chan, s1)));

    worst = std::max({worst, dev_fj, dev_sigma, dev_code});
    if (worst > 1e-12) ok = false;
  }
  char buf[120];
  std::snprintf(buf, sizeof buf, "max deviation %.1e over 200 trials", worst);
  report("bilinearity and affinity suites", ok, buf);
}

// --- criterion 6: gradient validation -------------------------------------
void criterion_gradients() {
  bool ok = true;
  double worst = 0;
  Rng rng(1006);
  const double step = 1e-5;
  std::normal_distribution<double> g;
  auto traceless = [&](std::size_t d) {
    Matrix a(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) a(i, j) = Complex(g(rng), g(rng));
    Matrix h = 0.5 * (a + a.adjoint());
    h -= (h.trace() / static_cast<double>(d)) * Matrix::Identity(d, d);
    return h;
  };
  for (int t = 0; t < 20; ++t) {
    const auto chan = random_cptp(2, 2, 2, rng);
    const DensityMatrix rho(0.9 * random_density(2, rng).matrix() +
                            0.05 * Matrix::Identity(2, 2));
    const DensityMatrix sigma(0.9 * random_density(2, rng).matrix() +
                              0.05 * Matrix::Identity(2, 2));
    {
      const Matrix h = traceless(2);
      const double fd =
          (payoff_ea(chan, DensityMatrix(rho.matrix() + step * h), sigma) -
           payoff_ea(chan, DensityMatrix(rho.matrix() - step * h), sigma)) /
          (2 * step);
      const double an =
          (payoff_ea_grad_rho(chan, rho, sigma) * h).trace().real();
      const double rel = std::abs(fd - an) / std::max(1.0, std::abs(fd));
      worst = std::max(worst, rel);
    }
    {
      const Matrix h = traceless(2);
      const double fd =
          (payoff_ea(chan, rho, DensityMatrix(sigma.matrix() + step * h)) -
           payoff_ea(chan, rho, DensityMatrix(sigma.matrix() - step * h))) /
          (2 * step);
      const double an =
          (payoff_ea_grad_sigma(chan, rho, sigma) * h).trace().real();
      const double rel = std::abs(fd - an) / std::max(1.0, std::abs(fd));
      worst = std::max(worst, rel);
    }
  }
  if (worst > 1e-4) ok = false;
  char buf[120];
  std::snprintf(buf, sizeof buf, "max relative error %.1e over 20 instances",
                worst);
  report("payoff gradient validation", ok, buf);
}

// --- criterion 7: CQ-SR and regularized QQ capacities ---------------------
void criterion_cq_sr() {
  const double t0 = now_s();
  bool ok = true;
  const auto table = jammer_selected_bsc(0.05, 0.25);
  const auto cq = cq_table_from_classical(table);
  const auto sr = solve_cq_sr(cq, 1e-4, 5000);
  const double want = 1 - binary_entropy(0.25);
  const double t_sr = now_s() - t0;
  if (std::abs(sr.value - want) > 1e-3 || t_sr > 10.0) ok = false;

  const auto emb = cq_embed(cq);
  const auto qq1 = regularized_qq_sr(emb, 1, 5e-4, 11);
  if (std::abs(qq1.value - sr.value) > 1e-3) ok = false;
  const auto qq2 = regularized_qq_sr(emb, 2, 5e-4, 11);
  if (qq2.value < qq1.value - 1e-3) ok = false;

  char buf[200];
  std::snprintf(buf, sizeof buf,
                "cq-sr %.6f vs 1-h2(0.25)=%.6f (%.1f s); qq n=1 %.6f, n=2 %.6f",
                sr.value, want, t_sr, qq1.value, qq2.value);
  report("CQ-SR capacity and regularized QQ consistency", ok, buf);
}

// --- criterion 8: entropic identities -------------------------------------
void criterion_entropic() {
  bool ok = true;
  double worst_min = 0, worst_add = 0;
  Rng rng(1008);
  for (int t = 0; t < 10; ++t) {
    const auto ab = random_density(4, rng);
    const SystemShape sh{2, 2};
    const double mi = mutual_information(ab, sh);
    const auto a = partial_trace(ab, sh, {0});
    const auto b = partial_trace(ab, sh, {1});
    double best = relative_entropy(ab, tensor(a, b));
    for (int i = 0; i < 300; ++i)
      best = std::min(best,
                      relative_entropy(ab, tensor(a, random_density(2, rng))));
    worst_min = std::max(worst_min, std::abs(best - mi));
    if (std::abs(best - mi) > 1e-6) ok = false;

    const auto r2 = random_density(4, rng);
    const Matrix joint = permute_factors(kron(ab.matrix(), r2.matrix()),
                                         SystemShape{2, 2, 2, 2}, {0, 2, 1, 3});
    const double i12 =
        mutual_information(DensityMatrix(joint), SystemShape{4, 4});
    const double dev =
        std::abs(i12 - mi - mutual_information(r2, SystemShape{2, 2}));
    worst_add = std::max(worst_add, dev);
    if (dev > 1e-9) ok = false;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "min-relative-entropy dev %.1e, product additivity dev %.1e",
                worst_min, worst_add);
  report("entropic identities", ok, buf);
}

}  // namespace

int main() {
  criterion_classical_minimax();
  criterion_quantum_pinch();
  criterion_ea_saddle();
  criterion_dh();
  criterion_bilinearity();
  criterion_gradients();
  criterion_cq_sr();
  criterion_entropic();
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
