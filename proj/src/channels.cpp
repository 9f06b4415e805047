#include "qadv/channels.hpp"

#include <cmath>
#include <string>

namespace qadv {

namespace {

void check_cptp(std::size_t d_in, std::size_t d_B, const Matrix& choi) {
  if (static_cast<std::size_t>(choi.rows()) != d_in * d_B)
    throw DimensionError("Choi dimension mismatch");
  if (!is_hermitian(choi, 1e-10)) throw InvalidState("Choi not Hermitian");
  if (min_eigenvalue(choi) < -cfg().psd_tol)
    throw InvalidState("Choi not PSD (channel not completely positive)");
  // tr_B over the trailing output factor
  Matrix red = partial_trace(choi, SystemShape{d_in, d_B}, {0});
  const double dev = max_abs(red - Matrix::Identity(d_in, d_in));
  if (dev > cfg().tp_tol)
    throw InvalidState("channel not trace-preserving, deviation " +
                       std::to_string(dev));
}

}  // namespace

QuantumChannel::QuantumChannel(std::size_t d_A, std::size_t d_E, std::size_t d_B,
                               Matrix choi)
    : d_A_(d_A), d_E_(d_E), d_B_(d_B), choi_(std::move(choi)) {
  if (d_A * d_E * d_B > cfg().max_total_dim)
    throw DimensionError("channel dimensions exceed configured cap");
  check_cptp(d_A * d_E, d_B, choi_);
  choi_ = 0.5 * (choi_ + choi_.adjoint().eval());
}

void CQChannelTable::validate() const {
  if (per_symbol.empty()) throw InvalidState("empty CQ channel table");
  for (const auto& c : per_symbol) {
    if (c.d_A() != 1) throw InvalidState("CQ per-symbol channel must have d_A = 1");
    if (c.d_E() != d_E() || c.d_B() != d_B())
      throw InvalidState("CQ per-symbol channels must share d_E and d_B");
  }
}

void ClassicalTable::validate() const {
  if (n_X == 0 || n_E == 0 || n_Y == 0 || W.size() != n_Y)
    throw InvalidState("malformed classical table");
  for (std::size_t x = 0; x < n_X; ++x)
    for (std::size_t e = 0; e < n_E; ++e) {
      double s = 0;
      for (std::size_t y = 0; y < n_Y; ++y) {
        const double w = W.at(y).at(x).at(e);
        if (w < -1e-12 || w > 1 + 1e-12)
          throw InvalidState("classical table entry outside [0,1]");
        s += w;
      }
      if (std::abs(s - 1.0) > 1e-12)
        throw InvalidState("classical table rows for (x=" + std::to_string(x) +
                           ",e=" + std::to_string(e) + ") sum to " +
                           std::to_string(s));
    }
}

QuantumChannel from_kraus(std::size_t d_A, std::size_t d_E, std::size_t d_B,
                          const std::vector<Matrix>& kraus_ops) {
  const std::size_t d_in = d_A * d_E;
  Matrix sum = Matrix::Zero(d_in, d_in);
  for (const auto& k : kraus_ops) {
    if (static_cast<std::size_t>(k.rows()) != d_B ||
        static_cast<std::size_t>(k.cols()) != d_in)
      throw DimensionError("Kraus operator has wrong shape");
    sum += k.adjoint() * k;
  }
  const double dev = max_abs(sum - Matrix::Identity(d_in, d_in));
  if (dev > cfg().kraus_completeness_tol)
    throw InvalidState("Kraus completeness violated, deviation " +
                       std::to_string(dev));

  Matrix choi = Matrix::Zero(d_in * d_B, d_in * d_B);
  for (const auto& k : kraus_ops)
    for (std::size_t i = 0; i < d_in; ++i)
      for (std::size_t ip = 0; ip < d_in; ++ip)
        for (std::size_t b = 0; b < d_B; ++b)
          for (std::size_t bp = 0; bp < d_B; ++bp)
            choi(i * d_B + b, ip * d_B + bp) += k(b, i) * std::conj(k(bp, ip));
  return QuantumChannel(d_A, d_E, d_B, std::move(choi));
}

QuantumChannel identity_channel(std::size_t d) {
  return from_kraus(d, 1, d, {Matrix::Identity(d, d)});
}

QuantumChannel fix_jammer(const QuantumChannel& chan, const DensityMatrix& sigma) {
  if (sigma.dim() != chan.d_E())
    throw DimensionError("jammer state dimension mismatch");
  const std::size_t dA = chan.d_A(), dE = chan.d_E(), dB = chan.d_B();
  const auto& J = chan.choi();
  const auto& s = sigma.matrix();
  Matrix out = Matrix::Zero(dA * dB, dA * dB);
  for (std::size_t a = 0; a < dA; ++a)
    for (std::size_t ap = 0; ap < dA; ++ap)
      for (std::size_t b = 0; b < dB; ++b)
        for (std::size_t bp = 0; bp < dB; ++bp) {
          Complex v = 0;
          for (std::size_t e = 0; e < dE; ++e)
            for (std::size_t ep = 0; ep < dE; ++ep)
              v += s(e, ep) * J((a * dE + e) * dB + b, (ap * dE + ep) * dB + bp);
          out(a * dB + b, ap * dB + bp) = v;
        }
  return QuantumChannel(dA, 1, dB, std::move(out));
}

Matrix apply_raw(const QuantumChannel& chan, const Matrix& rho) {
  const std::size_t d_in = chan.d_in(), dB = chan.d_B();
  if (static_cast<std::size_t>(rho.rows()) != d_in)
    throw DimensionError("input state dimension mismatch");
  const auto& J = chan.choi();
  Matrix out = Matrix::Zero(dB, dB);
  for (std::size_t b = 0; b < dB; ++b)
    for (std::size_t bp = 0; bp < dB; ++bp) {
      Complex v = 0;
      for (std::size_t i = 0; i < d_in; ++i)
        for (std::size_t ip = 0; ip < d_in; ++ip)
          v += rho(i, ip) * J(i * dB + b, ip * dB + bp);
      out(b, bp) = v;
    }
  return out;
}

DensityMatrix apply(const QuantumChannel& chan, const DensityMatrix& rho) {
  return DensityMatrix(apply_raw(chan, rho.matrix()));
}

Matrix apply_adjoint(const QuantumChannel& chan, const Matrix& obs) {
  const std::size_t d_in = chan.d_in(), dB = chan.d_B();
  if (static_cast<std::size_t>(obs.rows()) != dB)
    throw DimensionError("observable dimension mismatch");
  const auto& J = chan.choi();
  Matrix out = Matrix::Zero(d_in, d_in);
  for (std::size_t i = 0; i < d_in; ++i)
    for (std::size_t ip = 0; ip < d_in; ++ip) {
      Complex v = 0;
      for (std::size_t b = 0; b < dB; ++b)
        for (std::size_t bp = 0; bp < dB; ++bp)
          v += obs(b, bp) * J(i * dB + bp, ip * dB + b);
      out(ip, i) = v;
    }
  return out;
}

QuantumChannel n_fold(const QuantumChannel& chan, std::size_t n) {
  if (n == 0) throw DimensionError("n must be positive");
  std::size_t dA = chan.d_A(), dE = chan.d_E(), dB = chan.d_B();
  Matrix J = chan.choi();
  std::size_t cA = dA, cE = dE, cB = dB;
  for (std::size_t k = 1; k < n; ++k) {
    if (cA * dA * cE * dE * cB * dB > cfg().max_total_dim)
      throw DimensionError("n_fold exceeds configured dimension cap");
    Matrix prod = kron(J, chan.choi());
    // regroup (A^k, E^k, B^k, A, E, B) -> (A^k A, E^k E, B^k B)
    SystemShape shape{cA, cE, cB, dA, dE, dB};
    J = permute_factors(prod, shape, {0, 3, 1, 4, 2, 5});
    cA *= dA;
    cE *= dE;
    cB *= dB;
  }
  return QuantumChannel(cA, cE, cB, std::move(J));
}

QuantumChannel classical_to_quantum(const ClassicalTable& table) {
  table.validate();
  const std::size_t dA = table.n_X, dE = table.n_E, dB = table.n_Y;
  const std::size_t d = dA * dE * dB;
  Matrix choi = Matrix::Zero(d, d);
  for (std::size_t x = 0; x < dA; ++x)
    for (std::size_t e = 0; e < dE; ++e)
      for (std::size_t y = 0; y < dB; ++y) {
        const std::size_t idx = (x * dE + e) * dB + y;
        choi(idx, idx) = table.W[y][x][e];
      }
  return QuantumChannel(dA, dE, dB, std::move(choi));
}

CQChannelTable cq_table_from_classical(const ClassicalTable& table) {
  table.validate();
  CQChannelTable out;
  for (std::size_t x = 0; x < table.n_X; ++x) {
    const std::size_t d = table.n_E * table.n_Y;
    Matrix choi = Matrix::Zero(d, d);
    for (std::size_t e = 0; e < table.n_E; ++e)
      for (std::size_t y = 0; y < table.n_Y; ++y)
        choi(e * table.n_Y + y, e * table.n_Y + y) = table.W[y][x][e];
    out.per_symbol.emplace_back(1, table.n_E, table.n_Y, std::move(choi));
  }
  return out;
}

QuantumChannel cq_embed(const CQChannelTable& table) {
  table.validate();
  const std::size_t dA = table.alphabet_size(), dE = table.d_E(), dB = table.d_B();
  const std::size_t d = dA * dE * dB;
  Matrix choi = Matrix::Zero(d, d);
  // X-basis dephasing on A: only x = x' blocks survive
  for (std::size_t x = 0; x < dA; ++x) {
    const auto& Jx = table.per_symbol[x].choi();
    for (std::size_t e = 0; e < dE; ++e)
      for (std::size_t ep = 0; ep < dE; ++ep)
        for (std::size_t b = 0; b < dB; ++b)
          for (std::size_t bp = 0; bp < dB; ++bp)
            choi((x * dE + e) * dB + b, (x * dE + ep) * dB + bp) =
                Jx(e * dB + b, ep * dB + bp);
  }
  return QuantumChannel(dA, dE, dB, std::move(choi));
}

std::vector<Matrix> kraus_of(const QuantumChannel& chan) {
  const std::size_t d_in = chan.d_in(), dB = chan.d_B();
  auto [vals, vecs] = herm_eig(chan.choi());
  std::vector<Matrix> kraus;
  for (Eigen::Index k = 0; k < vals.size(); ++k) {
    if (vals(k) <= cfg().eig_clip) continue;
    Matrix K(dB, d_in);
    const double s = std::sqrt(vals(k));
    for (std::size_t i = 0; i < d_in; ++i)
      for (std::size_t b = 0; b < dB; ++b) K(b, i) = s * vecs(i * dB + b, k);
    kraus.push_back(std::move(K));
  }
  return kraus;
}

Matrix apply_complementary(const std::vector<Matrix>& kraus, const Matrix& rho) {
  const std::size_t r = kraus.size();
  Matrix out(r, r);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t l = 0; l < r; ++l)
      out(k, l) = (kraus[k] * rho * kraus[l].adjoint()).trace();
  return out;
}

}  // namespace qadv
