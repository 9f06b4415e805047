#include "qadv/io.hpp"

#include <fstream>
#include <sstream>

namespace qadv {

json to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw DataError("matrix must be a nonempty array");
  const std::size_t r = j.size(), c = j[0].size();
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (j[i].size() != c) throw DataError("ragged matrix");
    for (std::size_t k = 0; k < c; ++k) {
      const auto& e = j[i][k];
      if (!e.is_array() || e.size() != 2)
        throw DataError("complex entries must be [re, im] pairs");
      m(i, k) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

json state_to_json(const DensityMatrix& rho) {
  return json{{"dim", rho.dim()}, {"entries", to_json(rho.matrix())}};
}

DensityMatrix state_from_json(const json& j) {
  if (!j.contains("dim") || !j.contains("entries"))
    throw DataError("state JSON needs dim and entries");
  const Matrix m = matrix_from_json(j.at("entries"));
  if (j.at("dim").get<std::size_t>() != static_cast<std::size_t>(m.rows()))
    throw DataError("state dim field disagrees with entries");
  try {
    return DensityMatrix(m);
  } catch (const InvalidState& e) {
    throw DataError(std::string("invalid state: ") + e.what());
  }
}

json pure_to_json(const PureState& psi) {
  json amps = json::array();
  for (Eigen::Index i = 0; i < psi.amplitudes().size(); ++i)
    amps.push_back({psi.amplitudes()(i).real(), psi.amplitudes()(i).imag()});
  return json{{"dim", psi.dim()}, {"amplitudes", std::move(amps)}};
}

json channel_to_json(const QuantumChannel& chan) {
  return json{{"dims", {{"A", chan.d_A()}, {"E", chan.d_E()}, {"B", chan.d_B()}}},
              {"kind", "choi"},
              {"choi", to_json(chan.choi())}};
}

LoadedChannel channel_from_json(const json& j) {
  const std::string kind = j.value("kind", "");
  try {
    if (kind == "classical") {
      ClassicalTable t;
      const auto& W = j.at("W");
      t.n_Y = W.size();
      t.n_X = W.at(0).size();
      t.n_E = W.at(0).at(0).size();
      t.W.assign(t.n_Y, {});
      for (std::size_t y = 0; y < t.n_Y; ++y) {
        t.W[y].assign(t.n_X, std::vector<double>(t.n_E, 0.0));
        for (std::size_t x = 0; x < t.n_X; ++x)
          for (std::size_t e = 0; e < t.n_E; ++e)
            t.W[y][x][e] = W.at(y).at(x).at(e).get<double>();
      }
      t.validate();
      return t;
    }
    if (kind == "cq") {
      CQChannelTable t;
      for (const auto& sub : j.at("per_symbol")) {
        auto loaded = channel_from_json(sub);
        if (!std::holds_alternative<QuantumChannel>(loaded))
          throw DataError("cq per-symbol entries must be quantum channels");
        t.per_symbol.push_back(std::get<QuantumChannel>(std::move(loaded)));
      }
      t.validate();
      return t;
    }
    if (kind == "kraus" || kind == "choi") {
      const auto& dims = j.at("dims");
      const std::size_t dA = dims.at("A").get<std::size_t>();
      const std::size_t dE = dims.at("E").get<std::size_t>();
      const std::size_t dB = dims.at("B").get<std::size_t>();
      if (kind == "kraus") {
        std::vector<Matrix> ops;
        for (const auto& k : j.at("kraus")) ops.push_back(matrix_from_json(k));
        return from_kraus(dA, dE, dB, ops);
      }
      return QuantumChannel(dA, dE, dB, matrix_from_json(j.at("choi")));
    }
  } catch (const json::exception& e) {
    throw DataError(std::string("channel JSON schema mismatch: ") + e.what());
  } catch (const InvalidState& e) {
    throw DataError(std::string("channel invariant violated: ") + e.what());
  } catch (const DimensionError& e) {
    throw DataError(std::string("channel dimensions invalid: ") + e.what());
  }
  throw DataError("unknown channel kind '" + kind + "'");
}

namespace {

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::system_error(ENOENT, std::generic_category(), path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw DataError(path + ": malformed JSON: " + e.what());
  }
  return j;
}

}  // namespace

DensityMatrix load_state(const std::string& path) {
  return state_from_json(read_file(path));
}

LoadedChannel load_channel(const std::string& path) {
  return channel_from_json(read_file(path));
}

json result_to_json(const SaddleResult& r) {
  return json{{"value", r.value},
              {"gap", r.gap},
              {"iterations", r.iterations},
              {"converged", r.converged},
              {"rho_star", state_to_json(r.rho_star)},
              {"sigma_star", state_to_json(r.sigma_star)}};
}

json result_to_json(const CQCapacityResult& r) {
  return json{{"value", r.value},
              {"gap", r.gap},
              {"iterations", r.iterations},
              {"converged", r.converged},
              {"p_star", r.p_star},
              {"sigma_star", state_to_json(r.sigma_star)}};
}

json result_to_json(const QQRegularizedResult& r) {
  json signals = json::array();
  for (const auto& s : r.signals) signals.push_back(pure_to_json(s));
  return json{{"value", r.value},
              {"gap", r.gap},
              {"converged", r.converged},
              {"ensemble_size", r.ensemble_size},
              {"p_star", r.p_star},
              {"signals", std::move(signals)},
              {"sigma_star", state_to_json(r.sigma_star)}};
}

json result_to_json(const GameResult& r) {
  json trace = json::array();
  for (const auto& t : r.trace)
    trace.push_back({{"round", t.round},
                     {"lower", t.lower},
                     {"upper", t.upper},
                     {"gap", t.gap}});
  json jammers = json::array();
  for (const auto& s : r.jammer_pool) jammers.push_back(state_to_json(s));
  return json{{"lower_value", r.lower_value},
              {"upper_value", r.upper_value},
              {"gap", r.gap},
              {"converged", r.converged},
              {"code_mixture", r.code_mixture},
              {"jammer_mixture", r.jammer_mixture},
              {"code_pool_size", r.code_pool.size()},
              {"jammer_pool", std::move(jammers)},
              {"trace", std::move(trace)}};
}

std::string game_trace_csv(const GameResult& r) {
  std::ostringstream os;
  os << "round,lower,upper,gap\n";
  os.precision(17);
  for (const auto& t : r.trace)
    os << t.round << ',' << t.lower << ',' << t.upper << ',' << t.gap << '\n';
  return os.str();
}

}  // namespace qadv
