// qadv: adversarial quantum channel coding toolkit CLI.
#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "qadv/entropy.hpp"
#include "qadv/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotConverged = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 65;
constexpr int kExitMissingFile = 66;

struct Options {
  std::string channel_path, rho_path, sigma_path;
  std::string out_path;  // empty: stdout
  std::string format = "json";
  double tol = 1e-4;
  double eps = 0.1;
  int max_iter = 5000;
  int rounds = 30;
  std::uint64_t seed = 0;
  std::size_t n = 1;
  std::size_t messages = 2;
};

void apply_numeric_overrides() {
  const char* path = std::getenv("QADV_NUMERIC_CONFIG");
  if (!path) return;
  std::ifstream in(path);
  if (!in) throw std::system_error(ENOENT, std::generic_category(), path);
  qadv::json j;
  in >> j;
  auto& c = qadv::cfg();
  c.hermiticity_tol = j.value("hermiticity_tol", c.hermiticity_tol);
  c.psd_tol = j.value("psd_tol", c.psd_tol);
  c.trace_tol = j.value("trace_tol", c.trace_tol);
  c.tp_tol = j.value("tp_tol", c.tp_tol);
  c.eig_clip = j.value("eig_clip", c.eig_clip);
  c.max_total_dim = j.value("max_total_dim", c.max_total_dim);
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text << '\n';
  } else {
    std::ofstream out(opt.out_path);
    out << text << '\n';
  }
}

qadv::json config_echo(const std::string& command, const Options& opt) {
  return qadv::json{{"command", command}, {"tol", opt.tol},
                    {"max_iter", opt.max_iter}, {"seed", opt.seed},
                    {"n", opt.n},             {"messages", opt.messages}};
}

int finish(const std::string& command, const Options& opt, qadv::json result,
           bool converged, double wall_s) {
  qadv::json out{{"config", config_echo(command, opt)},
                 {"result", std::move(result)},
                 {"wall_time_s", wall_s}};
  emit(opt, out.dump(2));
  return converged ? kExitOk : kExitNotConverged;
}

qadv::QuantumChannel require_quantum(const qadv::LoadedChannel& c) {
  if (std::holds_alternative<qadv::QuantumChannel>(c))
    return std::get<qadv::QuantumChannel>(c);
  if (std::holds_alternative<qadv::ClassicalTable>(c))
    return qadv::classical_to_quantum(std::get<qadv::ClassicalTable>(c));
  throw qadv::DataError("this command needs a quantum or classical channel");
}

qadv::CQChannelTable require_cq(const qadv::LoadedChannel& c) {
  if (std::holds_alternative<qadv::CQChannelTable>(c))
    return std::get<qadv::CQChannelTable>(c);
  if (std::holds_alternative<qadv::ClassicalTable>(c))
    return qadv::cq_table_from_classical(std::get<qadv::ClassicalTable>(c));
  throw qadv::DataError("this command needs a cq or classical channel");
}

qadv::ClassicalTable require_classical(const qadv::LoadedChannel& c) {
  if (!std::holds_alternative<qadv::ClassicalTable>(c))
    throw qadv::DataError("this command needs a classical channel table");
  return std::get<qadv::ClassicalTable>(c);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adversarial quantum channel coding toolkit"};
  app.require_subcommand(1);
  Options opt;
  std::string command;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", opt.tol, "convergence tolerance in bits")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-iter", opt.max_iter, "iteration budget")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", opt.seed, "RNG seed");
    sub->add_option("--out", opt.out_path, "output path (default stdout)");
    sub->add_option("--format", opt.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  auto* ea = app.add_subcommand("capacity-ea", "entanglement-assisted saddle value");
  ea->add_option("--channel", opt.channel_path)->required();
  add_common(ea);

  auto* cq = app.add_subcommand("capacity-sr-cq", "shared-randomness CQ capacity");
  cq->add_option("--channel", opt.channel_path)->required();
  add_common(cq);

  auto* qq = app.add_subcommand("capacity-sr-qq", "finite-n regularized QQ value");
  qq->add_option("--channel", opt.channel_path)->required();
  qq->add_option("--n", opt.n, "number of channel uses (1 or 2)")
      ->check(CLI::Range(1, 2));
  add_common(qq);

  auto* dv = app.add_subcommand("divergence", "relative entropy and D_max");
  dv->add_option("--rho", opt.rho_path)->required();
  dv->add_option("--sigma", opt.sigma_path)->required();
  add_common(dv);

  auto* dh = app.add_subcommand("divergence-dh", "hypothesis-testing divergence");
  dh->add_option("--rho", opt.rho_path)->required();
  dh->add_option("--sigma", opt.sigma_path)->required();
  dh->add_option("--eps", opt.eps, "type-I error bound in (0,1)")->required();
  add_common(dh);

  auto* gv = app.add_subcommand("game-verify", "double-oracle code-vs-jammer game");
  gv->add_option("--channel", opt.channel_path)->required();
  gv->add_option("--messages", opt.messages)->check(CLI::Range(2, 16));
  gv->add_option("--n", opt.n)->check(CLI::Range(1, 2));
  gv->add_option("--rounds", opt.rounds)->check(CLI::PositiveNumber);
  add_common(gv);

  auto* gc = app.add_subcommand("game-classical", "exact classical game LP");
  gc->add_option("--channel", opt.channel_path)->required();
  gc->add_option("--messages", opt.messages)->check(CLI::Range(2, 4));
  gc->add_option("--n", opt.n)->check(CLI::Range(1, 2));
  add_common(gc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  auto wall = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  };

  try {
    apply_numeric_overrides();

    if (ea->parsed()) {
      const auto chan = require_quantum(qadv::load_channel(opt.channel_path));
      const auto res = qadv::solve_ea_saddle(chan, opt.tol, opt.max_iter);
      return finish("capacity-ea", opt, qadv::result_to_json(res),
                    res.converged, wall());
    }
    if (cq->parsed()) {
      const auto table = require_cq(qadv::load_channel(opt.channel_path));
      const auto res = qadv::solve_cq_sr(table, opt.tol, opt.max_iter);
      return finish("capacity-sr-cq", opt, qadv::result_to_json(res),
                    res.converged, wall());
    }
    if (qq->parsed()) {
      const auto chan = require_quantum(qadv::load_channel(opt.channel_path));
      const auto res = qadv::regularized_qq_sr(chan, opt.n, opt.tol, opt.seed);
      return finish("capacity-sr-qq", opt, qadv::result_to_json(res),
                    res.converged, wall());
    }
    if (dv->parsed()) {
      const auto rho = qadv::load_state(opt.rho_path);
      const auto sigma = qadv::load_state(opt.sigma_path);
      qadv::json result{
          {"relative_entropy", qadv::relative_entropy(rho, sigma)},
          {"dmax", qadv::dmax(rho, sigma)},
          {"entropy_rho", qadv::von_neumann_entropy(rho)},
          {"entropy_sigma", qadv::von_neumann_entropy(sigma)}};
      return finish("divergence", opt, std::move(result), true, wall());
    }
    if (dh->parsed()) {
      const auto rho = qadv::load_state(opt.rho_path);
      const auto sigma = qadv::load_state(opt.sigma_path);
      const auto res = qadv::dh(rho, sigma, opt.eps);
      qadv::json result{{"value", res.value},
                        {"eps", opt.eps},
                        {"diagnostics", res.diagnostics}};
      if (res.achiever) result["test_operator"] = qadv::to_json(*res.achiever);
      return finish("divergence-dh", opt, std::move(result), true, wall());
    }
    if (gv->parsed()) {
      const auto chan = require_quantum(qadv::load_channel(opt.channel_path));
      const auto res = qadv::double_oracle(chan, opt.messages, opt.n, opt.tol,
                                           opt.rounds, opt.seed);
      if (opt.format == "csv") {
        emit(opt, qadv::game_trace_csv(res));
        return res.converged ? kExitOk : kExitNotConverged;
      }
      return finish("game-verify", opt, qadv::result_to_json(res),
                    res.converged, wall());
    }
    if (gc->parsed()) {
      const auto table = require_classical(qadv::load_channel(opt.channel_path));
      const auto res = qadv::classical_game_value(table, opt.messages, opt.n);
      if (opt.format == "csv") {
        emit(opt, qadv::game_trace_csv(res));
        return res.converged ? kExitOk : kExitNotConverged;
      }
      return finish("game-classical", opt, qadv::result_to_json(res),
                    res.converged, wall());
    }
  } catch (const std::system_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMissingFile;
  } catch (const qadv::DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const qadv::InvalidState& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const qadv::DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
