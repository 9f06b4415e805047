#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <variant>

#include "qadv/channels.hpp"
#include "qadv/game.hpp"
#include "qadv/saddle.hpp"

namespace qadv {

using json = nlohmann::ordered_json;

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using LoadedChannel = std::variant<QuantumChannel, CQChannelTable, ClassicalTable>;

json to_json(const Matrix& m);           // complex entries as [re, im]
Matrix matrix_from_json(const json& j);

json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const json& j);
json pure_to_json(const PureState& psi);

json channel_to_json(const QuantumChannel& chan);

// Dispatch on the "kind" field: "kraus" | "choi" | "classical" | "cq".
LoadedChannel channel_from_json(const json& j);

DensityMatrix load_state(const std::string& path);
LoadedChannel load_channel(const std::string& path);

json result_to_json(const SaddleResult& r);
json result_to_json(const CQCapacityResult& r);
json result_to_json(const QQRegularizedResult& r);
json result_to_json(const GameResult& r);

std::string game_trace_csv(const GameResult& r);

}  // namespace qadv
