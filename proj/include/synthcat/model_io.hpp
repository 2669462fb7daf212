#pragma once

#include <filesystem>
#include <variant>

#include <json.hpp>

#include "synthcat/bayes_net.hpp"
#include "synthcat/copula.hpp"
#include "synthcat/schema.hpp"

namespace synthcat {

// Persistence format: one JSON document per model with a format_version and
// a model_type tag ("bayes_net" or "gaussian_copula"). Probabilities are
// plain decimal numbers; nlohmann emits shortest round-trip doubles, so a
// save/load cycle preserves them beyond 12 significant digits.

inline constexpr int kFormatVersion = 1;

nlohmann::json schema_to_json(const CategoricalSchema& schema);
CategoricalSchema schema_from_json(const nlohmann::json& j);

nlohmann::json bayes_net_to_json(const BayesNet& model);
BayesNet bayes_net_from_json(const nlohmann::json& j);

nlohmann::json copula_to_json(const CopulaModel& model);
CopulaModel copula_from_json(const nlohmann::json& j);

using AnyModel = std::variant<BayesNet, CopulaModel>;
AnyModel model_from_json(const nlohmann::json& j);

void save_json(const nlohmann::json& j, const std::filesystem::path& path);
nlohmann::json load_json_file(const std::filesystem::path& path);

BayesNet load_bayes_net(const std::filesystem::path& path);
AnyModel load_model(const std::filesystem::path& path);

// Expert structure file: {"parents": {node: [parent, ...], ...}}; nodes
// without an entry are parentless.
Dag dag_from_json(const nlohmann::json& j, SchemaPtr schema);
nlohmann::json dag_to_json(const Dag& dag);

} // namespace synthcat
