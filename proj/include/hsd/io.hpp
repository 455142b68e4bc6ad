#pragma once

#include "hsd/constructions.hpp"
#include "hsd/dominance.hpp"
#include "hsd/harness.hpp"
#include "hsd/utility.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace hsd::io {

using Json = nlohmann::json;

/// Parses JSON text, rejecting duplicate object keys. Throws Error(ParseError).
Json parse_strict(std::string_view text);
Json read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const Json& doc);

/// {"atoms": [{"x": "<rational>", "p": "<rational>"}, ...]}
Json to_json(const DiscreteDistribution& d);
DiscreteDistribution distribution_from_json(const Json& doc);
DiscreteDistribution read_distribution(const std::filesystem::path& path);

/// {"holds": bool, "witness": null | {"kind": ..., ...}}
Json to_json(const Verdict& v);
Verdict verdict_from_json(const Json& doc);

/// {"order": n, "terms": [{"w": r, "eta": r}], "affine": {"c0": r, "c1": r}}
Json to_json(const UtilityMixture& u);
UtilityMixture mixture_from_json(const Json& doc);

/// Mirrors ExperimentConfig; every field optional except none.
Json to_json(const ExperimentConfig& cfg);
ExperimentConfig config_from_json(const Json& doc);

Json to_json(const ConsistencyReport& report);
/// One row per (n, m, comparison) with the four counts.
std::string to_csv(const ConsistencyReport& report);

/// {"provenance": s, "params": {name: r}}
Json params_json(const ConstructedPair& pair);

}  // namespace hsd::io
