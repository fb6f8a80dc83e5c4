#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "analysis.hpp"
#include "codec.hpp"
#include "lattice.hpp"

namespace limag {

const char* version_string();

// Integers above 2^53 in magnitude are serialized as decimal strings so
// double-based JSON readers cannot corrupt them; both forms are accepted
// when parsing.
nlohmann::json int_to_json(Int v);
Int int_from_json(const nlohmann::json& j, const std::string& where);

nlohmann::json parse_json_text(const std::string& text);

nlohmann::json sequence_to_json(const BhSequence& seq);
BhSequence sequence_from_json(const nlohmann::json& j);

nlohmann::json lattice_to_json(const LatticeCode& lat);
LatticeCode lattice_from_json(const nlohmann::json& j);

// A document is a lattice file iff it has a "generator" key.
bool is_lattice_document(const nlohmann::json& j);

nlohmann::json witness_to_json(const std::pair<ErrorVector, ErrorVector>& w);
nlohmann::json verdict_to_json(const std::string& verdict,
                               const std::optional<std::pair<ErrorVector, ErrorVector>>& witness);
nlohmann::json decode_result_to_json(const DecodeResult& r);
nlohmann::json channel_report_to_json(const ChannelReport& r);

std::string group_label(const AbelianGroup& g);
std::string survey_to_csv(const std::vector<ExistenceVerdict>& table);

std::string sha256_hex(std::string_view data);
std::string utc_timestamp_iso8601();

// {command, parameters, versions, seed?, timestamp}; payload_sha256 is added
// by wrap_with_manifest and covers the payload only, never the manifest.
nlohmann::json make_manifest(const std::string& command,
                             const std::map<std::string, std::string>& parameters,
                             std::optional<std::uint64_t> seed);
nlohmann::json wrap_with_manifest(nlohmann::json payload, nlohmann::json manifest);

// Minimal JSON Schema checker (type, properties, required,
// additionalProperties, items, enum, anyOf, pattern, minimum, minItems).
// Returns an error description, or nullopt when the instance conforms.
std::optional<std::string> schema_violation(const nlohmann::json& instance,
                                            const nlohmann::json& schema);

}  // namespace limag
