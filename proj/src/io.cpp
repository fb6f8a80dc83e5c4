#include "io.hpp"

#include <openssl/evp.h>

#include <ctime>
#include <regex>
#include <sstream>

namespace limag {

using nlohmann::json;

const char* version_string() { return "1.0.0"; }

namespace {

constexpr std::int64_t kJsonSafeMax = std::int64_t(1) << 53;

[[noreturn]] void bad_field(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const json& require_field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad_field(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad_field(where, std::string("missing field \"") + key + "\"");
  return *it;
}

const json& require_array(const json& j, const std::string& where) {
  if (!j.is_array()) bad_field(where, "expected an array");
  return j;
}

std::vector<Int> int_vector_from_json(const json& j, const std::string& where) {
  require_array(j, where);
  std::vector<Int> out;
  out.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    out.push_back(int_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::int64_t small_int_from_json(const json& j, const std::string& where) {
  Int v = int_from_json(j, where);
  if (v > Int(INT64_MAX) || v < Int(INT64_MIN)) bad_field(where, "value out of range");
  return std::int64_t(v);
}

json error_vector_to_json(const ErrorVector& e) {
  json a = json::array();
  for (std::int64_t v : e) a.push_back(v);
  return a;
}

json word_to_json(const Word& w) {
  json a = json::array();
  for (std::int64_t v : w) a.push_back(v);
  return a;
}

}  // namespace

json int_to_json(Int v) {
  if (v <= Int(kJsonSafeMax) && v >= -Int(kJsonSafeMax)) return json(std::int64_t(v));
  return json(to_string(v));
}

Int int_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_string()) {
    try {
      return parse_int(j.get<std::string>());
    } catch (const Error& e) {
      bad_field(where, e.what());
    }
  }
  bad_field(where, "expected an integer or a decimal string");
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

json sequence_to_json(const BhSequence& seq) {
  json factors = json::array();
  for (Int d : seq.group.factors()) factors.push_back(int_to_json(d));
  json elements = json::array();
  for (const GroupElement& b : seq.elements) {
    json coords = json::array();
    for (Int c : b.coords) coords.push_back(int_to_json(c));
    elements.push_back(std::move(coords));
  }
  return json{{"group", json{{"factors", std::move(factors)}}},
              {"elements", std::move(elements)},
              {"t", seq.t},
              {"ell", seq.ell}};
}

BhSequence sequence_from_json(const json& j) {
  const std::string where = "sequence file";
  const json& group = require_field(j, "group", where);
  std::vector<Int> factors =
      int_vector_from_json(require_field(group, "factors", where + ".group"),
                           where + ".group.factors");

  BhSequence seq;
  try {
    seq.group = AbelianGroup(std::move(factors));
  } catch (const InvalidArgumentError& e) {
    bad_field(where + ".group.factors", e.what());
  }

  const json& elements = require_array(require_field(j, "elements", where),
                                       where + ".elements");
  for (size_t i = 0; i < elements.size(); ++i) {
    std::string at = where + ".elements[" + std::to_string(i) + "]";
    GroupElement b{int_vector_from_json(elements[i], at)};
    if (!seq.group.is_valid(b)) bad_field(at, "coordinates out of group range");
    seq.elements.push_back(std::move(b));
  }

  seq.t = int(small_int_from_json(require_field(j, "t", where), where + ".t"));
  seq.ell = small_int_from_json(require_field(j, "ell", where), where + ".ell");
  try {
    seq.validate();
  } catch (const InvalidArgumentError& e) {
    bad_field(where, e.what());
  }
  return seq;
}

json lattice_to_json(const LatticeCode& lat) {
  json rows = json::array();
  for (int r = 0; r < lat.generator.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < lat.generator.cols(); ++c) {
      row.push_back(int_to_json(lat.generator.at(r, c)));
    }
    rows.push_back(std::move(row));
  }
  return json{{"n", lat.n()},
              {"generator", std::move(rows)},
              {"t", lat.params.t},
              {"ell", lat.params.ell}};
}

LatticeCode lattice_from_json(const json& j) {
  const std::string where = "lattice file";
  int n = int(small_int_from_json(require_field(j, "n", where), where + ".n"));
  if (n < 1) bad_field(where + ".n", "dimension must be >= 1");

  const json& rows = require_array(require_field(j, "generator", where),
                                   where + ".generator");
  if (int(rows.size()) != n) bad_field(where + ".generator", "expected n rows");

  LatticeCode lat;
  lat.generator = IntMatrix(n, n);
  for (int r = 0; r < n; ++r) {
    std::string at = where + ".generator[" + std::to_string(r) + "]";
    std::vector<Int> row = int_vector_from_json(rows[size_t(r)], at);
    if (int(row.size()) != n) bad_field(at, "expected n entries");
    for (int c = 0; c < n; ++c) lat.generator.at(r, c) = row[size_t(c)];
  }

  lat.params.n = n;
  lat.params.t = int(small_int_from_json(require_field(j, "t", where), where + ".t"));
  lat.params.ell = small_int_from_json(require_field(j, "ell", where), where + ".ell");
  try {
    lat.validate();
  } catch (const InvalidArgumentError& e) {
    bad_field(where, e.what());
  }
  return lat;
}

bool is_lattice_document(const json& j) {
  return j.is_object() && j.contains("generator");
}

json witness_to_json(const std::pair<ErrorVector, ErrorVector>& w) {
  return json::array({error_vector_to_json(w.first), error_vector_to_json(w.second)});
}

json verdict_to_json(const std::string& verdict,
                     const std::optional<std::pair<ErrorVector, ErrorVector>>& witness) {
  json j{{"verdict", verdict}};
  if (witness) j["witness"] = witness_to_json(*witness);
  return j;
}

json decode_result_to_json(const DecodeResult& r) {
  json j{{"ok", r.ok}};
  if (r.ok) {
    j["codeword"] = word_to_json(r.codeword);
    j["error"] = error_vector_to_json(r.error);
  }
  return j;
}

json channel_report_to_json(const ChannelReport& r) {
  return json{{"trials", r.trials},
              {"decode_successes", r.decode_successes},
              {"failures", r.failures},
              {"seed", r.seed},
              {"rng", r.rng}};
}

std::string group_label(const AbelianGroup& g) {
  if (g.factors().empty()) return "Z1";
  std::string out;
  for (size_t i = 0; i < g.factors().size(); ++i) {
    if (i) out += "x";
    out += "Z" + to_string(g.factors()[i]);
  }
  return out;
}

namespace {

// Comma-free witness text for the CSV column: "Z7 [1 2 4]" for rank-one
// groups, "Z2xZ2 [(1 0) (0 1)]" otherwise, "alphas [0 1]" for condition
// failures.
std::string witness_text(const ExistenceVerdict& v) {
  if (v.status == ExistenceStatus::NecessaryConditionFails) {
    std::string out = "alphas [";
    for (size_t i = 0; i < v.condition->alphas.size(); ++i) {
      out += (i ? " " : "") + to_string(v.condition->alphas[i].alpha);
    }
    return out + "]";
  }
  if (!v.witness) return "";
  const BhSequence& seq = *v.witness;
  std::string out = group_label(seq.group) + " [";
  bool multi = seq.group.rank() > 1;
  for (size_t i = 0; i < seq.elements.size(); ++i) {
    if (i) out += " ";
    if (multi) out += "(";
    const auto& coords = seq.elements[i].coords;
    for (size_t c = 0; c < coords.size(); ++c) {
      out += (c ? " " : "") + to_string(coords[c]);
    }
    if (multi) out += ")";
  }
  return out + "]";
}

}  // namespace

std::string survey_to_csv(const std::vector<ExistenceVerdict>& table) {
  std::ostringstream os;
  os << "n,t,ell,status,witness\n";
  for (const ExistenceVerdict& v : table) {
    os << v.params.n << "," << v.params.t << "," << v.params.ell << ","
       << to_string(v.status) << "," << witness_text(v) << "\n";
  }
  return os.str();
}

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out(size_t(len) * 2, '0');
  for (unsigned int i = 0; i < len; ++i) {
    out[2 * i] = hex[md[i] >> 4];
    out[2 * i + 1] = hex[md[i] & 0xf];
  }
  return out;
}

std::string utc_timestamp_iso8601() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json make_manifest(const std::string& command,
                   const std::map<std::string, std::string>& parameters,
                   std::optional<std::uint64_t> seed) {
  json params = json::object();
  for (const auto& [k, v] : parameters) params[k] = v;
  json m{{"command", command},
         {"parameters", std::move(params)},
         {"versions", std::string("limag ") + version_string()},
         {"timestamp", utc_timestamp_iso8601()}};
  if (seed) m["seed"] = *seed;
  return m;
}

json wrap_with_manifest(json payload, json manifest) {
  manifest["payload_sha256"] = sha256_hex(payload.dump());
  payload["manifest"] = std::move(manifest);
  return payload;
}

namespace {

bool type_matches(const json& inst, const std::string& type) {
  if (type == "object") return inst.is_object();
  if (type == "array") return inst.is_array();
  if (type == "string") return inst.is_string();
  if (type == "integer") return inst.is_number_integer();
  if (type == "number") return inst.is_number();
  if (type == "boolean") return inst.is_boolean();
  if (type == "null") return inst.is_null();
  return false;
}

std::optional<std::string> check(const json& inst, const json& schema,
                                 const std::string& path) {
  if (schema.is_boolean()) {
    if (schema.get<bool>()) return std::nullopt;
    return path + ": disallowed";
  }

  if (auto it = schema.find("anyOf"); it != schema.end()) {
    for (const json& option : *it) {
      if (!check(inst, option, path)) return std::nullopt;
    }
    return path + ": matches no anyOf alternative";
  }

  if (auto it = schema.find("type"); it != schema.end()) {
    if (!type_matches(inst, it->get<std::string>())) {
      return path + ": expected type " + it->get<std::string>();
    }
  }

  if (auto it = schema.find("enum"); it != schema.end()) {
    bool hit = false;
    for (const json& v : *it) hit = hit || v == inst;
    if (!hit) return path + ": value not in enum";
  }

  if (auto it = schema.find("pattern"); it != schema.end()) {
    if (!inst.is_string() ||
        !std::regex_search(inst.get<std::string>(), std::regex(it->get<std::string>()))) {
      return path + ": pattern mismatch";
    }
  }

  if (auto it = schema.find("minimum"); it != schema.end()) {
    if (inst.is_number() && inst.get<double>() < it->get<double>()) {
      return path + ": below minimum";
    }
  }

  if (inst.is_array()) {
    if (auto it = schema.find("minItems"); it != schema.end()) {
      if (inst.size() < it->get<size_t>()) return path + ": fewer than minItems";
    }
    if (auto it = schema.find("items"); it != schema.end()) {
      for (size_t i = 0; i < inst.size(); ++i) {
        if (auto err = check(inst[i], *it, path + "[" + std::to_string(i) + "]")) {
          return err;
        }
      }
    }
  }

  if (inst.is_object()) {
    if (auto it = schema.find("required"); it != schema.end()) {
      for (const json& key : *it) {
        if (!inst.contains(key.get<std::string>())) {
          return path + ": missing required \"" + key.get<std::string>() + "\"";
        }
      }
    }
    const json* props = nullptr;
    if (auto it = schema.find("properties"); it != schema.end()) props = &*it;
    for (auto& [key, value] : inst.items()) {
      const json* sub = nullptr;
      if (props) {
        if (auto p = props->find(key); p != props->end()) sub = &*p;
      }
      if (sub) {
        if (auto err = check(value, *sub, path + "." + key)) return err;
      } else if (auto it = schema.find("additionalProperties"); it != schema.end()) {
        if (auto err = check(value, *it, path + "." + key)) return err;
      }
    }
  }

  return std::nullopt;
}

}  // namespace

std::optional<std::string> schema_violation(const json& instance, const json& schema) {
  return check(instance, schema, "$");
}

}  // namespace limag
