#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <limag/limag.h>

namespace {

struct CStr {
  char* p = nullptr;
  ~CStr() { limag_string_free(p); }
  const char* get() const { return p == nullptr ? "" : p; }
  std::string str() const { return get(); }
};

struct SeqHandle {
  limag_sequence* p = nullptr;
  ~SeqHandle() { limag_sequence_free(p); }
};

struct LatHandle {
  limag_lattice* p = nullptr;
  ~LatHandle() { limag_lattice_free(p); }
};

// Internal exception carrying the process exit code; main catches it.
struct Exit {
  int code;
};

[[noreturn]] void die(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  throw Exit{2};
}

void check(limag_status status) {
  if (status != LIMAG_OK) die(limag_last_error());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) die("cannot write " + path);
  out << data;
  if (!out) die("short write to " + path);
}

void emit(const std::string& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc << "\n";
  } else {
    write_file(out_path, doc + "\n");
  }
}

std::vector<int64_t> parse_word(const std::string& text, const char* what) {
  std::vector<int64_t> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      die(std::string(what) + ": \"" + item + "\" is not an integer");
    }
  }
  if (out.empty()) die(std::string(what) + ": empty vector");
  return out;
}

std::string sha256(const std::string& data) {
  CStr hex;
  check(limag_sha256(data.data(), data.size(), &hex.p));
  return hex.str();
}

// Manifest parameter list: alternating key, value.
class Params {
 public:
  void add(const std::string& key, const std::string& value) {
    items_.push_back(key);
    items_.push_back(value);
  }
  std::vector<const char*> view() const {
    std::vector<const char*> v;
    v.reserve(items_.size());
    for (const std::string& s : items_) v.push_back(s.c_str());
    return v;
  }
  size_t pairs() const { return items_.size() / 2; }

 private:
  std::vector<std::string> items_;
};

std::string with_manifest(const std::string& payload, const std::string& command,
                          const Params& params, const uint64_t* seed) {
  CStr doc;
  auto kv = params.view();
  check(limag_wrap_with_manifest(payload.c_str(), command.c_str(), kv.data(),
                                 params.pairs(), seed, &doc.p));
  return doc.str();
}

std::string manifest_sidecar(const std::string& bytes, const std::string& command,
                             const Params& params, const uint64_t* seed) {
  CStr doc;
  auto kv = params.view();
  check(limag_manifest_for_bytes(bytes.data(), bytes.size(), command.c_str(),
                                 kv.data(), params.pairs(), seed, &doc.p));
  return doc.str();
}

struct ConstructArgs {
  int n = 0;
  int64_t ell = 0;
  std::string family = "perfect";
  bool properties = false;
  std::string out;
};

int cmd_construct(const ConstructArgs& a) {
  Params params;
  params.add("n", std::to_string(a.n));
  params.add("ell", std::to_string(a.ell));
  params.add("family", a.family);

  std::string payload;
  if (a.properties) {
    if (a.family != "perfect") die("--properties applies to --family perfect");
    CStr json;
    check(limag_construction_properties(a.n, a.ell, &json.p));
    payload = json.str();
    params.add("report", "properties");
  } else {
    SeqHandle seq;
    if (a.family == "perfect") {
      check(limag_sequence_construct(a.n, a.ell, &seq.p));
    } else if (a.family == "cube") {
      check(limag_sequence_cube(a.n, a.ell, &seq.p));
    } else {
      die("unknown family \"" + a.family + "\" (expected perfect or cube)");
    }
    CStr json;
    check(limag_sequence_to_json(seq.p, &json.p));
    payload = json.str();
  }

  emit(with_manifest(payload, "construct", params, nullptr), a.out);
  return 0;
}

struct VerifyArgs {
  std::string input;
  int t = -1;
  int64_t ell = -1;
  std::string out;
};

int cmd_verify(const VerifyArgs& a) {
  std::string text = read_file(a.input);
  int is_lattice = 0;
  check(limag_document_kind(text.c_str(), &is_lattice));

  int verified = 0;
  CStr verdict;
  int t = a.t;
  int64_t ell = a.ell;
  if (is_lattice) {
    LatHandle lat;
    check(limag_lattice_from_json(text.c_str(), &lat.p));
    if (t < 0) t = limag_lattice_t(lat.p);
    if (ell < 0) ell = limag_lattice_ell(lat.p);
    check(limag_lattice_set_params(lat.p, t, ell));
    check(limag_lattice_verdict(lat.p, &verified, &verdict.p));
  } else {
    SeqHandle seq;
    check(limag_sequence_from_json(text.c_str(), &seq.p));
    if (t < 0) t = limag_sequence_t(seq.p);
    if (ell < 0) ell = limag_sequence_ell(seq.p);
    check(limag_sequence_set_params(seq.p, t, ell));
    check(limag_sequence_verdict(seq.p, &verified, &verdict.p));
  }

  Params params;
  params.add("input", a.input);
  params.add("input_sha256", sha256(text));
  params.add("kind", is_lattice ? "lattice" : "sequence");
  params.add("t", std::to_string(t));
  params.add("ell", std::to_string(ell));
  emit(with_manifest(verdict.str(), "verify", params, nullptr), a.out);
  return verified ? 0 : 1;
}

struct DecodeArgs {
  std::string input;
  std::string word;
  int64_t sigma = 0;
  std::string offset;
  std::string out;
};

int cmd_decode(const DecodeArgs& a) {
  std::string text = read_file(a.input);
  SeqHandle seq;
  check(limag_sequence_from_json(text.c_str(), &seq.p));
  size_t n = size_t(limag_sequence_length(seq.p));

  std::vector<int64_t> offset = parse_word(a.offset, "--offset");
  std::vector<int64_t> word = parse_word(a.word, "received word");
  if (offset.size() != n) die("--offset must have n entries");
  if (word.size() != n) die("received word must have n entries");

  int ok = 0;
  std::vector<int64_t> codeword(n), error(n);
  CStr json;
  check(limag_decode(seq.p, a.sigma, offset.data(), word.data(), &ok,
                     codeword.data(), error.data(), &json.p));

  Params params;
  params.add("input", a.input);
  params.add("input_sha256", sha256(text));
  params.add("sigma", std::to_string(a.sigma));
  params.add("offset", a.offset);
  params.add("word", a.word);
  emit(with_manifest(json.str(), "decode", params, nullptr), a.out);
  return ok ? 0 : 1;
}

struct SimulateArgs {
  std::string input;
  int64_t sigma = 0;
  std::string offset;
  uint64_t trials = 1000;
  uint64_t seed = 0;
  std::string out;
};

int cmd_simulate(const SimulateArgs& a) {
  std::string text = read_file(a.input);
  SeqHandle seq;
  check(limag_sequence_from_json(text.c_str(), &seq.p));
  size_t n = size_t(limag_sequence_length(seq.p));

  std::vector<int64_t> offset = parse_word(a.offset, "--offset");
  if (offset.size() != n) die("--offset must have n entries");

  int all_ok = 0;
  CStr json;
  check(limag_simulate(seq.p, a.sigma, offset.data(), a.trials, a.seed, &all_ok,
                       &json.p));

  Params params;
  params.add("input", a.input);
  params.add("input_sha256", sha256(text));
  params.add("sigma", std::to_string(a.sigma));
  params.add("offset", a.offset);
  params.add("trials", std::to_string(a.trials));
  emit(with_manifest(json.str(), "simulate", params, &a.seed), a.out);
  return all_ok ? 0 : 1;
}

struct SurveyArgs {
  int max_n = 0;
  int64_t max_ell = 1;
  int64_t group_cap = 512;
  uint64_t node_cap = uint64_t(1) << 22;
  bool sweep = false;
  bool debug_search_on_fails = false;
  std::string out;
};

int cmd_survey(const SurveyArgs& a) {
  CStr csv;
  if (a.sweep) {
    check(limag_nonexistence_sweep(a.max_n, &csv.p));
  } else {
    check(limag_survey(a.max_n, a.max_ell, a.group_cap, a.node_cap,
                       a.debug_search_on_fails ? 1 : 0, &csv.p));
  }

  if (a.out.empty()) {
    std::cout << csv.get();
    return 0;
  }
  write_file(a.out, csv.str());

  Params params;
  params.add("max_n", std::to_string(a.max_n));
  params.add("mode", a.sweep ? "sweep" : "survey");
  if (!a.sweep) {
    params.add("max_ell", std::to_string(a.max_ell));
    params.add("group_cap", std::to_string(a.group_cap));
    params.add("node_cap", std::to_string(a.node_cap));
  }
  write_file(a.out + ".manifest.json",
             manifest_sidecar(csv.str(), "survey", params, nullptr) + "\n");
  return 0;
}

struct ConvertArgs {
  std::string input;
  std::string to;
  std::string out;
};

int cmd_convert(const ConvertArgs& a) {
  std::string text = read_file(a.input);
  int is_lattice = 0;
  check(limag_document_kind(text.c_str(), &is_lattice));

  CStr json;
  if (a.to == "lattice") {
    if (is_lattice) die("input is already a lattice file");
    SeqHandle seq;
    check(limag_sequence_from_json(text.c_str(), &seq.p));
    LatHandle lat;
    check(limag_lattice_from_sequence(seq.p, &lat.p));
    check(limag_lattice_to_json(lat.p, &json.p));
  } else if (a.to == "sequence") {
    if (!is_lattice) die("input is already a sequence file");
    LatHandle lat;
    check(limag_lattice_from_json(text.c_str(), &lat.p));
    SeqHandle seq;
    check(limag_sequence_from_lattice(lat.p, &seq.p));
    check(limag_sequence_to_json(seq.p, &json.p));
  } else {
    die("--to must be sequence or lattice");
  }

  Params params;
  params.add("input", a.input);
  params.add("input_sha256", sha256(text));
  params.add("to", a.to);
  emit(with_manifest(json.str(), "convert", params, nullptr), a.out);
  return 0;
}

// Home subcommand for every library operation; the audit test freezes this
// table. Sorted by operation name.
constexpr struct {
  const char* op;
  const char* cmd;
} kRegistry[] = {
    {"abs_det", "verify"},
    {"build_syndrome_table", "decode"},
    {"check_l_properties", "construct"},
    {"construct_perfect_sequence", "construct"},
    {"construct_trivial_full_cube", "construct"},
    {"decode", "decode"},
    {"element_order", "construct"},
    {"enumerate_sphere", "simulate"},
    {"extract_codebook", "simulate"},
    {"hermite_normal_form", "convert"},
    {"is_in_sphere", "decode"},
    {"lattice_from_sequence", "convert"},
    {"mod_inverse", "construct"},
    {"necessary_condition_n_minus_2", "survey"},
    {"nonexistence_n_minus_2_ell1", "survey"},
    {"search_bh", "survey"},
    {"sequence_from_lattice", "convert"},
    {"simulate_channel", "simulate"},
    {"smith_normal_form", "convert"},
    {"sphere_size", "verify"},
    {"survey", "survey"},
    {"verify_bh", "verify"},
    {"verify_packing", "verify"},
    {"verify_perfect", "verify"},
    {"volume", "verify"},
    {"weighted_sum", "verify"},
};

int cmd_registry() {
  for (const auto& row : kRegistry) {
    std::cout << row.op << "," << row.cmd << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"perfect codes correcting asymmetric limited-magnitude errors"};
  app.set_version_flag("--version", std::string("limag ") + limag_version());
  app.require_subcommand(1);

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand(
      "construct", "build a perfect sequence (writes a sequence file)");
  construct->add_option("--n", construct_args.n, "code length")->required();
  construct->add_option("--ell", construct_args.ell, "error magnitude bound")
      ->required();
  construct->add_option("--family", construct_args.family,
                        "perfect (t=n-1) or cube (t=n)");
  construct->add_flag("--properties", construct_args.properties,
                      "report construction diagnostics instead of the sequence");
  construct->add_option("--out", construct_args.out, "output file (default stdout)");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify", "verify a sequence or lattice file (writes a verdict)");
  verify->add_option("input", verify_args.input, "sequence or lattice JSON file")
      ->required();
  verify->add_option("--t", verify_args.t, "override the claimed t");
  verify->add_option("--ell", verify_args.ell, "override the claimed ell");
  verify->add_option("--out", verify_args.out, "output file (default stdout)");

  DecodeArgs decode_args;
  auto* decode = app.add_subcommand(
      "decode", "syndrome-decode a received word against a sequence file");
  decode->add_option("input", decode_args.input, "sequence JSON file")->required();
  decode->add_option("word", decode_args.word, "received word, comma-separated")
      ->required();
  decode->add_option("--sigma", decode_args.sigma, "alphabet size")->required();
  decode->add_option("--offset", decode_args.offset,
                     "codeword coset offset, comma-separated")
      ->required();
  decode->add_option("--out", decode_args.out, "output file (default stdout)");

  SimulateArgs simulate_args;
  auto* simulate = app.add_subcommand(
      "simulate", "run the limited-magnitude channel against a sequence file");
  simulate->add_option("input", simulate_args.input, "sequence JSON file")
      ->required();
  simulate->add_option("--sigma", simulate_args.sigma, "alphabet size")->required();
  simulate->add_option("--offset", simulate_args.offset,
                       "codeword coset offset, comma-separated")
      ->required();
  simulate->add_option("--trials", simulate_args.trials, "number of trials");
  simulate->add_option("--seed", simulate_args.seed, "64-bit RNG seed")->required();
  simulate->add_option("--out", simulate_args.out, "output file (default stdout)");

  SurveyArgs survey_args;
  auto* survey = app.add_subcommand(
      "survey", "existence landscape over (n, t, ell), CSV output");
  survey->add_option("--max-n", survey_args.max_n, "largest code length")
      ->required();
  survey->add_option("--max-ell", survey_args.max_ell, "largest magnitude bound");
  survey->add_option("--group-cap", survey_args.group_cap,
                     "skip search when the group order exceeds this");
  survey->add_option("--node-cap", survey_args.node_cap,
                     "search backtracking node budget");
  survey->add_flag("--sweep", survey_args.sweep,
                   "run only the t=n-2, ell=1 divisibility sweep");
  survey
      ->add_flag("--debug-search-on-fails", survey_args.debug_search_on_fails,
                 "cross-check failed condition cells by searching anyway")
      ->group("");
  survey->add_option("--out", survey_args.out, "CSV file (manifest sidecar added)");

  ConvertArgs convert_args;
  auto* convert = app.add_subcommand(
      "convert", "convert between sequence and lattice files");
  convert->add_option("input", convert_args.input, "sequence or lattice JSON file")
      ->required();
  convert->add_option("--to", convert_args.to, "target kind: sequence or lattice")
      ->required();
  convert->add_option("--out", convert_args.out, "output file (default stdout)");

  auto* registry = app.add_subcommand(
      "registry", "print the operation-to-subcommand coverage table");
  registry->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (construct->parsed()) return cmd_construct(construct_args);
    if (verify->parsed()) return cmd_verify(verify_args);
    if (decode->parsed()) return cmd_decode(decode_args);
    if (simulate->parsed()) return cmd_simulate(simulate_args);
    if (survey->parsed()) return cmd_survey(survey_args);
    if (convert->parsed()) return cmd_convert(convert_args);
    if (registry->parsed()) return cmd_registry();
  } catch (const Exit& e) {
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
