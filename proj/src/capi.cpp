#include "limag/limag.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "io.hpp"

struct limag_sequence {
  limag::BhSequence seq;
};

struct limag_lattice {
  limag::LatticeCode lat;
};

namespace {

thread_local std::string g_last_error;

limag_status fail(limag_status s, const char* what) {
  g_last_error = what;
  return s;
}

template <typename Fn>
limag_status guarded(Fn&& fn) {
  try {
    fn();
    return LIMAG_OK;
  } catch (const limag::InvalidArgumentError& e) {
    return fail(LIMAG_ERR_INVALID_ARGUMENT, e.what());
  } catch (const limag::OverflowError& e) {
    return fail(LIMAG_ERR_OVERFLOW, e.what());
  } catch (const limag::ParseError& e) {
    return fail(LIMAG_ERR_PARSE, e.what());
  } catch (const limag::CapExceededError& e) {
    return fail(LIMAG_ERR_CAP_EXCEEDED, e.what());
  } catch (const std::exception& e) {
    return fail(LIMAG_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool cond, const char* what) {
  if (!cond) throw limag::InvalidArgumentError(what);
}

limag::Word copy_word(const int64_t* data, size_t n, const char* what) {
  require(data != nullptr, what);
  return limag::Word(data, data + n);
}

void check_alphabet(const limag::Word& w, int64_t sigma, const char* what) {
  for (int64_t v : w) {
    if (v < 0 || v >= sigma) throw limag::InvalidArgumentError(what);
  }
}

std::map<std::string, std::string> kv_to_map(const char* const* kv, size_t pairs) {
  std::map<std::string, std::string> out;
  for (size_t i = 0; i < pairs; ++i) {
    require(kv[2 * i] != nullptr && kv[2 * i + 1] != nullptr,
            "null manifest parameter");
    out[kv[2 * i]] = kv[2 * i + 1];
  }
  return out;
}

}  // namespace

extern "C" {

const char* limag_version(void) { return LIMAG_VERSION; }

int limag_max_magnitude_bits(void) { return limag::max_magnitude_bits(); }

const char* limag_last_error(void) { return g_last_error.c_str(); }

void limag_string_free(char* s) { std::free(s); }

limag_status limag_sequence_construct(int n, int64_t ell, limag_sequence** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    *out = new limag_sequence{limag::construct_perfect_sequence(n, ell)};
  });
}

limag_status limag_sequence_cube(int n, int64_t ell, limag_sequence** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    *out = new limag_sequence{limag::construct_trivial_full_cube(n, ell)};
  });
}

limag_status limag_sequence_from_json(const char* text, limag_sequence** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new limag_sequence{
        limag::sequence_from_json(limag::parse_json_text(text))};
  });
}

limag_status limag_sequence_to_json(const limag_sequence* seq, char** out_json) {
  return guarded([&] {
    require(seq != nullptr && out_json != nullptr, "null argument");
    *out_json = copy_string(limag::sequence_to_json(seq->seq).dump());
  });
}

void limag_sequence_free(limag_sequence* seq) { delete seq; }

int limag_sequence_length(const limag_sequence* seq) {
  return seq == nullptr ? 0 : seq->seq.length();
}

int limag_sequence_t(const limag_sequence* seq) {
  return seq == nullptr ? 0 : seq->seq.t;
}

int64_t limag_sequence_ell(const limag_sequence* seq) {
  return seq == nullptr ? 0 : seq->seq.ell;
}

limag_status limag_sequence_set_params(limag_sequence* seq, int t, int64_t ell) {
  return guarded([&] {
    require(seq != nullptr, "null sequence");
    limag::BhSequence copy = seq->seq;
    copy.t = t;
    copy.ell = ell;
    copy.validate();
    seq->seq = std::move(copy);
  });
}

limag_status limag_sequence_verdict(const limag_sequence* seq, int* verified,
                                    char** verdict_json) {
  return guarded([&] {
    require(seq != nullptr && verified != nullptr && verdict_json != nullptr,
            "null argument");
    limag::BhVerifyResult r = limag::verify_bh(seq->seq);
    std::string verdict = "not-bh";
    if (r.ok) {
      limag::Int size = limag::sphere_size(seq->seq.params());
      verdict = seq->seq.group.order() == size ? "perfect" : "bh";
    }
    *verified = r.ok ? 1 : 0;
    *verdict_json = copy_string(limag::verdict_to_json(verdict, r.witness).dump());
  });
}

limag_status limag_construction_properties(int n, int64_t ell, char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "null argument");
    limag::LPropertyReport rep = limag::check_l_properties(n, ell);
    nlohmann::json j{{"n", n},
                     {"ell", ell},
                     {"m", limag::int_to_json(rep.m)},
                     {"x", limag::int_to_json(rep.x)},
                     {"x_order", limag::int_to_json(limag::element_order(rep.x, rep.m))},
                     {"p1", rep.p1},
                     {"p2", rep.p2},
                     {"p3", rep.p3}};
    *out_json = copy_string(j.dump());
  });
}

limag_status limag_search_bh(const int64_t* factors, size_t rank, int n, int t,
                             int64_t ell, uint64_t node_cap, int* found,
                             limag_sequence** out) {
  return guarded([&] {
    require(found != nullptr && out != nullptr, "null argument");
    require(factors != nullptr || rank == 0, "null factors");
    std::vector<limag::Int> f(factors, factors + rank);
    auto seq = limag::search_bh(limag::AbelianGroup(std::move(f)), n, t, ell,
                                node_cap);
    *found = seq.has_value() ? 1 : 0;
    *out = seq ? new limag_sequence{std::move(*seq)} : nullptr;
  });
}

limag_status limag_sphere_size(int n, int t, int64_t ell, char** out_decimal) {
  return guarded([&] {
    require(out_decimal != nullptr, "null argument");
    *out_decimal = copy_string(limag::to_string(limag::sphere_size({n, t, ell})));
  });
}

limag_status limag_lattice_from_sequence(const limag_sequence* seq,
                                         limag_lattice** out) {
  return guarded([&] {
    require(seq != nullptr && out != nullptr, "null argument");
    *out = new limag_lattice{limag::lattice_from_sequence(seq->seq)};
  });
}

limag_status limag_sequence_from_lattice(const limag_lattice* lat,
                                         limag_sequence** out) {
  return guarded([&] {
    require(lat != nullptr && out != nullptr, "null argument");
    *out = new limag_sequence{limag::sequence_from_lattice(lat->lat)};
  });
}

limag_status limag_lattice_from_json(const char* text, limag_lattice** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new limag_lattice{
        limag::lattice_from_json(limag::parse_json_text(text))};
  });
}

limag_status limag_lattice_to_json(const limag_lattice* lat, char** out_json) {
  return guarded([&] {
    require(lat != nullptr && out_json != nullptr, "null argument");
    *out_json = copy_string(limag::lattice_to_json(lat->lat).dump());
  });
}

void limag_lattice_free(limag_lattice* lat) { delete lat; }

int limag_lattice_n(const limag_lattice* lat) {
  return lat == nullptr ? 0 : lat->lat.n();
}

int limag_lattice_t(const limag_lattice* lat) {
  return lat == nullptr ? 0 : lat->lat.params.t;
}

int64_t limag_lattice_ell(const limag_lattice* lat) {
  return lat == nullptr ? 0 : lat->lat.params.ell;
}

limag_status limag_lattice_set_params(limag_lattice* lat, int t, int64_t ell) {
  return guarded([&] {
    require(lat != nullptr, "null lattice");
    limag::LatticeCode copy = lat->lat;
    copy.params.t = t;
    copy.params.ell = ell;
    copy.validate();
    lat->lat = std::move(copy);
  });
}

limag_status limag_lattice_verdict(const limag_lattice* lat, int* verified,
                                   char** verdict_json) {
  return guarded([&] {
    require(lat != nullptr && verified != nullptr && verdict_json != nullptr,
            "null argument");
    limag::PackingResult r = limag::verify_packing(lat->lat, lat->lat.params);
    std::string verdict = "not-packing";
    if (r.ok) {
      verdict = limag::verify_perfect(lat->lat, lat->lat.params) ? "perfect"
                                                                 : "packing";
    }
    *verified = r.ok ? 1 : 0;
    *verdict_json = copy_string(limag::verdict_to_json(verdict, r.witness).dump());
  });
}

limag_status limag_decode(const limag_sequence* seq, int64_t sigma,
                          const int64_t* offset, const int64_t* received,
                          int* ok, int64_t* codeword, int64_t* error,
                          char** out_json) {
  return guarded([&] {
    require(seq != nullptr && ok != nullptr, "null argument");
    size_t n = size_t(seq->seq.length());
    limag::Word off = copy_word(offset, n, "null offset");
    limag::Word rec = copy_word(received, n, "null received word");
    check_alphabet(off, sigma, "offset entries must lie in [0, sigma)");

    limag::SyndromeTable table = limag::build_syndrome_table(seq->seq);
    limag::GroupElement s0 = limag::weighted_sum(seq->seq, off);
    limag::DecodeResult res = limag::decode(rec, table, s0, sigma);
    if (res.ok && !limag::is_in_sphere(res.error, seq->seq.params())) {
      throw limag::Error("decoded error fell outside the sphere");
    }

    *ok = res.ok ? 1 : 0;
    if (res.ok && codeword != nullptr) {
      std::memcpy(codeword, res.codeword.data(), n * sizeof(int64_t));
    }
    if (res.ok && error != nullptr) {
      std::memcpy(error, res.error.data(), n * sizeof(int64_t));
    }
    if (out_json != nullptr) {
      *out_json = copy_string(limag::decode_result_to_json(res).dump());
    }
  });
}

limag_status limag_simulate(const limag_sequence* seq, int64_t sigma,
                            const int64_t* offset, uint64_t trials,
                            uint64_t seed, int* all_ok, char** out_json) {
  return guarded([&] {
    require(seq != nullptr && all_ok != nullptr && out_json != nullptr,
            "null argument");
    size_t n = size_t(seq->seq.length());
    limag::Word off = copy_word(offset, n, "null offset");

    limag::SyndromeTable table = limag::build_syndrome_table(seq->seq);
    limag::Codebook book = limag::extract_codebook(seq->seq, off, sigma);
    limag::ChannelReport rep = limag::simulate_channel(book, table, trials, seed);

    *all_ok = rep.failures == 0 ? 1 : 0;
    *out_json = copy_string(limag::channel_report_to_json(rep).dump());
  });
}

limag_status limag_survey(int n_max, int64_t ell_max, int64_t group_cap,
                          uint64_t node_cap, int debug_search_on_fails,
                          char** out_csv) {
  return guarded([&] {
    require(out_csv != nullptr, "null argument");
    limag::SurveyOptions opts;
    opts.n_max = n_max;
    opts.ell_max = ell_max;
    opts.group_cap = group_cap;
    opts.node_cap = node_cap;
    opts.debug_search_on_fails = debug_search_on_fails != 0;
    *out_csv = copy_string(limag::survey_to_csv(limag::survey(opts)));
  });
}

limag_status limag_nonexistence_sweep(int n_max, char** out_csv) {
  return guarded([&] {
    require(out_csv != nullptr, "null argument");
    *out_csv =
        copy_string(limag::survey_to_csv(limag::nonexistence_n_minus_2_ell1(n_max)));
  });
}

limag_status limag_document_kind(const char* text, int* is_lattice) {
  return guarded([&] {
    require(text != nullptr && is_lattice != nullptr, "null argument");
    *is_lattice = limag::is_lattice_document(limag::parse_json_text(text)) ? 1 : 0;
  });
}

limag_status limag_sha256(const char* data, size_t len, char** out_hex) {
  return guarded([&] {
    require((data != nullptr || len == 0) && out_hex != nullptr, "null argument");
    *out_hex = copy_string(limag::sha256_hex(std::string_view(data, len)));
  });
}

limag_status limag_wrap_with_manifest(const char* payload_json,
                                      const char* command,
                                      const char* const* parameters_kv,
                                      size_t parameter_pairs,
                                      const uint64_t* seed, char** out_json) {
  return guarded([&] {
    require(payload_json != nullptr && command != nullptr && out_json != nullptr,
            "null argument");
    require(parameters_kv != nullptr || parameter_pairs == 0, "null parameters");
    nlohmann::json payload = limag::parse_json_text(payload_json);
    require(payload.is_object(), "manifest payload must be a JSON object");
    std::optional<uint64_t> s;
    if (seed != nullptr) s = *seed;
    nlohmann::json manifest =
        limag::make_manifest(command, kv_to_map(parameters_kv, parameter_pairs), s);
    *out_json =
        copy_string(limag::wrap_with_manifest(std::move(payload), std::move(manifest))
                        .dump(2));
  });
}

limag_status limag_manifest_for_bytes(const char* payload, size_t payload_len,
                                      const char* command,
                                      const char* const* parameters_kv,
                                      size_t parameter_pairs,
                                      const uint64_t* seed, char** out_json) {
  return guarded([&] {
    require(payload != nullptr && command != nullptr && out_json != nullptr,
            "null argument");
    require(parameters_kv != nullptr || parameter_pairs == 0, "null parameters");
    std::optional<uint64_t> s;
    if (seed != nullptr) s = *seed;
    nlohmann::json manifest =
        limag::make_manifest(command, kv_to_map(parameters_kv, parameter_pairs), s);
    manifest["payload_sha256"] =
        limag::sha256_hex(std::string_view(payload, payload_len));
    *out_json = copy_string(manifest.dump(2));
  });
}

}  // extern "C"
