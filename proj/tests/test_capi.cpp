// Exercises the shared library through the C interface only: opaque handles,
// status codes, string ownership. No internal headers.

#include <limag/limag.h>

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "doctest.h"

namespace {

using nlohmann::json;

// Owns a string returned by the library.
struct CStr {
  char* p = nullptr;
  ~CStr() { limag_string_free(p); }
  std::string str() const { return p == nullptr ? std::string() : std::string(p); }
};

struct Seq {
  limag_sequence* p = nullptr;
  ~Seq() { limag_sequence_free(p); }
};

struct Lat {
  limag_lattice* p = nullptr;
  ~Lat() { limag_lattice_free(p); }
};

json parsed(const CStr& s) { return json::parse(s.str()); }

Seq make_construct(int n, int64_t ell) {
  Seq s;
  REQUIRE(limag_sequence_construct(n, ell, &s.p) == LIMAG_OK);
  REQUIRE(s.p != nullptr);
  return s;
}

Seq make_from_json(const std::string& text) {
  Seq s;
  REQUIRE(limag_sequence_from_json(text.c_str(), &s.p) == LIMAG_OK);
  REQUIRE(s.p != nullptr);
  return s;
}

}  // namespace

TEST_CASE("version and magnitude limit") {
  CHECK(std::string(limag_version()) == "1.0.0");
  CHECK(limag_max_magnitude_bits() == 127);
}

TEST_CASE("sequence construction, accessors, json round trip") {
  Seq s = make_construct(3, 1);
  CHECK(limag_sequence_length(s.p) == 3);
  CHECK(limag_sequence_t(s.p) == 2);
  CHECK(limag_sequence_ell(s.p) == 1);

  CStr text;
  REQUIRE(limag_sequence_to_json(s.p, &text.p) == LIMAG_OK);
  json j = parsed(text);
  CHECK(j["group"]["factors"] == json::array({7}));
  CHECK(j["elements"] == json::parse("[[1],[2],[4]]"));
  CHECK(j["t"] == 2);
  CHECK(j["ell"] == 1);

  Seq back = make_from_json(text.str());
  CStr text2;
  REQUIRE(limag_sequence_to_json(back.p, &text2.p) == LIMAG_OK);
  CHECK(text2.str() == text.str());

  Seq cube;
  REQUIRE(limag_sequence_cube(2, 2, &cube.p) == LIMAG_OK);
  CHECK(limag_sequence_length(cube.p) == 2);
  CHECK(limag_sequence_t(cube.p) == 2);
  CHECK(limag_sequence_ell(cube.p) == 2);
}

TEST_CASE("sequence verdicts") {
  SUBCASE("constructed sequences are perfect") {
    Seq s = make_construct(3, 2);
    int verified = -1;
    CStr verdict;
    REQUIRE(limag_sequence_verdict(s.p, &verified, &verdict.p) == LIMAG_OK);
    CHECK(verified == 1);
    CHECK(parsed(verdict) == json::parse(R"({"verdict":"perfect"})"));
  }

  SUBCASE("lowering t keeps the property but loses perfection") {
    Seq s = make_construct(3, 1);
    REQUIRE(limag_sequence_set_params(s.p, 1, 1) == LIMAG_OK);
    CHECK(limag_sequence_t(s.p) == 1);
    int verified = -1;
    CStr verdict;
    REQUIRE(limag_sequence_verdict(s.p, &verified, &verdict.p) == LIMAG_OK);
    CHECK(verified == 1);
    CHECK(parsed(verdict) == json::parse(R"({"verdict":"bh"})"));
  }

  SUBCASE("repeated element is refuted with a witness") {
    Seq s = make_from_json(
        R"({"group":{"factors":[3]},"elements":[[1],[1]],"t":1,"ell":1})");
    int verified = -1;
    CStr verdict;
    REQUIRE(limag_sequence_verdict(s.p, &verified, &verdict.p) == LIMAG_OK);
    CHECK(verified == 0);
    CHECK(parsed(verdict) ==
          json::parse(R"({"verdict":"not-bh","witness":[[1,0],[0,1]]})"));
  }
}

TEST_CASE("cube verdict is perfect at full cube size") {
  // Z3 x Z3 with t = 2 covers the whole cube: 9 sphere vectors, order 9.
  Seq cube;
  REQUIRE(limag_sequence_cube(2, 2, &cube.p) == LIMAG_OK);
  int verified = -1;
  CStr verdict;
  REQUIRE(limag_sequence_verdict(cube.p, &verified, &verdict.p) == LIMAG_OK);
  CHECK(verified == 1);
  CHECK(parsed(verdict) == json::parse(R"({"verdict":"perfect"})"));
}

TEST_CASE("set_params rejects bad parameters and keeps the old ones") {
  Seq s = make_construct(3, 1);
  CHECK(limag_sequence_set_params(s.p, 5, 1) == LIMAG_ERR_INVALID_ARGUMENT);
  CHECK(limag_sequence_t(s.p) == 2);
  CHECK(limag_sequence_ell(s.p) == 1);
  CHECK(limag_sequence_set_params(s.p, 1, 0) == LIMAG_ERR_INVALID_ARGUMENT);
  CHECK(limag_sequence_ell(s.p) == 1);
  CHECK(limag_sequence_set_params(nullptr, 1, 1) == LIMAG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("construction properties report") {
  CStr props;
  REQUIRE(limag_construction_properties(3, 2, &props.p) == LIMAG_OK);
  json j = parsed(props);
  CHECK(j["n"] == 3);
  CHECK(j["ell"] == 2);
  CHECK(j["m"] == 19);
  CHECK(j["x"] == 11);
  CHECK(j["x_order"] == 3);
  CHECK(j["p1"] == true);
  CHECK(j["p2"] == true);
  CHECK(j["p3"] == true);

  CHECK(limag_construction_properties(3, 2, nullptr) ==
        LIMAG_ERR_INVALID_ARGUMENT);
  CStr big;
  CHECK(limag_construction_properties(200, 9, &big.p) == LIMAG_ERR_OVERFLOW);
}

TEST_CASE("search over a chosen group") {
  SUBCASE("finds the length-3 sequence in Z4") {
    int64_t factors[] = {4};
    int found = -1;
    Seq s;
    REQUIRE(limag_search_bh(factors, 1, 3, 1, 1, uint64_t(1) << 20, &found,
                            &s.p) == LIMAG_OK);
    CHECK(found == 1);
    REQUIRE(s.p != nullptr);
    CStr text;
    REQUIRE(limag_sequence_to_json(s.p, &text.p) == LIMAG_OK);
    json j = parsed(text);
    CHECK(j["group"]["factors"] == json::array({4}));
    CHECK(j["elements"] == json::parse("[[1],[2],[3]]"));

    // Same inputs, same bytes.
    int found2 = -1;
    Seq s2;
    REQUIRE(limag_search_bh(factors, 1, 3, 1, 1, uint64_t(1) << 20, &found2,
                            &s2.p) == LIMAG_OK);
    CStr text2;
    REQUIRE(limag_sequence_to_json(s2.p, &text2.p) == LIMAG_OK);
    CHECK(text2.str() == text.str());
  }

  SUBCASE("reports absence without error") {
    int64_t factors[] = {2};
    int found = -1;
    Seq s;
    REQUIRE(limag_search_bh(factors, 1, 2, 1, 1, uint64_t(1) << 20, &found,
                            &s.p) == LIMAG_OK);
    CHECK(found == 0);
    CHECK(s.p == nullptr);
  }

  SUBCASE("node cap aborts the walk") {
    int64_t factors[] = {19};
    int found = -1;
    Seq s;
    CHECK(limag_search_bh(factors, 1, 3, 2, 2, 1, &found, &s.p) ==
          LIMAG_ERR_CAP_EXCEEDED);
  }

  SUBCASE("argument validation") {
    int found = -1;
    Seq s;
    CHECK(limag_search_bh(nullptr, 1, 2, 1, 1, 1, &found, &s.p) ==
          LIMAG_ERR_INVALID_ARGUMENT);
    int64_t factors[] = {4};
    CHECK(limag_search_bh(factors, 1, 2, 1, 1, 1, nullptr, &s.p) ==
          LIMAG_ERR_INVALID_ARGUMENT);
  }
}

TEST_CASE("sphere sizes as decimal strings") {
  struct Row {
    int n, t;
    int64_t ell;
    const char* expect;
  };
  const Row rows[] = {
      {3, 2, 1, "7"},
      {3, 2, 2, "19"},
      {4, 2, 1, "11"},
      {2, 1, 2, "5"},
      {5, 0, 3, "1"},
      {60, 59, 1, "1152921504606846975"},
  };
  for (const Row& r : rows) {
    CAPTURE(r.n);
    CAPTURE(r.t);
    CStr out;
    REQUIRE(limag_sphere_size(r.n, r.t, r.ell, &out.p) == LIMAG_OK);
    CHECK(out.str() == r.expect);
  }

  CStr out;
  CHECK(limag_sphere_size(0, 0, 1, &out.p) == LIMAG_ERR_INVALID_ARGUMENT);
  CHECK(limag_sphere_size(400, 399, 9, &out.p) == LIMAG_ERR_OVERFLOW);
  CHECK(limag_sphere_size(3, 2, 1, nullptr) == LIMAG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("lattice handles and verdicts") {
  Seq s = make_construct(3, 1);
  Lat lat;
  REQUIRE(limag_lattice_from_sequence(s.p, &lat.p) == LIMAG_OK);
  CHECK(limag_lattice_n(lat.p) == 3);
  CHECK(limag_lattice_t(lat.p) == 2);
  CHECK(limag_lattice_ell(lat.p) == 1);

  CStr text;
  REQUIRE(limag_lattice_to_json(lat.p, &text.p) == LIMAG_OK);
  json j = parsed(text);
  CHECK(j["n"] == 3);
  CHECK(j["generator"] == json::parse("[[1,0,5],[0,1,3],[0,0,7]]"));
  CHECK(j["t"] == 2);
  CHECK(j["ell"] == 1);

  int verified = -1;
  CStr verdict;
  REQUIRE(limag_lattice_verdict(lat.p, &verified, &verdict.p) == LIMAG_OK);
  CHECK(verified == 1);
  CHECK(parsed(verdict) == json::parse(R"({"verdict":"perfect"})"));

  SUBCASE("json round trip") {
    Lat back;
    REQUIRE(limag_lattice_from_json(text.str().c_str(), &back.p) == LIMAG_OK);
    CStr text2;
    REQUIRE(limag_lattice_to_json(back.p, &text2.p) == LIMAG_OK);
    CHECK(text2.str() == text.str());
  }

  SUBCASE("quotient recovers a sequence over a group of the same order") {
    Seq back;
    REQUIRE(limag_sequence_from_lattice(lat.p, &back.p) == LIMAG_OK);
    CStr bt;
    REQUIRE(limag_sequence_to_json(back.p, &bt.p) == LIMAG_OK);
    CHECK(parsed(bt)["group"]["factors"] == json::array({7}));
    int v2 = -1;
    CStr verdict2;
    REQUIRE(limag_sequence_verdict(back.p, &v2, &verdict2.p) == LIMAG_OK);
    CHECK(v2 == 1);
    CHECK(parsed(verdict2)["verdict"] == "perfect");
  }

  SUBCASE("identity lattice is refuted with a witness") {
    Lat ident;
    REQUIRE(limag_lattice_from_json(
                R"({"n":2,"generator":[[1,0],[0,1]],"t":1,"ell":1})",
                &ident.p) == LIMAG_OK);
    int v = -1;
    CStr out;
    REQUIRE(limag_lattice_verdict(ident.p, &v, &out.p) == LIMAG_OK);
    CHECK(v == 0);
    CHECK(parsed(out) ==
          json::parse(R"({"verdict":"not-packing","witness":[[0,1],[0,0]]})"));
  }

  SUBCASE("sparse lattice packs without being perfect") {
    Lat wide;
    REQUIRE(limag_lattice_from_json(
                R"({"n":2,"generator":[[5,0],[0,5]],"t":1,"ell":1})",
                &wide.p) == LIMAG_OK);
    int v = -1;
    CStr out;
    REQUIRE(limag_lattice_verdict(wide.p, &v, &out.p) == LIMAG_OK);
    CHECK(v == 1);
    CHECK(parsed(out) == json::parse(R"({"verdict":"packing"})"));
  }

  SUBCASE("set_params validation") {
    CHECK(limag_lattice_set_params(lat.p, 4, 1) == LIMAG_ERR_INVALID_ARGUMENT);
    CHECK(limag_lattice_t(lat.p) == 2);
    REQUIRE(limag_lattice_set_params(lat.p, 1, 1) == LIMAG_OK);
    CHECK(limag_lattice_t(lat.p) == 1);
  }
}

TEST_CASE("decode through the C interface") {
  Seq s = make_construct(3, 1);
  const int64_t zero3[] = {0, 0, 0};

  SUBCASE("corrects a two-coordinate error") {
    const int64_t received[] = {1, 0, 1};
    int ok = -1;
    int64_t codeword[3] = {9, 9, 9};
    int64_t error[3] = {9, 9, 9};
    CStr out;
    REQUIRE(limag_decode(s.p, 2, zero3, received, &ok, codeword, error,
                         &out.p) == LIMAG_OK);
    CHECK(ok == 1);
    CHECK(std::vector<int64_t>(codeword, codeword + 3) ==
          std::vector<int64_t>{0, 0, 0});
    CHECK(std::vector<int64_t>(error, error + 3) ==
          std::vector<int64_t>{1, 0, 1});
    CHECK(parsed(out) ==
          json::parse(R"({"codeword":[0,0,0],"error":[1,0,1],"ok":true})"));
  }

  SUBCASE("output buffers are optional") {
    const int64_t received[] = {1, 0, 1};
    int ok = -1;
    REQUIRE(limag_decode(s.p, 2, zero3, received, &ok, nullptr, nullptr,
                         nullptr) == LIMAG_OK);
    CHECK(ok == 1);
  }

  SUBCASE("missing syndrome reports an uncorrectable word") {
    Seq gap = make_from_json(
        R"({"group":{"factors":[5]},"elements":[[1],[3]],"t":1,"ell":1})");
    const int64_t zero2[] = {0, 0};
    const int64_t received[] = {1, 1};
    int ok = -1;
    CStr out;
    REQUIRE(limag_decode(gap.p, 2, zero2, received, &ok, nullptr, nullptr,
                         &out.p) == LIMAG_OK);
    CHECK(ok == 0);
    CHECK(parsed(out) == json::parse(R"({"ok":false})"));
  }

  SUBCASE("argument validation") {
    const int64_t received[] = {1, 0, 1};
    const int64_t bad_offset[] = {2, 0, 0};
    const int64_t bad_received[] = {2, 0, 0};
    int ok = -1;
    CHECK(limag_decode(s.p, 2, bad_offset, received, &ok, nullptr, nullptr,
                       nullptr) == LIMAG_ERR_INVALID_ARGUMENT);
    CHECK(limag_decode(s.p, 2, zero3, bad_received, &ok, nullptr, nullptr,
                       nullptr) == LIMAG_ERR_INVALID_ARGUMENT);
    CHECK(limag_decode(s.p, 2, nullptr, received, &ok, nullptr, nullptr,
                       nullptr) == LIMAG_ERR_INVALID_ARGUMENT);
    CHECK(limag_decode(s.p, 2, zero3, nullptr, &ok, nullptr, nullptr,
                       nullptr) == LIMAG_ERR_INVALID_ARGUMENT);
    CHECK(limag_decode(nullptr, 2, zero3, received, &ok, nullptr, nullptr,
                       nullptr) == LIMAG_ERR_INVALID_ARGUMENT);
    CHECK(limag_decode(s.p, 2, zero3, received, nullptr, nullptr, nullptr,
                       nullptr) == LIMAG_ERR_INVALID_ARGUMENT);
  }
}

TEST_CASE("channel simulation through the C interface") {
  Seq s = make_construct(3, 1);
  const int64_t zero3[] = {0, 0, 0};

  int all_ok = -1;
  CStr out;
  REQUIRE(limag_simulate(s.p, 4, zero3, 1000, 42, &all_ok, &out.p) == LIMAG_OK);
  CHECK(all_ok == 1);
  json j = parsed(out);
  CHECK(j["trials"] == 1000);
  CHECK(j["decode_successes"] == 1000);
  CHECK(j["failures"] == 0);
  CHECK(j["seed"] == 42);
  CHECK(j["rng"] == "mt19937_64");

  SUBCASE("same seed, same bytes") {
    int all_ok2 = -1;
    CStr out2;
    REQUIRE(limag_simulate(s.p, 4, zero3, 1000, 42, &all_ok2, &out2.p) ==
            LIMAG_OK);
    CHECK(out2.str() == out.str());
  }

  SUBCASE("zero trials succeed vacuously") {
    int all_ok2 = -1;
    CStr out2;
    REQUIRE(limag_simulate(s.p, 2, zero3, 0, 7, &all_ok2, &out2.p) == LIMAG_OK);
    CHECK(all_ok2 == 1);
    CHECK(parsed(out2)["trials"] == 0);
  }

  SUBCASE("unusable sequences are rejected") {
    Seq dup = make_from_json(
        R"({"group":{"factors":[3]},"elements":[[1],[1]],"t":1,"ell":1})");
    const int64_t zero2[] = {0, 0};
    int all_ok2 = -1;
    CStr out2;
    CHECK(limag_simulate(dup.p, 2, zero2, 10, 1, &all_ok2, &out2.p) ==
          LIMAG_ERR_INVALID_ARGUMENT);
  }
}

TEST_CASE("survey and nonexistence sweep") {
  CStr csv;
  REQUIRE(limag_survey(4, 1, 512, uint64_t(1) << 22, 0, &csv.p) == LIMAG_OK);
  std::string text = csv.str();
  CHECK(text.rfind("n,t,ell,status,witness\n", 0) == 0);
  CHECK(text.find("1,1,1,perfect-constructed,Z2 [1]\n") != std::string::npos);
  CHECK(text.find("3,1,1,perfect-found-by-search,Z4 [1 2 3]\n") !=
        std::string::npos);
  CHECK(text.find("4,1,1,perfect-found-by-search,Z5 [1 2 3 4]\n") !=
        std::string::npos);
  CHECK(text.find("4,2,1,necessary-condition-fails,alphas [0 1]\n") !=
        std::string::npos);

  CStr sweep;
  REQUIRE(limag_nonexistence_sweep(6, &sweep.p) == LIMAG_OK);
  CHECK(sweep.str() ==
        "n,t,ell,status,witness\n"
        "4,2,1,necessary-condition-fails,alphas [0 1]\n"
        "5,3,1,necessary-condition-fails,alphas [0 1]\n"
        "6,4,1,necessary-condition-fails,alphas [0 1]\n");

  CStr empty;
  REQUIRE(limag_nonexistence_sweep(3, &empty.p) == LIMAG_OK);
  CHECK(empty.str() == "n,t,ell,status,witness\n");

  CStr bad;
  CHECK(limag_survey(0, 1, 512, 1, 0, &bad.p) == LIMAG_ERR_INVALID_ARGUMENT);
  CHECK(limag_survey(4, 1, 512, 1, 0, nullptr) == LIMAG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("document kind sniffing") {
  int is_lattice = -1;
  REQUIRE(limag_document_kind(
              R"({"group":{"factors":[7]},"elements":[[1]],"t":1,"ell":1})",
              &is_lattice) == LIMAG_OK);
  CHECK(is_lattice == 0);
  REQUIRE(limag_document_kind(R"({"n":1,"generator":[[2]],"t":1,"ell":1})",
                              &is_lattice) == LIMAG_OK);
  CHECK(is_lattice == 1);
  CHECK(limag_document_kind("nope", &is_lattice) == LIMAG_ERR_PARSE);
  CHECK(limag_document_kind(nullptr, &is_lattice) ==
        LIMAG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("sha-256 and manifests") {
  CStr empty_hash;
  REQUIRE(limag_sha256("", 0, &empty_hash.p) == LIMAG_OK);
  CHECK(empty_hash.str() ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CStr abc_hash;
  REQUIRE(limag_sha256("abc", 3, &abc_hash.p) == LIMAG_OK);
  CHECK(abc_hash.str() ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CStr null_hash;
  REQUIRE(limag_sha256(nullptr, 0, &null_hash.p) == LIMAG_OK);
  CHECK(null_hash.str() == empty_hash.str());
  CHECK(limag_sha256(nullptr, 3, &null_hash.p) == LIMAG_ERR_INVALID_ARGUMENT);

  SUBCASE("wrap a payload") {
    const char* kv[] = {"n", "3", "ell", "1"};
    CStr out;
    REQUIRE(limag_wrap_with_manifest(R"({"a":1})", "construct", kv, 2, nullptr,
                                     &out.p) == LIMAG_OK);
    json j = parsed(out);
    CHECK(j["a"] == 1);
    const json& man = j["manifest"];
    CHECK(man["command"] == "construct");
    CHECK(man["parameters"] == json::parse(R"({"ell":"1","n":"3"})"));
    CHECK(man["versions"] == std::string("limag ") + limag_version());
    CHECK(man["timestamp"].is_string());
    CHECK_FALSE(man.contains("seed"));

    CStr payload_hash;
    std::string payload = json::parse(R"({"a":1})").dump();
    REQUIRE(limag_sha256(payload.c_str(), payload.size(), &payload_hash.p) ==
            LIMAG_OK);
    CHECK(man["payload_sha256"] == payload_hash.str());
  }

  SUBCASE("seed is recorded when given") {
    uint64_t seed = 7;
    CStr out;
    REQUIRE(limag_wrap_with_manifest("{}", "simulate", nullptr, 0, &seed,
                                     &out.p) == LIMAG_OK);
    CHECK(parsed(out)["manifest"]["seed"] == 7);
  }

  SUBCASE("payload must be a json object") {
    CStr out;
    CHECK(limag_wrap_with_manifest("[1,2]", "convert", nullptr, 0, nullptr,
                                   &out.p) == LIMAG_ERR_INVALID_ARGUMENT);
    CHECK(limag_wrap_with_manifest("{bad", "convert", nullptr, 0, nullptr,
                                   &out.p) == LIMAG_ERR_PARSE);
    CHECK(limag_wrap_with_manifest("{}", "convert", nullptr, 1, nullptr,
                                   &out.p) == LIMAG_ERR_INVALID_ARGUMENT);
  }

  SUBCASE("detached manifest for raw bytes") {
    const std::string bytes = "n,t,ell,status,witness\n";
    const char* kv[] = {"n_max", "4"};
    CStr out;
    REQUIRE(limag_manifest_for_bytes(bytes.c_str(), bytes.size(), "survey", kv,
                                     1, nullptr, &out.p) == LIMAG_OK);
    json man = parsed(out);
    CHECK(man["command"] == "survey");
    CHECK(man["parameters"] == json::parse(R"({"n_max":"4"})"));
    CHECK_FALSE(man.contains("seed"));

    CStr bytes_hash;
    REQUIRE(limag_sha256(bytes.c_str(), bytes.size(), &bytes_hash.p) ==
            LIMAG_OK);
    CHECK(man["payload_sha256"] == bytes_hash.str());
  }
}

TEST_CASE("status codes and last_error") {
  Seq s;
  CHECK(limag_sequence_construct(200, 9, &s.p) == LIMAG_ERR_OVERFLOW);
  CHECK(std::string(limag_last_error()).find(
            "magnitude bound 2^127 - 1 exceeded") != std::string::npos);

  CHECK(limag_sequence_from_json("{bad", &s.p) == LIMAG_ERR_PARSE);
  CHECK(std::string(limag_last_error()).empty() == false);

  CHECK(limag_sequence_construct(3, 1, nullptr) == LIMAG_ERR_INVALID_ARGUMENT);
  CHECK(std::string(limag_last_error()) == "null output handle");

  Lat lat;
  CHECK(limag_lattice_from_json(R"({"n":1,"generator":[[0]],"t":1,"ell":1})",
                                &lat.p) == LIMAG_ERR_PARSE);

  CHECK(limag_sequence_length(nullptr) == 0);
  CHECK(limag_sequence_t(nullptr) == 0);
  CHECK(limag_sequence_ell(nullptr) == 0);
  CHECK(limag_lattice_n(nullptr) == 0);
  CHECK(limag_lattice_t(nullptr) == 0);
  CHECK(limag_lattice_ell(nullptr) == 0);

  limag_sequence_free(nullptr);
  limag_lattice_free(nullptr);
  limag_string_free(nullptr);
}
