#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "sequences.hpp"

namespace limag {

// Decoding oracle for a verified sequence: maps each attainable syndrome to
// the unique sphere vector producing it. For perfect codes the table covers
// the whole group.
struct SyndromeTable {
  BhSequence seq;
  std::unordered_map<UInt, ErrorVector, UIntHash> table;

  const ErrorVector* lookup(const GroupElement& syndrome) const;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t(1) << 24;

// Enumerates S(n,t,ell) and keys every vector by its weighted sum. Rejects
// sequences that fail verify_bh, reporting the collision witness.
SyndromeTable build_syndrome_table(const BhSequence& seq,
                                   std::uint64_t cap = kDefaultEnumerationCap);

using Word = std::vector<std::int64_t>;

// Finite-alphabet code: all words of Sigma^n in the coset of the offset.
struct Codebook {
  BhSequence seq;
  std::int64_t sigma = 0;
  Word offset;
  std::vector<Word> words;  // lexicographic order; always contains offset
};

// Full Sigma^n scan; sigma^n above the cap is rejected distinctly.
Codebook extract_codebook(const BhSequence& seq, const Word& offset,
                          std::int64_t sigma,
                          std::uint64_t scan_cap = kDefaultEnumerationCap);

struct DecodeResult {
  bool ok = false;  // false = uncorrectable (a value, not an error)
  Word codeword;
  ErrorVector error;
};

// Syndrome decoding of a received word against the coset with syndrome s0.
// Fails (ok = false) when the syndrome difference is not in the table or
// the implied codeword leaves the alphabet.
DecodeResult decode(const Word& received, const SyndromeTable& table,
                    const GroupElement& coset_syndrome, std::int64_t sigma);

struct ChannelReport {
  std::uint64_t trials = 0;
  std::uint64_t decode_successes = 0;
  std::uint64_t failures = 0;
  std::uint64_t seed = 0;
  std::string rng = "mt19937_64";
};

// Monte Carlo exercise of the channel: uniform codeword, uniform admissible
// error (x + e stays inside Sigma^n), decode, compare. Deterministic for a
// fixed seed.
ChannelReport simulate_channel(const Codebook& book, const SyndromeTable& table,
                               std::uint64_t trials, std::uint64_t seed);

}  // namespace limag
