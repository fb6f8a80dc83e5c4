#include "codec.hpp"

#include <random>
#include <sstream>

namespace limag {

namespace {

std::string vector_brief(const ErrorVector& e) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << ")";
  return os.str();
}

// Unbiased uniform draw from [0, n) via rejection; fully determined by the
// generator's documented output stream.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  std::uint64_t min = (-n) % n;  // 2^64 mod n
  std::uint64_t x;
  do {
    x = rng();
  } while (x < min);
  return x % n;
}

}  // namespace

const ErrorVector* SyndromeTable::lookup(const GroupElement& syndrome) const {
  auto it = table.find(seq.group.index_of(syndrome));
  return it == table.end() ? nullptr : &it->second;
}

SyndromeTable build_syndrome_table(const BhSequence& seq, std::uint64_t cap) {
  seq.validate();
  Int size = sphere_size(seq.params());
  if (size > Int(cap)) {
    throw CapExceededError("sphere too large to tabulate: " + to_string(size) +
                           " entries exceeds cap " + std::to_string(cap));
  }

  SyndromeTable st{seq, {}};
  st.table.reserve(size_t(size));
  SphereEnumerator en(seq.params());
  ErrorVector e;
  while (en.next(e)) {
    UInt key = seq.group.index_of(weighted_sum(seq, e));
    auto [it, inserted] = st.table.emplace(key, e);
    if (!inserted) {
      throw InvalidArgumentError(
          "sequence is not B_t[ell]: sphere vectors " + vector_brief(e) +
          " and " + vector_brief(it->second) + " share a syndrome");
    }
  }
  return st;
}

Codebook extract_codebook(const BhSequence& seq, const Word& offset,
                          std::int64_t sigma, std::uint64_t scan_cap) {
  seq.validate();
  int n = seq.length();
  if (sigma < 1) throw InvalidArgumentError("alphabet size must be >= 1");
  if (int(offset.size()) != n) throw InvalidArgumentError("offset length mismatch");
  for (std::int64_t v : offset) {
    if (v < 0 || v >= sigma) {
      throw InvalidArgumentError("offset entries must lie in [0, sigma)");
    }
  }

  Int total = checked_pow(Int(sigma), n);
  if (total > Int(scan_cap)) {
    throw CapExceededError("alphabet cube of " + to_string(total) +
                           " words exceeds scan cap " + std::to_string(scan_cap));
  }

  Codebook book{seq, sigma, offset, {}};
  UInt target = seq.group.index_of(weighted_sum(seq, offset));
  Word w(size_t(n), 0);
  for (;;) {
    if (seq.group.index_of(weighted_sum(seq, w)) == target) book.words.push_back(w);
    int i = n - 1;
    while (i >= 0 && w[size_t(i)] == sigma - 1) w[size_t(i--)] = 0;
    if (i < 0) break;
    ++w[size_t(i)];
  }
  return book;
}

DecodeResult decode(const Word& received, const SyndromeTable& table,
                    const GroupElement& coset_syndrome, std::int64_t sigma) {
  const BhSequence& seq = table.seq;
  if (int(received.size()) != seq.length()) {
    throw InvalidArgumentError("received word length mismatch");
  }
  for (std::int64_t v : received) {
    if (v < 0 || v >= sigma) {
      throw InvalidArgumentError("received word entries must lie in [0, sigma)");
    }
  }
  seq.group.check(coset_syndrome);

  GroupElement s = seq.group.add(weighted_sum(seq, received),
                                 seq.group.negate(coset_syndrome));
  const ErrorVector* e = table.lookup(s);
  if (e == nullptr) return {};

  DecodeResult res;
  res.codeword.resize(received.size());
  for (size_t i = 0; i < received.size(); ++i) {
    std::int64_t c = received[i] - (*e)[i];
    if (c < 0 || c >= sigma) return {};
    res.codeword[i] = c;
  }
  res.ok = true;
  res.error = *e;
  return res;
}

ChannelReport simulate_channel(const Codebook& book, const SyndromeTable& table,
                               std::uint64_t trials, std::uint64_t seed) {
  if (book.words.empty()) throw InvalidArgumentError("codebook is empty");
  if (book.seq.group != table.seq.group || book.seq.elements != table.seq.elements) {
    throw InvalidArgumentError("codebook and table use different sequences");
  }

  std::vector<ErrorVector> sphere = enumerate_sphere(table.seq.params());
  GroupElement s0 = weighted_sum(book.seq, book.offset);

  ChannelReport rep;
  rep.trials = trials;
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  std::vector<size_t> admissible;
  Word sent(book.offset.size(), 0), noisy(book.offset.size(), 0);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    sent = book.words[size_t(uniform_below(rng, book.words.size()))];

    admissible.clear();
    for (size_t k = 0; k < sphere.size(); ++k) {
      bool fits = true;
      for (size_t i = 0; i < sent.size() && fits; ++i) {
        fits = sent[i] + sphere[k][i] < book.sigma;
      }
      if (fits) admissible.push_back(k);
    }
    const ErrorVector& err = sphere[admissible[size_t(
        uniform_below(rng, admissible.size()))]];

    for (size_t i = 0; i < sent.size(); ++i) noisy[i] = sent[i] + err[i];
    DecodeResult dec = decode(noisy, table, s0, book.sigma);
    if (dec.ok && dec.codeword == sent && dec.error == err) {
      ++rep.decode_successes;
    } else {
      ++rep.failures;
    }
  }
  return rep;
}

}  // namespace limag
