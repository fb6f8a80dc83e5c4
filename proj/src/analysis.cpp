#include "analysis.hpp"

#include <algorithm>
#include <sstream>

namespace limag {

DivisibilityReport necessary_condition_n_minus_2(int n, std::int64_t ell) {
  if (n < 3) throw InvalidArgumentError("divisibility condition needs n >= 3");
  if (ell < 1) throw InvalidArgumentError("magnitude bound must be >= 1");

  DivisibilityReport rep;
  rep.n = n;
  rep.ell = ell;
  rep.sphere = sphere_size({n, n - 2, ell});
  Int base = checked_pow(Int(ell) + 1, n - 2);
  for (Int alpha = 0; alpha <= Int(ell); ++alpha) {
    AlphaCandidate c;
    c.alpha = alpha;
    c.factor = checked_add(Int(ell) + 1, checked_mul(alpha, Int(n - 2 - ell)));
    c.candidate = checked_mul(base, c.factor);
    c.nonpositive = c.factor <= 0;
    c.divides = !c.nonpositive && c.candidate % rep.sphere == 0;
    if (c.divides) {
      rep.witnesses.push_back(alpha);
      rep.holds = true;
    }
    rep.alphas.push_back(c);
  }
  return rep;
}

const char* to_string(ExistenceStatus status) {
  switch (status) {
    case ExistenceStatus::PerfectConstructed: return "perfect-constructed";
    case ExistenceStatus::PerfectFoundBySearch: return "perfect-found-by-search";
    case ExistenceStatus::NecessaryConditionFails: return "necessary-condition-fails";
    case ExistenceStatus::UnknownWithinBounds: return "unknown-within-bounds";
  }
  return "unknown-within-bounds";
}

std::vector<ExistenceVerdict> nonexistence_n_minus_2_ell1(int n_max) {
  std::vector<ExistenceVerdict> out;
  for (int n = 4; n <= n_max; ++n) {
    DivisibilityReport rep = necessary_condition_n_minus_2(n, 1);
    if (rep.holds) {
      throw Error("FATAL inconsistency: divisibility condition holds at n=" +
                  std::to_string(n) + ", ell=1, contradicting nonexistence");
    }
    ExistenceVerdict v;
    v.params = {n, n - 2, 1};
    v.status = ExistenceStatus::NecessaryConditionFails;
    v.condition = std::move(rep);
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

constexpr std::uint64_t kFactorIterationCap = 1u << 26;

std::vector<std::pair<Int, int>> factorize(Int order) {
  std::vector<std::pair<Int, int>> factors;
  std::uint64_t steps = 0;
  for (Int p = 2; p * p <= order; p += (p == 2 ? 1 : 2)) {
    if (++steps > kFactorIterationCap) {
      throw CapExceededError("factorization cap exceeded for order " +
                             to_string(order));
    }
    if (order % p != 0) continue;
    int e = 0;
    while (order % p == 0) {
      order /= p;
      ++e;
    }
    factors.emplace_back(p, e);
  }
  if (order > 1) factors.emplace_back(order, 1);
  return factors;
}

// Partitions of e as nonincreasing part lists.
std::vector<std::vector<int>> partitions(int e) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int max_part) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rest, max_part); part >= 1; --part) {
      cur.push_back(part);
      self(self, rest - part, part);
      cur.pop_back();
    }
  };
  rec(rec, e, e);
  return out;
}

}  // namespace

std::vector<AbelianGroup> abelian_groups_of_order(Int order) {
  if (order < 1) throw InvalidArgumentError("group order must be >= 1");
  if (order == 1) return {AbelianGroup(std::vector<Int>{})};

  auto primes = factorize(order);
  std::vector<std::vector<std::vector<int>>> per_prime;
  per_prime.reserve(primes.size());
  for (auto& [p, e] : primes) per_prime.push_back(partitions(e));

  std::vector<AbelianGroup> out;
  std::vector<size_t> pick(primes.size(), 0);
  for (;;) {
    // Invariant factor i (counted from the largest) multiplies p^lambda_i
    // across primes, where lambda is the chosen exponent partition.
    size_t rank = 0;
    for (size_t k = 0; k < primes.size(); ++k) {
      rank = std::max(rank, per_prime[k][pick[k]].size());
    }
    std::vector<Int> factors(rank, 1);
    for (size_t k = 0; k < primes.size(); ++k) {
      const std::vector<int>& lambda = per_prime[k][pick[k]];
      for (size_t i = 0; i < lambda.size(); ++i) {
        factors[i] = checked_mul(factors[i], checked_pow(primes[k].first, lambda[i]));
      }
    }
    std::reverse(factors.begin(), factors.end());
    out.emplace_back(factors);

    size_t k = 0;
    while (k < primes.size() && ++pick[k] == per_prime[k].size()) pick[k++] = 0;
    if (k == primes.size()) break;
  }

  std::sort(out.begin(), out.end(), [](const AbelianGroup& a, const AbelianGroup& b) {
    if (a.factors().size() != b.factors().size()) {
      return a.factors().size() < b.factors().size();
    }
    return a.factors() < b.factors();
  });
  return out;
}

namespace {

ExistenceVerdict unknown_cell(const CodeParams& p, std::string note) {
  ExistenceVerdict v;
  v.params = p;
  v.status = ExistenceStatus::UnknownWithinBounds;
  v.note = std::move(note);
  return v;
}

// Search every abelian group of order sphere_size(p), cyclic first; the
// first hit wins. nullopt with an empty note means the search was exhaustive.
std::optional<BhSequence> search_all_groups(const CodeParams& p,
                                            const SurveyOptions& opts,
                                            std::string& note) {
  Int m = sphere_size(p);
  if (m > opts.group_cap) {
    note = "group order " + to_string(m) + " exceeds cap " +
           to_string(opts.group_cap);
    return std::nullopt;
  }
  for (const AbelianGroup& g : abelian_groups_of_order(m)) {
    if (auto seq = search_bh(g, p.n, p.t, p.ell, opts.node_cap)) return seq;
  }
  return std::nullopt;
}

ExistenceVerdict survey_cell(const CodeParams& p, const SurveyOptions& opts) {
  ExistenceVerdict v;
  v.params = p;
  try {
    if (p.t == p.n - 1 && p.n >= 2) {
      v.witness = construct_perfect_sequence(p.n, p.ell);
      v.status = ExistenceStatus::PerfectConstructed;
    } else if (p.t == p.n) {
      v.witness = construct_trivial_full_cube(p.n, p.ell);
      v.status = ExistenceStatus::PerfectConstructed;
    } else if (p.t == p.n - 2) {
      DivisibilityReport rep = necessary_condition_n_minus_2(p.n, p.ell);
      if (!rep.holds) {
        if (opts.debug_search_on_fails) {
          std::string note;
          if (search_all_groups(p, opts, note)) {
            throw Error("internal contradiction: search found a sequence "
                        "where the divisibility condition fails");
          }
        }
        v.status = ExistenceStatus::NecessaryConditionFails;
        v.condition = std::move(rep);
      } else {
        std::string note = "search exhausted without a witness";
        if (auto seq = search_all_groups(p, opts, note)) {
          v.witness = std::move(seq);
          v.status = ExistenceStatus::PerfectFoundBySearch;
        } else {
          v = unknown_cell(p, note);
          v.condition = std::move(rep);
        }
      }
    } else {
      std::string note = "search exhausted without a witness";
      if (auto seq = search_all_groups(p, opts, note)) {
        v.witness = std::move(seq);
        v.status = ExistenceStatus::PerfectFoundBySearch;
      } else {
        v = unknown_cell(p, note);
      }
    }
  } catch (const CapExceededError& e) {
    v = unknown_cell(p, e.what());
  } catch (const OverflowError& e) {
    v = unknown_cell(p, e.what());
  }
  return v;
}

}  // namespace

std::vector<ExistenceVerdict> survey(const SurveyOptions& opts) {
  if (opts.n_max < 1) throw InvalidArgumentError("survey needs n_max >= 1");
  if (opts.ell_max < 1) throw InvalidArgumentError("survey needs ell_max >= 1");

  std::vector<ExistenceVerdict> out;
  for (int n = 1; n <= opts.n_max; ++n) {
    for (int t = 1; t <= n; ++t) {
      for (std::int64_t ell = 1; ell <= opts.ell_max; ++ell) {
        out.push_back(survey_cell({n, t, ell}, opts));
      }
    }
  }
  return out;
}

}  // namespace limag
