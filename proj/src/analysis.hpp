#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sequences.hpp"

namespace limag {

// One alpha value probed by the divisibility condition for t = n-2.
// candidate = (ell+1)^(n-2) * factor with factor = ell+1 + alpha*(n-2-ell).
// A nonpositive factor never divides (the formula is applied as printed).
struct AlphaCandidate {
  Int alpha = 0;
  Int factor = 0;
  Int candidate = 0;
  bool nonpositive = false;
  bool divides = false;
};

struct DivisibilityReport {
  int n = 0;
  std::int64_t ell = 0;
  Int sphere = 0;
  std::vector<AlphaCandidate> alphas;  // alpha = 0..ell, in order
  std::vector<Int> witnesses;          // alphas whose candidate is divisible
  bool holds = false;
};

// Necessary condition for a perfect code correcting t = n-2 errors:
// sphere size must divide (ell+1)^(n-2) * (ell+1 + alpha*(n-2-ell)) for
// some alpha in [0, ell].
DivisibilityReport necessary_condition_n_minus_2(int n, std::int64_t ell);

enum class ExistenceStatus {
  PerfectConstructed,
  PerfectFoundBySearch,
  NecessaryConditionFails,
  UnknownWithinBounds,
};

const char* to_string(ExistenceStatus status);

struct ExistenceVerdict {
  CodeParams params;
  ExistenceStatus status = ExistenceStatus::UnknownWithinBounds;
  std::optional<BhSequence> witness;
  std::optional<DivisibilityReport> condition;
  std::string note;  // reason when status is unknown-within-bounds
};

// Sweeps n = 4..n_max at ell = 1; every cell must fail the necessary
// condition. A passing cell signals an arithmetic bug and throws.
std::vector<ExistenceVerdict> nonexistence_n_minus_2_ell1(int n_max);

// All abelian groups of the given order, in invariant-factor form, sorted by
// rank then lexicographically (the cyclic group comes first).
std::vector<AbelianGroup> abelian_groups_of_order(Int order);

struct SurveyOptions {
  int n_max = 4;
  std::int64_t ell_max = 2;
  Int group_cap = 512;            // skip search when sphere size exceeds this
  std::uint64_t node_cap = 1u << 22;
  bool debug_search_on_fails = false;  // cross-check condition failures
};

// Existence landscape over 1 <= n <= n_max, 1 <= t <= n, 1 <= ell <= ell_max.
// t = n-1 and t = n use the closed-form constructions; t = n-2 applies the
// divisibility condition before searching; remaining cells search directly.
// Absence of evidence is reported as unknown-within-bounds, never as
// nonexistence.
std::vector<ExistenceVerdict> survey(const SurveyOptions& opts);

}  // namespace limag
