#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "group.hpp"
#include "sphere.hpp"

namespace limag {

// A candidate (or verified) B_t[ell](G) sequence: n group elements whose
// weighted sums over the error sphere S(n,t,ell) are supposed to be
// pairwise distinct.
struct BhSequence {
  AbelianGroup group;
  std::vector<GroupElement> elements;
  int t = 0;
  std::int64_t ell = 0;

  int length() const { return int(elements.size()); }
  CodeParams params() const { return {length(), t, ell}; }

  // Enforces structural invariants: n >= 1, 1 <= t <= n, ell >= 1, and all
  // elements valid coordinates of the group.
  void validate() const;
};

// The syndrome map: sum_j e_j * b_j evaluated in G.
GroupElement weighted_sum(const BhSequence& seq, const ErrorVector& e);

struct BhVerifyResult {
  bool ok = false;
  // On failure, two distinct sphere vectors with equal weighted sums; the
  // first component is the vector at which the first collision was found
  // (lexicographic scan), the second the earlier vector it collides with.
  std::optional<std::pair<ErrorVector, ErrorVector>> witness;
};

BhVerifyResult verify_bh(const BhSequence& seq);

// Perfect B_{n-1}[ell] sequence over Z_m, m = (ell+1)^n - ell^n: the powers
// {1, x, ..., x^{n-1}} of x = (ell+1) * ell^{-1} mod m.
BhSequence construct_perfect_sequence(int n, std::int64_t ell);

struct LPropertyReport {
  bool p1 = false;  // ell invertible mod m
  bool p2 = false;  // x has multiplicative order exactly n
  bool p3 = false;  // 1 + x + ... + x^{n-1} = 0 mod m
  Int m = 0;
  Int x = 0;
  bool all() const { return p1 && p2 && p3; }
};

LPropertyReport check_l_properties(int n, std::int64_t ell);

// Perfect B_n[ell] sequence over (Z_{ell+1})^n: the unit elements. The
// sphere S(n,n,ell) is the whole cube, so the syndrome map is a bijection.
BhSequence construct_trivial_full_cube(int n, std::int64_t ell);

inline constexpr std::uint64_t kDefaultSearchNodeCap = std::uint64_t(1) << 26;

// Exhaustive backtracking search for a B_t[ell](G) sequence of length n.
// Candidates are nondecreasing in the canonical element order and the zero
// element is excluded (it always collides with the empty sum). Returns the
// lexicographically first sequence, or nullopt if none exists. Throws
// CapExceededError when node_cap search nodes were expanded without an
// answer.
std::optional<BhSequence> search_bh(const AbelianGroup& group, int n, int t,
                                    std::int64_t ell,
                                    std::uint64_t node_cap = kDefaultSearchNodeCap);

}  // namespace limag
