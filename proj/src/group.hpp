#pragma once

#include <cstdint>
#include <vector>

#include "int128.hpp"

namespace limag {

// Element of a finite abelian group in invariant-factor coordinates.
struct GroupElement {
  std::vector<Int> coords;

  bool operator==(const GroupElement& o) const = default;
};

// Finite abelian group Z_{d1} x ... x Z_{dk} with d1 | d2 | ... | dk and
// every d_i >= 2. The empty factor list is the trivial group.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<Int> invariant_factors);

  static AbelianGroup cyclic(Int order);

  const std::vector<Int>& factors() const { return factors_; }
  int rank() const { return int(factors_.size()); }
  Int order() const { return order_; }

  GroupElement zero() const;
  bool is_valid(const GroupElement& e) const;
  void check(const GroupElement& e) const;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  // c may be any integer; it is reduced per coordinate.
  GroupElement scalar_mul(Int c, const GroupElement& a) const;
  // Reduces arbitrary integer coordinates into range.
  GroupElement reduce(const std::vector<Int>& coords) const;

  // Mixed-radix rank of an element, most significant coordinate first.
  // Doubles as the canonical total order on elements: index order equals
  // coordinate-lexicographic order.
  UInt index_of(const GroupElement& e) const;
  GroupElement element_at(UInt index) const;

  bool operator==(const AbelianGroup& o) const { return factors_ == o.factors_; }

 private:
  std::vector<Int> factors_;
  Int order_ = 1;
};

struct UIntHash {
  size_t operator()(UInt v) const {
    auto mix = [](std::uint64_t x) {
      x ^= x >> 33;
      x *= 0xff51afd7ed558ccdULL;
      x ^= x >> 33;
      return x;
    };
    return size_t(mix(std::uint64_t(v)) ^ mix(std::uint64_t(v >> 64) + 0x9e3779b97f4a7c15ULL));
  }
};

}  // namespace limag
