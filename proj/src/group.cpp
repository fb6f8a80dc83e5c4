#include "group.hpp"

namespace limag {

AbelianGroup::AbelianGroup(std::vector<Int> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  order_ = 1;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) {
      throw InvalidArgumentError("invariant factors must be >= 2");
    }
    if (i > 0 && factors_[i] % factors_[i - 1] != 0) {
      throw InvalidArgumentError("invariant factors must form a divisibility chain");
    }
    order_ = checked_mul(order_, factors_[i]);
  }
}

AbelianGroup AbelianGroup::cyclic(Int order) {
  if (order < 1) throw InvalidArgumentError("group order must be >= 1");
  if (order == 1) return AbelianGroup{};
  return AbelianGroup{{order}};
}

GroupElement AbelianGroup::zero() const {
  return GroupElement{std::vector<Int>(factors_.size(), 0)};
}

bool AbelianGroup::is_valid(const GroupElement& e) const {
  if (e.coords.size() != factors_.size()) return false;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (e.coords[i] < 0 || e.coords[i] >= factors_[i]) return false;
  }
  return true;
}

void AbelianGroup::check(const GroupElement& e) const {
  if (!is_valid(e)) {
    throw InvalidArgumentError("group element coordinates out of range");
  }
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement out = zero();
  for (size_t i = 0; i < factors_.size(); ++i) {
    out.coords[i] = add_mod(a.coords[i], b.coords[i], factors_[i]);
  }
  return out;
}

GroupElement AbelianGroup::negate(const GroupElement& a) const {
  GroupElement out = zero();
  for (size_t i = 0; i < factors_.size(); ++i) {
    out.coords[i] = a.coords[i] == 0 ? 0 : factors_[i] - a.coords[i];
  }
  return out;
}

GroupElement AbelianGroup::scalar_mul(Int c, const GroupElement& a) const {
  GroupElement out = zero();
  for (size_t i = 0; i < factors_.size(); ++i) {
    out.coords[i] = mul_mod(floor_mod(c, factors_[i]), a.coords[i], factors_[i]);
  }
  return out;
}

GroupElement AbelianGroup::reduce(const std::vector<Int>& coords) const {
  if (coords.size() != factors_.size()) {
    throw InvalidArgumentError("coordinate count mismatch");
  }
  GroupElement out = zero();
  for (size_t i = 0; i < factors_.size(); ++i) {
    out.coords[i] = floor_mod(coords[i], factors_[i]);
  }
  return out;
}

UInt AbelianGroup::index_of(const GroupElement& e) const {
  check(e);
  UInt idx = 0;
  for (size_t i = 0; i < factors_.size(); ++i) {
    idx = idx * UInt(factors_[i]) + UInt(e.coords[i]);
  }
  return idx;
}

GroupElement AbelianGroup::element_at(UInt index) const {
  if (index >= UInt(order_)) throw InvalidArgumentError("element index out of range");
  GroupElement out = zero();
  for (size_t i = factors_.size(); i-- > 0;) {
    out.coords[i] = Int(index % UInt(factors_[i]));
    index /= UInt(factors_[i]);
  }
  return out;
}

}  // namespace limag
