#include "sequences.hpp"

#include <unordered_map>
#include <unordered_set>

namespace limag {

void BhSequence::validate() const {
  if (elements.empty()) throw InvalidArgumentError("sequence must be nonempty");
  params().validate();
  for (const GroupElement& b : elements) group.check(b);
}

GroupElement weighted_sum(const BhSequence& seq, const ErrorVector& e) {
  if (int(e.size()) != seq.length()) {
    throw InvalidArgumentError("error vector length mismatch");
  }
  GroupElement acc = seq.group.zero();
  for (size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    acc = seq.group.add(acc, seq.group.scalar_mul(Int(e[j]), seq.elements[j]));
  }
  return acc;
}

namespace {

ErrorVector sphere_vector_at(const CodeParams& p, std::uint64_t ordinal) {
  SphereEnumerator en(p);
  ErrorVector e;
  for (std::uint64_t i = 0; i <= ordinal; ++i) {
    if (!en.next(e)) throw Error("sphere ordinal out of range");
  }
  return e;
}

}  // namespace

BhVerifyResult verify_bh(const BhSequence& seq) {
  seq.validate();
  CodeParams p = seq.params();
  Int size = sphere_size(p);

  std::unordered_map<UInt, std::uint64_t, UIntHash> seen;
  if (size <= Int(1) << 24) seen.reserve(size_t(size));

  SphereEnumerator en(p);
  ErrorVector e;
  std::uint64_t ordinal = 0;
  while (en.next(e)) {
    UInt key = seq.group.index_of(weighted_sum(seq, e));
    auto [it, inserted] = seen.emplace(key, ordinal);
    if (!inserted) {
      return {false, std::make_pair(e, sphere_vector_at(p, it->second))};
    }
    ++ordinal;
  }
  return {true, std::nullopt};
}

BhSequence construct_perfect_sequence(int n, std::int64_t ell) {
  if (n < 2) throw InvalidArgumentError("construction needs n >= 2");
  if (ell < 1) throw InvalidArgumentError("construction needs ell >= 1");
  Int m = checked_sub(checked_pow(Int(ell) + 1, n), checked_pow(Int(ell), n));

  Int ell_mod = floor_mod(Int(ell), m);
  auto inv = mod_inverse(ell_mod, m);
  if (!inv) {
    // Cannot happen: gcd(ell, (ell+1)^n - ell^n) = gcd(ell, 1) = 1.
    throw Error("ell unexpectedly not invertible");
  }
  Int x = mul_mod(floor_mod(Int(ell) + 1, m), *inv, m);

  BhSequence seq;
  seq.group = AbelianGroup::cyclic(m);
  seq.t = n - 1;
  seq.ell = ell;
  Int power = floor_mod(1, m);
  for (int i = 0; i < n; ++i) {
    seq.elements.push_back(seq.group.reduce({power}));
    if (i + 1 < n) power = mul_mod(power, x, m);
  }
  return seq;
}

LPropertyReport check_l_properties(int n, std::int64_t ell) {
  if (n < 2) throw InvalidArgumentError("property check needs n >= 2");
  if (ell < 1) throw InvalidArgumentError("property check needs ell >= 1");
  LPropertyReport rep;
  rep.m = checked_sub(checked_pow(Int(ell) + 1, n), checked_pow(Int(ell), n));

  Int ell_mod = floor_mod(Int(ell), rep.m);
  rep.p1 = gcd(ell_mod, rep.m) == 1;
  if (!rep.p1) return rep;

  Int inv = *mod_inverse(ell_mod, rep.m);
  rep.x = mul_mod(floor_mod(Int(ell) + 1, rep.m), inv, rep.m);

  // Order is exactly n iff x^n = 1 and x^d != 1 for every proper divisor d.
  rep.p2 = pow_mod(rep.x, n, rep.m) == 1;
  for (int d = 1; rep.p2 && d < n; ++d) {
    if (n % d == 0 && pow_mod(rep.x, d, rep.m) == 1) rep.p2 = false;
  }

  Int sum = 0;
  Int power = floor_mod(1, rep.m);
  for (int i = 0; i < n; ++i) {
    sum = add_mod(sum, power, rep.m);
    power = mul_mod(power, rep.x, rep.m);
  }
  rep.p3 = sum == 0;
  return rep;
}

BhSequence construct_trivial_full_cube(int n, std::int64_t ell) {
  if (n < 1) throw InvalidArgumentError("construction needs n >= 1");
  if (ell < 1) throw InvalidArgumentError("construction needs ell >= 1");
  checked_pow(Int(ell) + 1, n);  // reject parameter overflow up front

  BhSequence seq;
  seq.group = AbelianGroup(std::vector<Int>(size_t(n), Int(ell) + 1));
  seq.t = n;
  seq.ell = ell;
  for (int i = 0; i < n; ++i) {
    GroupElement b = seq.group.zero();
    b.coords[size_t(i)] = 1;
    seq.elements.push_back(std::move(b));
  }
  return seq;
}

namespace {

// Weighted sums of every sphere vector over the chosen prefix, with the
// bookkeeping needed to extend by one element and undo it.
class PrefixSums {
 public:
  explicit PrefixSums(const AbelianGroup& g, int t) : group_(g), t_(t) {
    entries_.push_back({g.zero(), 0});
    occupied_.insert(g.index_of(g.zero()));
  }

  // Attempts to append element b with coefficients 1..ell. Returns false
  // (leaving the state untouched) if any new sum collides.
  bool push(const GroupElement& b, std::int64_t ell) {
    size_t base = entries_.size();
    std::vector<Entry> fresh;
    std::unordered_set<UInt, UIntHash> fresh_keys;
    GroupElement cb = group_.zero();
    for (std::int64_t c = 1; c <= ell; ++c) {
      cb = group_.add(cb, b);
      for (size_t i = 0; i < base; ++i) {
        if (entries_[i].weight >= t_) continue;
        GroupElement s = group_.add(entries_[i].sum, cb);
        UInt key = group_.index_of(s);
        if (occupied_.count(key) || !fresh_keys.insert(key).second) {
          return false;
        }
        fresh.push_back({std::move(s), entries_[i].weight + 1});
      }
    }
    added_.push_back(fresh.size());
    for (auto& e : fresh) {
      occupied_.insert(group_.index_of(e.sum));
      entries_.push_back(std::move(e));
    }
    return true;
  }

  void pop() {
    size_t count = added_.back();
    added_.pop_back();
    for (size_t i = 0; i < count; ++i) {
      occupied_.erase(group_.index_of(entries_.back().sum));
      entries_.pop_back();
    }
  }

 private:
  struct Entry {
    GroupElement sum;
    int weight;
  };
  const AbelianGroup& group_;
  int t_;
  std::vector<Entry> entries_;
  std::unordered_set<UInt, UIntHash> occupied_;
  std::vector<size_t> added_;
};

struct SearchState {
  const AbelianGroup& group;
  int n;
  int t;
  std::int64_t ell;
  std::uint64_t node_cap;
  std::uint64_t nodes = 0;
  std::vector<GroupElement> chosen;
  PrefixSums sums;

  SearchState(const AbelianGroup& g, int n_, int t_, std::int64_t ell_,
              std::uint64_t cap)
      : group(g), n(n_), t(t_), ell(ell_), node_cap(cap), sums(g, t_) {}

  bool dfs(UInt min_index) {
    if (int(chosen.size()) == n) return true;
    for (UInt idx = min_index; idx < UInt(group.order()); ++idx) {
      if (++nodes > node_cap) {
        throw CapExceededError("search node cap exceeded");
      }
      GroupElement cand = group.element_at(idx);
      if (!sums.push(cand, ell)) continue;
      chosen.push_back(cand);
      if (dfs(idx)) return true;
      chosen.pop_back();
      sums.pop();
    }
    return false;
  }
};

}  // namespace

std::optional<BhSequence> search_bh(const AbelianGroup& group, int n, int t,
                                    std::int64_t ell, std::uint64_t node_cap) {
  CodeParams p{n, t, ell};
  p.validate();
  if (sphere_size(p) > group.order()) return std::nullopt;

  // Candidates are nondecreasing, so any solution is found in its sorted
  // form; the zero element is skipped (index 1 onward).
  SearchState state(group, n, t, ell, node_cap);
  if (!state.dfs(UInt(1))) return std::nullopt;
  return BhSequence{group, std::move(state.chosen), t, ell};
}

}  // namespace limag
