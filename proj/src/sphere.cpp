#include "sphere.hpp"

namespace limag {

void CodeParams::validate(bool allow_t_zero) const {
  if (n < 1) throw InvalidArgumentError("length n must be >= 1");
  int t_floor = allow_t_zero ? 0 : 1;
  if (t < t_floor || t > n) {
    throw InvalidArgumentError("error count t out of range");
  }
  if (ell < 1) throw InvalidArgumentError("magnitude bound ell must be >= 1");
}

Int sphere_size(const CodeParams& p) {
  p.validate(true);
  Int total = 0;
  Int binom = 1;     // C(n, i)
  Int ell_pow = 1;   // ell^i
  for (int i = 0; i <= p.t; ++i) {
    total = checked_add(total, checked_mul(binom, ell_pow));
    if (i < p.t) {
      binom = checked_mul(binom, p.n - i) / (i + 1);
      ell_pow = checked_mul(ell_pow, Int(p.ell));
    }
  }
  return total;
}

bool is_in_sphere(const ErrorVector& e, const CodeParams& p) {
  p.validate(true);
  if (int(e.size()) != p.n) throw InvalidArgumentError("vector length mismatch");
  int weight = 0;
  for (std::int64_t v : e) {
    if (v < 0 || v > p.ell) return false;
    if (v != 0) ++weight;
  }
  return weight <= p.t;
}

SphereEnumerator::SphereEnumerator(const CodeParams& p) : params_(p) {
  p.validate(true);
  sphere_size(p);  // rejects parameter overflow up front
  current_.assign(size_t(p.n), 0);
}

void SphereEnumerator::reset() {
  current_.assign(size_t(params_.n), 0);
  weight_ = 0;
  started_ = false;
  done_ = false;
}

bool SphereEnumerator::next(ErrorVector& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    out = current_;
    return true;
  }
  // Lexicographic successor: bump the rightmost position that can grow and
  // clear everything after it. The weight budget is judged against the
  // prefix only, since the suffix is about to be cleared.
  int suffix_weight = 0;
  for (int i = params_.n - 1; i >= 0; --i) {
    std::int64_t v = current_[size_t(i)];
    int prefix_weight = weight_ - suffix_weight - (v != 0 ? 1 : 0);
    if (v < params_.ell && (v > 0 || prefix_weight + 1 <= params_.t)) {
      current_[size_t(i)] = v + 1;
      for (int j = i + 1; j < params_.n; ++j) current_[size_t(j)] = 0;
      weight_ = prefix_weight + 1;
      out = current_;
      return true;
    }
    if (v != 0) ++suffix_weight;
  }
  done_ = true;
  return false;
}

std::vector<ErrorVector> enumerate_sphere(const CodeParams& p) {
  std::vector<ErrorVector> all;
  SphereEnumerator en(p);
  ErrorVector e;
  while (en.next(e)) all.push_back(e);
  return all;
}

void for_each_sphere_vector(const CodeParams& p,
                            const std::function<void(const ErrorVector&)>& fn) {
  SphereEnumerator en(p);
  ErrorVector e;
  while (en.next(e)) fn(e);
}

}  // namespace limag
