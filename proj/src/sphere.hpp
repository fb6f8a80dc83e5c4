#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "int128.hpp"

namespace limag {

// Error vectors are level shifts: nonnegative, at most `ell` per entry,
// nonzero in at most `t` positions.
using ErrorVector = std::vector<std::int64_t>;

struct CodeParams {
  int n = 0;
  int t = 0;
  std::int64_t ell = 0;

  // t = 0 is legal for the counting operations but code construction
  // requires t >= 1; callers pick the check they need.
  void validate(bool allow_t_zero = false) const;
};

// |S(n,t,ell)| = sum_{i=0..t} C(n,i) * ell^i, exact.
Int sphere_size(const CodeParams& p);

bool is_in_sphere(const ErrorVector& e, const CodeParams& p);

// Restartable lexicographic stream over S(n,t,ell).
class SphereEnumerator {
 public:
  explicit SphereEnumerator(const CodeParams& p);

  // False once the stream is exhausted; `out` holds the next vector
  // otherwise. Vectors appear in strictly increasing lexicographic order,
  // starting from the zero vector.
  bool next(ErrorVector& out);

  void reset();

 private:
  CodeParams params_;
  ErrorVector current_;
  int weight_ = 0;
  bool started_ = false;
  bool done_ = false;
};

// Convenience for small spheres: materializes the whole enumeration.
std::vector<ErrorVector> enumerate_sphere(const CodeParams& p);

void for_each_sphere_vector(const CodeParams& p,
                            const std::function<void(const ErrorVector&)>& fn);

}  // namespace limag
