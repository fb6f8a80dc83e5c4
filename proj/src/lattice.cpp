#include "lattice.hpp"

namespace limag {

void LatticeCode::validate() const {
  if (!generator.is_square() || generator.rows() == 0) {
    throw InvalidArgumentError("generator must be square and nonempty");
  }
  if (params.n != generator.rows()) {
    throw InvalidArgumentError("params.n disagrees with generator size");
  }
  params.validate();
  if (abs_det(generator) == 0) {
    throw InvalidArgumentError("generator rows must be linearly independent");
  }
}

Int volume(const LatticeCode& lattice) {
  lattice.validate();
  return abs_det(lattice.generator);
}

IntMatrix canonical_basis(const IntMatrix& generator) {
  return hermite_normal_form(generator).d;
}

bool hnf_contains(const IntMatrix& hnf, const std::vector<Int>& v) {
  int n = hnf.rows();
  if (int(v.size()) != n) throw InvalidArgumentError("vector length mismatch");
  std::vector<Int> rem = v;
  for (int i = 0; i < n; ++i) {
    Int pivot = hnf.at(i, i);
    if (rem[size_t(i)] % pivot != 0) return false;
    Int q = rem[size_t(i)] / pivot;
    if (q != 0) {
      for (int j = i; j < n; ++j) {
        rem[size_t(j)] = checked_sub(rem[size_t(j)], checked_mul(q, hnf.at(i, j)));
      }
    }
  }
  for (Int r : rem) {
    if (r != 0) return false;
  }
  return true;
}

bool lattice_contains(const LatticeCode& lattice, const std::vector<Int>& v) {
  return hnf_contains(canonical_basis(lattice.generator), v);
}

LatticeCode lattice_from_sequence(const BhSequence& seq) {
  seq.validate();
  int n = seq.length();
  int k = seq.group.rank();

  // Rows 0..n-1 hold the element coordinates, rows n..n+k-1 the diagonal of
  // invariant factors; the left kernel of this block projects onto exactly
  // the vectors with zero weighted sum.
  IntMatrix a(n + k, k);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) a.at(i, j) = seq.elements[size_t(i)].coords[size_t(j)];
  }
  for (int j = 0; j < k; ++j) a.at(n + j, j) = seq.group.factors()[size_t(j)];

  HermiteResult hr = hermite_form(a);
  int kernel_rows = (n + k) - hr.rank;
  if (kernel_rows != n) throw Error("unexpected kernel rank");

  IntMatrix basis(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) basis.at(i, j) = hr.u.at(hr.rank + i, j);
  }
  return LatticeCode{canonical_basis(basis), {n, seq.t, seq.ell}};
}

BhSequence sequence_from_lattice(const LatticeCode& lattice) {
  lattice.validate();
  int n = lattice.n();
  NormalFormResult snf = smith_normal_form(lattice.generator);

  std::vector<Int> factors;
  std::vector<int> kept_cols;
  for (int j = 0; j < n; ++j) {
    if (snf.d.at(j, j) > 1) {
      factors.push_back(snf.d.at(j, j));
      kept_cols.push_back(j);
    }
  }

  BhSequence seq;
  seq.group = AbelianGroup(std::move(factors));
  seq.t = lattice.params.t;
  seq.ell = lattice.params.ell;
  for (int i = 0; i < n; ++i) {
    // Image of the i-th unit vector: row i of V, reduced per factor.
    std::vector<Int> coords;
    coords.reserve(kept_cols.size());
    for (int j : kept_cols) coords.push_back(snf.v.at(i, j));
    seq.elements.push_back(seq.group.reduce(coords));
  }
  return seq;
}

PackingResult verify_packing(const LatticeCode& lattice, const CodeParams& p) {
  lattice.validate();
  if (p.n != lattice.n()) throw InvalidArgumentError("params.n disagrees with lattice");
  p.validate(true);

  BhSequence derived = sequence_from_lattice(lattice);
  derived.t = p.t;
  derived.ell = p.ell;
  if (p.t == 0) return {true, std::nullopt};  // singleton sphere
  BhVerifyResult res = verify_bh(derived);
  return {res.ok, res.witness};
}

bool verify_perfect(const LatticeCode& lattice, const CodeParams& p) {
  if (!verify_packing(lattice, p).ok) return false;
  return volume(lattice) == sphere_size(p);
}

}  // namespace limag
