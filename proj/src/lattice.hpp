#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "sequences.hpp"

namespace limag {

// Full-rank integer lattice in Z^n given by a generator matrix whose rows
// are the basis, together with the claimed correction capability.
struct LatticeCode {
  IntMatrix generator;
  CodeParams params;

  int n() const { return generator.rows(); }
  void validate() const;
};

Int volume(const LatticeCode& lattice);

// Canonical basis: the Hermite normal form of the generator. Two lattices
// are equal iff their canonical bases are equal matrices.
IntMatrix canonical_basis(const IntMatrix& generator);

// Membership test against an HNF basis by back-substitution with exact
// division checks.
bool hnf_contains(const IntMatrix& hnf, const std::vector<Int>& v);
bool lattice_contains(const LatticeCode& lattice, const std::vector<Int>& v);

// Kernel lattice of the syndrome map v -> sum v_i * b_i: the set of integer
// vectors with zero weighted sum. Volume equals the size of the syndrome
// map's image, hence <= |G| with equality iff the elements generate G.
LatticeCode lattice_from_sequence(const BhSequence& seq);

// Quotient Z^n / L via Smith normal form; returns the images of the unit
// vectors as a sequence over the quotient group (invariant factors of 1 are
// dropped). The claimed (t, ell) of the lattice carry over.
BhSequence sequence_from_lattice(const LatticeCode& lattice);

struct PackingResult {
  bool ok = false;
  // Two sphere vectors whose difference is a lattice point; ordering
  // matches verify_bh (collision point first, earlier vector second).
  std::optional<std::pair<ErrorVector, ErrorVector>> witness;
};

// L packs Z^n with S(n,t,ell) iff the projection into Z^n / L is injective
// on the sphere.
PackingResult verify_packing(const LatticeCode& lattice, const CodeParams& p);

// Packing plus volume = sphere size, i.e. tiling.
bool verify_perfect(const LatticeCode& lattice, const CodeParams& p);

}  // namespace limag
