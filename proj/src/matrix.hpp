#pragma once

#include <initializer_list>
#include <vector>

#include "int128.hpp"

namespace limag {

// Dense matrix of exact 128-bit integers, row major. Every arithmetic step
// goes through the checked helpers, so overflow surfaces as OverflowError
// instead of wrapping.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(int n);
  static IntMatrix diagonal(const std::vector<Int>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int r, int c) { return e_[size_t(r) * cols_ + c]; }
  const Int& at(int r, int c) const { return e_[size_t(r) * cols_ + c]; }

  bool operator==(const IntMatrix& o) const = default;

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  void negate_row(int r);
  void negate_col(int c);
  // row a -= q * row b (checked), likewise for columns
  void add_row_multiple(int a, int b, Int q);
  void add_col_multiple(int a, int b, Int q);

  IntMatrix multiplied_by(const IntMatrix& rhs) const;
  IntMatrix transposed() const;

  bool is_square() const { return rows_ == cols_; }

 private:
  int rows_, cols_;
  std::vector<Int> e_;
};

// |det G| by fraction-free (Bareiss) elimination; exact, returns 0 for
// singular input. Requires a square matrix.
Int abs_det(const IntMatrix& g);

struct NormalFormResult {
  IntMatrix u;  // unimodular row transform
  IntMatrix d;  // the normal form itself
  IntMatrix v;  // unimodular column transform (identity for HNF)
};

// Row-style Hermite normal form with transform, U*G = H. Works for any
// shape; rows beyond `rank` are zero and the matching rows of U span the
// left kernel of G. Pivots are positive and entries above each pivot are
// reduced into [0, pivot).
struct HermiteResult {
  IntMatrix u;
  IntMatrix h;
  int rank;
};
HermiteResult hermite_form(const IntMatrix& g);

// Full-row-rank form: returns U, H and an identity V.
NormalFormResult hermite_normal_form(const IntMatrix& g);

// Smith normal form U*G*V = D for square nonsingular G; D is diagonal with
// d_1 | d_2 | ... | d_n, all positive. Pivot selection is deterministic:
// smallest nonzero magnitude, ties broken by lowest (row, col).
NormalFormResult smith_normal_form(const IntMatrix& g);

}  // namespace limag
