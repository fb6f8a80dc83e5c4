#include "matrix.hpp"

#include <utility>

namespace limag {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) {
    throw InvalidArgumentError("matrix dimensions must be nonnegative");
  }
  e_.assign(size_t(rows) * size_t(cols), 0);
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = int(rows.size());
  cols_ = rows_ > 0 ? int(rows.begin()->size()) : 0;
  e_.reserve(size_t(rows_) * cols_);
  for (const auto& row : rows) {
    if (int(row.size()) != cols_) {
      throw InvalidArgumentError("ragged matrix initializer");
    }
    for (long long v : row) e_.push_back(checked(Int(v)));
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& d) {
  IntMatrix m(int(d.size()), int(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m.at(int(i), int(i)) = checked(d[i]);
  return m;
}

void IntMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

void IntMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
}

void IntMatrix::negate_row(int r) {
  for (int c = 0; c < cols_; ++c) at(r, c) = checked_neg(at(r, c));
}

void IntMatrix::negate_col(int c) {
  for (int r = 0; r < rows_; ++r) at(r, c) = checked_neg(at(r, c));
}

void IntMatrix::add_row_multiple(int a, int b, Int q) {
  if (q == 0) return;
  for (int c = 0; c < cols_; ++c) {
    at(a, c) = checked_sub(at(a, c), checked_mul(q, at(b, c)));
  }
}

void IntMatrix::add_col_multiple(int a, int b, Int q) {
  if (q == 0) return;
  for (int r = 0; r < rows_; ++r) {
    at(r, a) = checked_sub(at(r, a), checked_mul(q, at(r, b)));
  }
}

IntMatrix IntMatrix::multiplied_by(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InvalidArgumentError("dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      Int a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        out.at(i, j) = checked_add(out.at(i, j), checked_mul(a, rhs.at(k, j)));
      }
    }
  }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Int abs_det(const IntMatrix& g) {
  if (!g.is_square()) throw InvalidArgumentError("determinant needs a square matrix");
  int n = g.rows();
  if (n == 0) return 1;
  IntMatrix a = g;
  Int prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i) {
        if (a.at(i, k) != 0) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) return 0;
      a.swap_rows(k, pivot);  // sign flip is irrelevant for |det|
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int num = checked_sub(checked_mul(a.at(i, j), a.at(k, k)),
                              checked_mul(a.at(i, k), a.at(k, j)));
        a.at(i, j) = num / prev;  // exact by Sylvester's identity
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return checked_abs(a.at(n - 1, n - 1));
}

HermiteResult hermite_form(const IntMatrix& g) {
  int m = g.rows(), n = g.cols();
  IntMatrix h = g;
  IntMatrix u = IntMatrix::identity(m);
  int r = 0;
  for (int j = 0; j < n && r < m; ++j) {
    // Euclidean elimination below row r until one nonzero entry remains.
    for (;;) {
      int best = -1;
      for (int i = r; i < m; ++i) {
        if (h.at(i, j) == 0) continue;
        if (best < 0 || checked_abs(h.at(i, j)) < checked_abs(h.at(best, j))) {
          best = i;
        }
      }
      if (best < 0) break;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool clean = true;
      for (int i = r + 1; i < m; ++i) {
        if (h.at(i, j) == 0) continue;
        Int q = h.at(i, j) / h.at(r, j);  // truncated: shrinks magnitude
        h.add_row_multiple(i, r, q);
        u.add_row_multiple(i, r, q);
        if (h.at(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h.at(r, j) == 0) continue;
    if (h.at(r, j) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (int i = 0; i < r; ++i) {
      Int q = floor_div(h.at(i, j), h.at(r, j));
      h.add_row_multiple(i, r, q);
      u.add_row_multiple(i, r, q);
    }
    ++r;
  }
  return {std::move(u), std::move(h), r};
}

NormalFormResult hermite_normal_form(const IntMatrix& g) {
  HermiteResult res = hermite_form(g);
  if (res.rank != g.rows()) {
    throw InvalidArgumentError("matrix does not have full row rank");
  }
  return {std::move(res.u), std::move(res.h), IntMatrix::identity(g.cols())};
}

namespace {

// Smallest nonzero magnitude in the trailing submatrix, ties by lowest
// (row, col); returns false when the submatrix is all zero.
bool find_pivot(const IntMatrix& d, int k, int& pr, int& pc) {
  pr = pc = -1;
  Int best = 0;
  for (int i = k; i < d.rows(); ++i) {
    for (int j = k; j < d.cols(); ++j) {
      Int v = d.at(i, j);
      if (v == 0) continue;
      Int mag = v < 0 ? checked_neg(v) : v;
      if (pr < 0 || mag < best) {
        best = mag;
        pr = i;
        pc = j;
      }
    }
  }
  return pr >= 0;
}

}  // namespace

NormalFormResult smith_normal_form(const IntMatrix& g) {
  if (!g.is_square()) throw InvalidArgumentError("Smith form needs a square matrix");
  int n = g.rows();
  IntMatrix d = g;
  IntMatrix u = IntMatrix::identity(n);
  IntMatrix v = IntMatrix::identity(n);

  for (int k = 0; k < n; ++k) {
    for (;;) {
      int pr, pc;
      if (!find_pivot(d, k, pr, pc)) {
        throw InvalidArgumentError("singular matrix has no Smith form here");
      }
      d.swap_rows(k, pr);
      u.swap_rows(k, pr);
      d.swap_cols(k, pc);
      v.swap_cols(k, pc);

      bool dirty = false;
      for (int i = k + 1; i < n; ++i) {
        if (d.at(i, k) == 0) continue;
        Int q = floor_div(d.at(i, k), d.at(k, k));
        d.add_row_multiple(i, k, q);
        u.add_row_multiple(i, k, q);
        if (d.at(i, k) != 0) dirty = true;
      }
      for (int j = k + 1; j < n; ++j) {
        if (d.at(k, j) == 0) continue;
        Int q = floor_div(d.at(k, j), d.at(k, k));
        d.add_col_multiple(j, k, q);
        v.add_col_multiple(j, k, q);
        if (d.at(k, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Pivot must divide the whole trailing block for the chain to hold.
      bool fixed = true;
      for (int i = k + 1; i < n && fixed; ++i) {
        for (int j = k + 1; j < n && fixed; ++j) {
          if (d.at(i, j) % d.at(k, k) != 0) {
            d.add_row_multiple(k, i, Int(-1));
            u.add_row_multiple(k, i, Int(-1));
            fixed = false;
          }
        }
      }
      if (fixed) break;
    }
    if (d.at(k, k) < 0) {
      d.negate_row(k);
      u.negate_row(k);
    }
  }
  return {std::move(u), std::move(d), std::move(v)};
}

}  // namespace limag
