#include "specalc/matrix.hpp"

#include "specalc/errors.hpp"

namespace specalc {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix rref(const RatMatrix& m) {
  RatMatrix w = m;
  int pivot_row = 0;
  std::vector<int> pivot_cols;
  for (int col = 0; col < w.cols && pivot_row < w.rows; ++col) {
    // First nonzero row at or below pivot_row; fixed order keeps output
    // deterministic for a given input row order.
    int sel = -1;
    for (int r = pivot_row; r < w.rows; ++r) {
      if (!rat_is_zero(w.at(r, col))) { sel = r; break; }
    }
    if (sel < 0) continue;
    if (sel != pivot_row) {
      for (int c = col; c < w.cols; ++c) std::swap(w.at(sel, c), w.at(pivot_row, c));
    }
    Rational inv = 1 / w.at(pivot_row, col);
    for (int c = col; c < w.cols; ++c) w.at(pivot_row, c) *= inv;
    for (int r = 0; r < w.rows; ++r) {
      if (r == pivot_row || rat_is_zero(w.at(r, col))) continue;
      Rational f = w.at(r, col);
      for (int c = col; c < w.cols; ++c) w.at(r, c) -= f * w.at(pivot_row, c);
    }
    pivot_cols.push_back(col);
    ++pivot_row;
  }
  RatMatrix out(pivot_row, w.cols);
  for (int r = 0; r < pivot_row; ++r)
    for (int c = 0; c < w.cols; ++c) out.at(r, c) = w.at(r, c);
  return out;
}

int rank(const RatMatrix& m) { return rref(m).rows; }

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  internal_check(a.cols == b.rows, "mat_mul shape mismatch");
  RatMatrix out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int k = 0; k < a.cols; ++k) {
      const Rational& aik = a.at(i, k);
      if (rat_is_zero(aik)) continue;
      for (int j = 0; j < b.cols; ++j) {
        const Rational& bkj = b.at(k, j);
        if (!rat_is_zero(bkj)) out.at(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

RatMatrix mat_stack(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows == 0) { RatMatrix out = b; out.cols = a.cols == 0 ? b.cols : a.cols; return out; }
  if (b.rows == 0) return a;
  internal_check(a.cols == b.cols, "mat_stack column mismatch");
  RatMatrix out(a.rows + b.rows, a.cols);
  for (int r = 0; r < a.rows; ++r)
    for (int c = 0; c < a.cols; ++c) out.at(r, c) = a.at(r, c);
  for (int r = 0; r < b.rows; ++r)
    for (int c = 0; c < b.cols; ++c) out.at(a.rows + r, c) = b.at(r, c);
  return out;
}

RatMatrix kernel_basis(const RatMatrix& m) {
  RatMatrix r = rref(m);
  std::vector<int> pivot_col(r.rows, -1);
  std::vector<bool> is_pivot(m.cols, false);
  for (int i = 0; i < r.rows; ++i) {
    for (int c = 0; c < r.cols; ++c) {
      if (!rat_is_zero(r.at(i, c))) { pivot_col[i] = c; is_pivot[c] = true; break; }
    }
  }
  RatMatrix ker(0, m.cols);
  std::vector<std::vector<Rational>> rows;
  for (int f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(m.cols);
    x[f] = 1;
    for (int i = 0; i < r.rows; ++i) x[pivot_col[i]] = -r.at(i, f);
    rows.push_back(std::move(x));
  }
  RatMatrix out(static_cast<int>(rows.size()), m.cols);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int c = 0; c < m.cols; ++c) out.at(static_cast<int>(i), c) = rows[i][c];
  return rref(out);
}

std::vector<Rational> mat_apply(const RatMatrix& m, const std::vector<Rational>& v) {
  internal_check(static_cast<int>(v.size()) == m.cols, "mat_apply shape mismatch");
  std::vector<Rational> out(m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (!rat_is_zero(m.at(i, j))) out[i] += m.at(i, j) * v[j];
  return out;
}

}  // namespace specalc
