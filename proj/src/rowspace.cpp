#include "specalc/rowspace.hpp"

#include "specalc/errors.hpp"

namespace specalc {

RowSpace RowSpace::from_rows(int ambient, const RatMatrix& rows) {
  internal_check(rows.rows == 0 || rows.cols == ambient, "row length != ambient dimension");
  RowSpace s(ambient);
  RatMatrix padded = rows;
  padded.cols = ambient;  // harmless when rows.rows == 0
  s.basis_ = rref(padded);
  return s;
}

std::vector<Rational> RowSpace::reduce(std::vector<Rational> v) const {
  internal_check(static_cast<int>(v.size()) == ambient_, "reduce: ambient mismatch");
  for (int i = 0; i < basis_.rows; ++i) {
    int p = -1;
    for (int c = 0; c < ambient_; ++c) {
      if (!rat_is_zero(basis_.at(i, c))) { p = c; break; }
    }
    if (p < 0 || rat_is_zero(v[p])) continue;
    Rational f = v[p];  // pivot entries are 1
    for (int c = p; c < ambient_; ++c) v[c] -= f * basis_.at(i, c);
  }
  return v;
}

bool RowSpace::contains(const std::vector<Rational>& v) const {
  std::vector<Rational> r = reduce(v);
  for (const Rational& x : r)
    if (!rat_is_zero(x)) return false;
  return true;
}

bool RowSpace::contains(const RowSpace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (int i = 0; i < other.basis_.rows; ++i) {
    std::vector<Rational> row(ambient_);
    for (int c = 0; c < ambient_; ++c) row[c] = other.basis_.at(i, c);
    if (!contains(row)) return false;
  }
  return true;
}

std::vector<Rational> RowSpace::coordinates(const std::vector<Rational>& v) const {
  internal_check(static_cast<int>(v.size()) == ambient_, "coordinates: ambient mismatch");
  std::vector<Rational> coords(basis_.rows);
  std::vector<Rational> w = v;
  for (int i = 0; i < basis_.rows; ++i) {
    int p = -1;
    for (int c = 0; c < ambient_; ++c) {
      if (!rat_is_zero(basis_.at(i, c))) { p = c; break; }
    }
    if (p < 0) continue;
    coords[i] = w[p];
    if (rat_is_zero(coords[i])) continue;
    for (int c = p; c < ambient_; ++c) w[c] -= coords[i] * basis_.at(i, c);
  }
  for (const Rational& x : w)
    if (!rat_is_zero(x)) fail(ErrKind::NotASubspace, "vector outside the span");
  return coords;
}

RowSpace space_sum(const RowSpace& a, const RowSpace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    fail(ErrKind::AmbientMismatch, "space_sum over different ambient dimensions");
  return RowSpace::from_rows(a.ambient_dim(), mat_stack(a.basis(), b.basis()));
}

RowSpace space_intersect(const RowSpace& a, const RowSpace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    fail(ErrKind::AmbientMismatch, "space_intersect over different ambient dimensions");
  int n = a.ambient_dim();
  int p = a.dim(), q = b.dim();
  if (p == 0 || q == 0) return RowSpace(n);
  // Zassenhaus: reduce [A A; B 0]; rows with zero left half carry the
  // intersection in their right half.
  RatMatrix block(p + q, 2 * n);
  for (int i = 0; i < p; ++i)
    for (int c = 0; c < n; ++c) {
      block.at(i, c) = a.basis().at(i, c);
      block.at(i, n + c) = a.basis().at(i, c);
    }
  for (int i = 0; i < q; ++i)
    for (int c = 0; c < n; ++c) block.at(p + i, c) = b.basis().at(i, c);
  RatMatrix r = rref(block);
  std::vector<std::vector<Rational>> rows;
  for (int i = 0; i < r.rows; ++i) {
    bool left_zero = true;
    for (int c = 0; c < n && left_zero; ++c)
      if (!rat_is_zero(r.at(i, c))) left_zero = false;
    if (!left_zero) continue;
    std::vector<Rational> v(n);
    for (int c = 0; c < n; ++c) v[c] = r.at(i, n + c);
    rows.push_back(std::move(v));
  }
  RatMatrix m(static_cast<int>(rows.size()), n);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int c = 0; c < n; ++c) m.at(static_cast<int>(i), c) = rows[i][c];
  return RowSpace::from_rows(n, m);
}

Count quotient_dim(const RowSpace& sub, const RowSpace& total) {
  if (sub.ambient_dim() != total.ambient_dim())
    fail(ErrKind::AmbientMismatch, "quotient_dim over different ambient dimensions");
  if (!total.contains(sub)) fail(ErrKind::NotASubspace, "quotient_dim: sub not inside total");
  return total.dim() - sub.dim();
}

}  // namespace specalc
