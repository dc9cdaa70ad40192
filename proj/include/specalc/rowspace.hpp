#pragma once

#include <vector>

#include "specalc/matrix.hpp"

namespace specalc {

// Subspace of Q^ambient stored by its canonical RREF basis. Two RowSpaces
// are equal as subspaces iff their bases compare equal, which makes subspace
// identities directly decidable in tests.
class RowSpace {
public:
  RowSpace() = default;
  explicit RowSpace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

  static RowSpace from_rows(int ambient, const RatMatrix& rows);
  static RowSpace full(int ambient) { return from_rows(ambient, RatMatrix::identity(ambient)); }

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows; }
  const RatMatrix& basis() const { return basis_; }
  bool is_zero() const { return basis_.rows == 0; }

  bool contains(const std::vector<Rational>& v) const;
  bool contains(const RowSpace& other) const;

  // Normal form of v modulo the space: subtract the unique combination of
  // basis rows matching v on the pivot columns. Result has zeros there.
  std::vector<Rational> reduce(std::vector<Rational> v) const;

  // Coordinates of v in the basis rows; errors with NotASubspace when v is
  // outside the space.
  std::vector<Rational> coordinates(const std::vector<Rational>& v) const;

  bool operator==(const RowSpace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

private:
  int ambient_ = 0;
  RatMatrix basis_;  // RREF, no zero rows, pivots strictly increasing
};

RowSpace space_sum(const RowSpace& a, const RowSpace& b);
RowSpace space_intersect(const RowSpace& a, const RowSpace& b);

// dim total - dim sub; errors with NotASubspace unless sub is contained in total.
Count quotient_dim(const RowSpace& sub, const RowSpace& total);

}  // namespace specalc
