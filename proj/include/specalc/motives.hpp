#pragma once

#include <string>
#include <vector>

#include "specalc/dimforms.hpp"

namespace specalc {

// One simple abelian part: genus g, endomorphism skew field of Q-dimension d,
// and the two extension dimensions measured over that skew field.
struct AbelianPart {
  Count g = 1;
  Count d = 1;
  Count ext1_Q0_A = 0;  // dim_D Ext^1(Q(0), A)
  Count ext1_A_Q1 = 0;  // dim_D Ext^1(A, Q(1))
};

// Input data of a 1-motive [L -> G]: which of the lattice and torus parts
// are present, their ranks, the abelian parts of G, and the two extension
// dimensions between Q(0) and Q(1) (these are plain Q-dimensions).
struct OneMotiveInput {
  bool has_lattice = false;
  bool has_torus = false;
  Count lattice_rank = 0;
  Count torus_rank = 0;
  std::vector<AbelianPart> abelian_parts;
  Count ext1_Q0_Q1 = 0;
  Count ext2_Q0_Q1 = 0;

  void validate() const;  // nonnegative counts, g >= 1, d >= 1, d | 2g
};

struct PeriodDimReport {
  Count delta_alg = 0;   // 1 iff the lattice part is nonzero
  Count delta_2 = 0;     // sum of 4g^2/d over abelian parts
  Count delta_Ta = 0;    // 1 iff the torus part is nonzero
  Count delta_3 = 0;     // sum of 2g * dim_D Ext^1(A, Q(1))
  Count delta_inc2 = 0;  // sum of 2g * dim_D Ext^1(Q(0), A)
  Count delta_inc3 = 0;  // ext1(Q0,Q1) - ext2(Q0,Q1) + sum d * ext1(Q0,A) * ext1(A,Q1)
  Count total = 0;
  std::vector<std::string> warnings;
};

// Dimension of the algebra attached to a species, computed through the path
// machinery and cross-checked against an independent direct summation.
DimReport generic_period_dim(const SpeciesData& s, std::size_t max_paths = kDefaultMaxPaths);

// The six-part decomposition of the period space dimension of a 1-motive.
// delta_inc3 outside [0, lattice_rank * torus_rank] signals inconsistent Ext
// data and produces a warning, not an error.
PeriodDimReport one_motive_dims(const OneMotiveInput& inp);

// The same data as a species: vertices Q(0) (if lattice present), each
// abelian part, Q(1) (if torus present); skew-field Ext dims are rescaled to
// Q-dimensions. generic_period_dim of the result equals
// one_motive_dims(inp).total, which is asserted.
SpeciesData one_motive_to_species(const OneMotiveInput& inp);

}  // namespace specalc
