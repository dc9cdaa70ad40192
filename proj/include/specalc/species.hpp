#pragma once

#include <map>
#include <vector>

#include "specalc/quiver.hpp"

namespace specalc {

// Numeric species with multiplicities: per-vertex division-algebra dimension
// d_i and multiplicity m_i over the base field, plus the matrix of first
// extension dimensions. ext1[i][j] = dim_Q Ext^1(S_i, S_j); the induced
// quiver has an edge i -> j exactly when ext1[i][j] > 0. Optional matrices
// for higher Ext dimensions are keyed by degree (>= 2).
struct SpeciesData {
  int n_vertices = 0;
  std::vector<Count> d;
  std::vector<Count> m;
  std::vector<std::vector<Count>> ext1;
  std::map<int, std::vector<std::vector<Count>>> ext_higher;

  void validate() const;

  Count ext_higher_at(int degree, int i, int j) const;
};

// One edge i -> j per nonzero ext1[i][j]; parallel extensions collapse to a
// single edge carrying the full bimodule dimension.
Quiver species_quiver(const SpeciesData& s);

// Dimension of the bimodule tensor product along gamma (a path in
// species_quiver(s)): d_v for a length-0 path at v, otherwise the product of
// edge dimensions divided by the d of every interior vertex. The division
// must be exact; NonIntegralDim signals inconsistent species data.
Count path_dim_E(const SpeciesData& s, const Path& gamma);

}  // namespace specalc
