#pragma once

#include "specalc/pathalg.hpp"

namespace specalc {

// entries[k][i][j] = dim_Q Ext^k(S_i, S_j) for the basic algebra of the
// presentation; totals[k] sums the degree-k table. Degree 0 is the diagonal
// of ones (simples over Q have trivial endomorphism field here).
struct ExtTable {
  int max_degree = 0;
  int n = 0;
  std::vector<std::vector<std::vector<Count>>> entries;
  std::vector<Count> totals;
};

// Closed-formula route. Degree 2n is dim (I^n meet r I^{n-1} r)/(I^n r + r I^n),
// degree 2n+1 is dim (r I^n meet I^n r)/(I^{n+1} + r I^n r); the n = 0 odd case
// collapses to rad/(I + rad^2). Per-pair dims come from the (source, target)
// grading of the quotients. max_degree < 0 means the longest path length.
ExtTable bongartz_ext_pairwise(const AlgebraPresentation& p, int max_degree = -1);

// Totals only; index k of the result is the degree-k total, k = 0..max_degree.
std::vector<Count> bongartz_ext_dims(const AlgebraPresentation& p, int max_degree = -1);

// Finite-dimensional module over the presented algebra in representation
// form: a vector space per vertex and a matrix per edge, with every relation
// acting as zero.
struct QuiverRepn {
  const AlgebraPresentation* pres = nullptr;
  std::vector<int> dims;
  std::vector<RatMatrix> maps;  // per edge id, shape dims[to] x dims[from]

  void validate() const;
};

// Independent route: minimal projective resolution of the simple S_i,
// iterating (top, projective cover, syzygy) with exact linear algebra.
// result[k][j] = dim Ext^k(S_i, S_j) = multiplicity of P_j in the k-th term.
std::vector<std::vector<Count>> resolution_ext_oracle(const AlgebraPresentation& p, int i,
                                                      int max_degree = -1);

// True iff the relation ideal is zero; cross-checked internally against the
// degree-2 total of the closed formulas.
bool is_hereditary(const AlgebraPresentation& p);

// Per-(source, target) dims of I/(I rad + rad I), the minimal generator
// counts of the relation ideal. When rad^3 = 0 these equal the full per-pair
// dims of I, which is asserted.
std::vector<std::vector<Count>> relation_space_dims(const AlgebraPresentation& p);

struct GlobalDimInfo {
  int bound = 0;  // least n with rad^{n+1} = 0, i.e. the longest path length
  int exact = 0;  // global dimension found by the resolution oracle
};

GlobalDimInfo global_dim_upper(const AlgebraPresentation& p);

}  // namespace specalc
