#pragma once

#include <map>
#include <string>
#include <utility>

#include "specalc/homalg.hpp"
#include "specalc/species.hpp"

namespace specalc {

// Dimension of the algebra attached to a species, as an exact value or an
// upper bound. delta_pairs is unweighted, so
// delta_total = sum_{ij} m_i m_j delta_pairs[i][j], and the diagonal carries
// the d_i of the length-0 paths. ext_corrections records, per degree, the
// weighted total subtracted from the hereditary count.
struct DimReport {
  Count delta_total = 0;
  std::vector<std::vector<Count>> delta_pairs;
  std::vector<std::pair<Path, Count>> per_path;  // dim E(gamma) per basis path
  Count bound_total = 0;
  std::map<int, Count> ext_corrections;
  bool exact = true;
  std::string exactness_reason;  // "hereditary", "path-length <= 2", "estimate only"
};

// dim kS = sum over all paths (length 0 included) of m_i m_j dim E(gamma).
// Exact for hereditary algebras by construction.
DimReport hereditary_dim(const SpeciesData& s, std::size_t max_paths = kDefaultMaxPaths);

// Hereditary count minus the higher-Ext corrections. Exact when the longest
// path of the species quiver is at most 2 or when every correction vanishes;
// otherwise an upper bound for the true dimension. A degree-2 matrix must be
// supplied (possibly zero) whenever paths of length 2 exist; degrees >= 3
// default to zero when absent.
DimReport bounded_dim(const SpeciesData& s, std::size_t max_paths = kDefaultMaxPaths);

// Bounds from a faithful module with dim e_i V = vdims[i]: the total bound
// (sum vdims)^2 dominates dim A, and pairs[i][j] = vdims[i] * vdims[j]
// dominates the weighted pair dimension m_i m_j delta_A(ij).
struct FaithfulBound {
  Count total = 0;
  std::vector<std::vector<Count>> pairs;
};

FaithfulBound faithful_module_bound(const SpeciesData& s, const std::vector<Count>& vdims);

// Species of a presented algebra: d_i = m_i = 1 (basic over Q), ext1 from
// the pair grading of rad/rad^2, higher degrees from the closed Ext
// formulas. The degree-2 matrix is always present; higher degrees only when
// nonzero.
SpeciesData extract_species(const AlgebraPresentation& p);

// Path algebra of the species of p: same vertices, ext1[i][j] parallel edges
// i -> j, no relations. Asserts the contract: hereditary output, unchanged
// ext1 table, and total dimension equal to hereditary_dim of the extracted
// species.
AlgebraPresentation saturate(const AlgebraPresentation& p);

}  // namespace specalc
