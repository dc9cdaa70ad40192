#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "specalc/quiver.hpp"
#include "specalc/rowspace.hpp"

namespace specalc {

// Indexed basis of all paths of an acyclic quiver, with lookup by edge
// sequence and by (source, target[, length]) signature. Index order is the
// enumerate_paths order: length first, then generation order; in particular
// the length-0 path at vertex v has index v.
class PathBasis {
public:
  explicit PathBasis(Quiver q, std::size_t max_paths = kDefaultMaxPaths);

  const Quiver& quiver() const { return q_; }
  int size() const { return static_cast<int>(paths_.size()); }
  const Path& path(int i) const { return paths_[i]; }
  int longest_len() const { return longest_; }

  // -1 when the edge sequence names no path (only possible for misuse; every
  // composable sequence of an acyclic quiver is enumerated).
  int index_of(int source, const std::vector<int>& edge_seq) const;

  // Index of path u concatenated after v; -1 when u.source != v.target.
  int concat(int u, int v) const;

  const std::vector<int>& paths_with(int s, int t) const;
  const std::vector<int>& paths_with(int s, int t, int len) const;

  // Position of a path inside its (source, target) list, resp. its
  // (source, target, length) list.
  int pos_in_pair(int path_idx) const { return pos_pair_[path_idx]; }
  int pos_in_pair_len(int path_idx) const { return pos_pair_len_[path_idx]; }

private:
  Quiver q_;
  std::vector<Path> paths_;
  std::map<std::vector<int>, int> seq_index_;  // length >= 1 only
  std::map<std::pair<int, int>, std::vector<int>> pair_lists_;
  std::map<std::tuple<int, int, int>, std::vector<int>> pair_len_lists_;
  std::vector<int> pos_pair_, pos_pair_len_;
  int longest_ = 0;
};

// Element of the path algebra: sparse rational combination of basis paths.
struct AlgElement {
  const PathBasis* basis = nullptr;
  std::map<int, Rational> coeffs;  // path index -> coefficient, no zeros stored

  bool is_zero() const { return coeffs.empty(); }

  // (source, target) common to all support paths, or nullopt when mixed.
  std::optional<std::pair<int, int>> signature() const;

  // Support lengths are all equal?
  bool length_homogeneous() const;
};

AlgElement elem_unit(const PathBasis& pb, int path_idx, Rational c = 1);
AlgElement elem_add(const AlgElement& a, const AlgElement& b);
AlgElement elem_scale(const Rational& c, const AlgElement& a);
AlgElement multiply(const AlgElement& a, const AlgElement& b);

// Sentinel length for a block whose generators mix path lengths within one
// (source, target) signature; such blocks live in the span of all paths of
// that signature.
inline constexpr int kMixedLen = -1;

struct BlockKey {
  int source = 0;
  int target = 0;
  int len = 0;
  auto operator<=>(const BlockKey&) const = default;
};

// Subspace of the path algebra graded by (source, target, length). Pure
// blocks (len >= 0) sit in the span of same-signature paths; a kMixedLen
// block replaces all pure blocks of its (source, target) pair. After every
// public operation mixed blocks that turned out length-graded are split back
// into pure ones, so equal subspaces compare equal blockwise.
class GradedSubspace {
public:
  explicit GradedSubspace(const PathBasis& pb) : basis_(&pb) {}

  static GradedSubspace zero(const PathBasis& pb) { return GradedSubspace(pb); }
  static GradedSubspace full(const PathBasis& pb);

  const PathBasis& basis() const { return *basis_; }
  const std::map<BlockKey, RowSpace>& blocks() const { return blocks_; }

  Count dim() const;
  bool is_zero() const { return dim() == 0; }
  Count dim_pair(int s, int t) const;
  std::vector<std::vector<Count>> pair_dims() const;

  // Returns true when the subspace grew.
  bool insert(const AlgElement& v);

  bool contains_elem(const AlgElement& v) const;
  bool contains(const GradedSubspace& other) const;
  bool operator==(const GradedSubspace& o) const;

  std::vector<AlgElement> basis_elements() const;

  // Basis rows of the (s, t) pair merged over lengths, as a RowSpace in the
  // span of paths_with(s, t).
  RowSpace pair_space(int s, int t) const;

  void normalize();

private:
  void ensure_mixed(int s, int t);
  std::vector<Rational> elem_row(const AlgElement& v, const std::vector<int>& cols) const;

  const PathBasis* basis_;
  std::map<BlockKey, RowSpace> blocks_;
};

// Span of all paths of length >= n.
GradedSubspace radical_power(const PathBasis& pb, int n);

// Smallest two-sided ideal containing gens; each generator must be
// (source, target)-homogeneous. Computed by saturating under single-edge
// left and right multiplication until the dimension stops growing.
GradedSubspace two_sided_ideal(const PathBasis& pb, const std::vector<AlgElement>& gens);

// Span of all products u*v with u in x, v in y.
GradedSubspace ideal_product(const GradedSubspace& x, const GradedSubspace& y);

GradedSubspace space_sum(const GradedSubspace& x, const GradedSubspace& y);
GradedSubspace space_intersect(const GradedSubspace& x, const GradedSubspace& y);
Count quotient_dim(const GradedSubspace& sub, const GradedSubspace& total);
std::vector<std::vector<Count>> quotient_pair_dims(const GradedSubspace& sub,
                                                   const GradedSubspace& total);

// A = kQ/I for an acyclic quiver Q and an admissible ideal I given by
// relation generators (all support paths of length >= 2).
class AlgebraPresentation {
public:
  AlgebraPresentation(const Quiver& q, const std::vector<std::string>& relation_strings,
                      std::size_t max_paths = kDefaultMaxPaths);
  AlgebraPresentation(std::shared_ptr<const PathBasis> basis, std::vector<AlgElement> relations);

  const Quiver& quiver() const { return basis_->quiver(); }
  const PathBasis& basis() const { return *basis_; }
  std::shared_ptr<const PathBasis> basis_ptr() const { return basis_; }
  const std::vector<AlgElement>& relations() const { return relations_; }
  const std::vector<std::string>& relation_strings() const { return relation_strings_; }
  const GradedSubspace& ideal() const { return ideal_; }

  Count dim_path_algebra() const { return basis_->size(); }
  Count dim_ideal() const { return ideal_.dim(); }
  Count dim_algebra() const { return dim_path_algebra() - dim_ideal(); }

  // Per-pair dimensions of A itself: path counts minus ideal block dims.
  std::vector<std::vector<Count>> algebra_pair_dims() const;

private:
  void init();

  std::shared_ptr<const PathBasis> basis_;
  std::vector<AlgElement> relations_;
  std::vector<std::string> relation_strings_;
  GradedSubspace ideal_;
};

}  // namespace specalc
