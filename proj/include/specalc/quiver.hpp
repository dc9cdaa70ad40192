#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "specalc/rational.hpp"

namespace specalc {

struct Edge {
  int id = 0;
  int from = 0;
  int to = 0;
  std::string label;
};

// Finite directed multigraph. Edge ids must be dense 0..E-1; labels, when
// present, must be unique (they name edges in relation strings).
struct Quiver {
  int n_vertices = 0;
  std::vector<Edge> edges;

  void validate() const;
};

// Paths compose right to left: edge_seq = (e1, ..., en) means en acts first,
// so source = from(en) and target = to(e1). Consecutive entries satisfy
// from(e_i) = to(e_{i+1}). Empty sequence is the idempotent at source = target.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> edge_seq;

  int length() const { return static_cast<int>(edge_seq.size()); }

  bool operator==(const Path& o) const {
    return source == o.source && target == o.target && edge_seq == o.edge_seq;
  }
};

bool is_acyclic(const Quiver& q);

// Cap on enumerated path counts; the CLI overrides it from SPECALC_MAX_DIM.
inline constexpr std::size_t kDefaultMaxPaths = 5000;

// All paths of length <= max_len, or all paths when max_len < 0 (requires an
// acyclic quiver). Ordered by length, then generation order (stable for a
// fixed quiver). Length-0 paths come first, one per vertex.
std::vector<Path> enumerate_paths(const Quiver& q, int max_len = -1,
                                  std::size_t max_paths = kDefaultMaxPaths);

// u after v (v acts first); requires u.source == v.target.
Path path_concat(const Path& u, const Path& v);

// Human-readable form like "v0" or "b*a" used in reports.
std::string path_str(const Quiver& q, const Path& p);

}  // namespace specalc
