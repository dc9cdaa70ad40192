#include "specalc/quiver.hpp"

#include <set>

#include "specalc/errors.hpp"

namespace specalc {

void Quiver::validate() const {
  if (n_vertices < 0) fail(ErrKind::InconsistentInput, "negative vertex count");
  std::set<std::string> labels;
  for (size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.id != static_cast<int>(i))
      fail(ErrKind::InconsistentInput, "edge ids must be dense 0..E-1");
    if (e.from < 0 || e.from >= n_vertices || e.to < 0 || e.to >= n_vertices)
      fail(ErrKind::InconsistentInput, "edge endpoint out of range");
    if (!e.label.empty() && !labels.insert(e.label).second)
      fail(ErrKind::InconsistentInput, "duplicate edge label '" + e.label + "'");
  }
}

bool is_acyclic(const Quiver& q) {
  // Kahn peeling; the test suite cross-checks with a DFS oracle.
  std::vector<int> indeg(q.n_vertices, 0);
  std::vector<std::vector<int>> out(q.n_vertices);
  for (const Edge& e : q.edges) {
    ++indeg[e.to];
    out[e.from].push_back(e.to);
  }
  std::vector<int> stack;
  for (int v = 0; v < q.n_vertices; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (int w : out[v])
      if (--indeg[w] == 0) stack.push_back(w);
  }
  return seen == q.n_vertices;
}

std::vector<Path> enumerate_paths(const Quiver& q, int max_len, std::size_t max_paths) {
  if (max_len < 0 && !is_acyclic(q))
    fail(ErrKind::CyclicQuiver, "unbounded path enumeration needs an acyclic quiver");

  std::vector<std::vector<int>> edges_from(q.n_vertices);
  for (const Edge& e : q.edges) edges_from[e.from].push_back(e.id);

  std::vector<Path> all;
  auto push = [&](Path p) {
    if (all.size() >= max_paths)
      fail(ErrKind::LimitExceeded,
           "path count exceeds limit " + std::to_string(max_paths));
    all.push_back(std::move(p));
  };

  for (int v = 0; v < q.n_vertices; ++v) push(Path{v, v, {}});

  size_t layer_begin = 0, layer_end = all.size();
  for (int len = 1; max_len < 0 || len <= max_len; ++len) {
    // Extend each previous-layer path at its target; ordering within a layer
    // follows (previous path index, edge id), which is stable.
    size_t new_begin = all.size();
    for (size_t i = layer_begin; i < layer_end; ++i) {
      int t = all[i].target;
      std::vector<int> seq = all[i].edge_seq;
      for (int eid : edges_from[t]) {
        Path p;
        p.source = all[i].source;
        p.target = q.edges[eid].to;
        p.edge_seq.reserve(seq.size() + 1);
        p.edge_seq.push_back(eid);
        p.edge_seq.insert(p.edge_seq.end(), seq.begin(), seq.end());
        push(std::move(p));
      }
    }
    if (all.size() == new_begin) break;  // no longer paths exist
    layer_begin = new_begin;
    layer_end = all.size();
  }
  return all;
}

Path path_concat(const Path& u, const Path& v) {
  internal_check(u.source == v.target, "path_concat: not composable");
  Path p;
  p.source = v.source;
  p.target = u.target;
  p.edge_seq = u.edge_seq;
  p.edge_seq.insert(p.edge_seq.end(), v.edge_seq.begin(), v.edge_seq.end());
  return p;
}

std::string path_str(const Quiver& q, const Path& p) {
  if (p.edge_seq.empty()) return "v" + std::to_string(p.source);
  std::string s;
  for (size_t i = 0; i < p.edge_seq.size(); ++i) {
    const Edge& e = q.edges[p.edge_seq[i]];
    if (i) s += "*";
    s += e.label.empty() ? ("e" + std::to_string(e.id)) : e.label;
  }
  return s;
}

}  // namespace specalc
