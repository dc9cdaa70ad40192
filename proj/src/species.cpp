#include "specalc/species.hpp"

#include "specalc/errors.hpp"

namespace specalc {

void SpeciesData::validate() const {
  size_t n = static_cast<size_t>(n_vertices);
  if (d.size() != n || m.size() != n || ext1.size() != n)
    fail(ErrKind::InconsistentInput, "species arrays must all have n_vertices entries");
  for (Count x : d)
    if (x <= 0) fail(ErrKind::InconsistentInput, "species d entries must be positive");
  for (Count x : m)
    if (x <= 0) fail(ErrKind::InconsistentInput, "species m entries must be positive");
  auto check_matrix = [n](const std::vector<std::vector<Count>>& mat, const char* what) {
    if (mat.size() != n) fail(ErrKind::InconsistentInput, std::string(what) + " must be n x n");
    for (const auto& row : mat) {
      if (row.size() != n) fail(ErrKind::InconsistentInput, std::string(what) + " must be n x n");
      for (Count x : row)
        if (x < 0) fail(ErrKind::InconsistentInput, std::string(what) + " entries must be >= 0");
    }
  };
  check_matrix(ext1, "ext1");
  for (const auto& [k, mat] : ext_higher) {
    if (k < 2) fail(ErrKind::InconsistentInput, "ext_higher degrees start at 2");
    check_matrix(mat, "ext_higher");
  }
}

Count SpeciesData::ext_higher_at(int degree, int i, int j) const {
  auto it = ext_higher.find(degree);
  if (it == ext_higher.end()) return 0;
  return it->second[i][j];
}

Quiver species_quiver(const SpeciesData& s) {
  s.validate();
  Quiver q;
  q.n_vertices = s.n_vertices;
  for (int i = 0; i < s.n_vertices; ++i) {
    for (int j = 0; j < s.n_vertices; ++j) {
      if (s.ext1[i][j] > 0) {
        Edge e;
        e.id = static_cast<int>(q.edges.size());
        e.from = i;
        e.to = j;
        e.label = "q" + std::to_string(i) + "_" + std::to_string(j);
        q.edges.push_back(std::move(e));
      }
    }
  }
  return q;
}

Count path_dim_E(const SpeciesData& s, const Path& gamma) {
  if (gamma.edge_seq.empty()) return s.d[gamma.source];
  Quiver q = species_quiver(s);
  Count num = 1;
  for (int eid : gamma.edge_seq) {
    const Edge& e = q.edges[eid];
    num *= s.ext1[e.from][e.to];
  }
  // Interior vertices, i.e. all stops except the endpoints. edge_seq runs
  // target-to-source, so the interior stops are from(e) for every edge but
  // the last.
  for (size_t i = 0; i + 1 < gamma.edge_seq.size(); ++i) {
    Count dv = s.d[q.edges[gamma.edge_seq[i]].from];
    if (num % dv != 0)
      fail(ErrKind::NonIntegralDim,
           "bimodule dimension along path is not divisible by interior d");
    num /= dv;
  }
  return num;
}

}  // namespace specalc
