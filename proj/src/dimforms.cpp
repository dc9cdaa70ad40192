#include "specalc/dimforms.hpp"

#include <algorithm>

#include "specalc/errors.hpp"

namespace specalc {

DimReport hereditary_dim(const SpeciesData& s, std::size_t max_paths) {
  s.validate();
  const Quiver q = species_quiver(s);
  const PathBasis pb(q, max_paths);
  const int n = s.n_vertices;
  DimReport r;
  r.delta_pairs.assign(static_cast<size_t>(n), std::vector<Count>(static_cast<size_t>(n), 0));
  for (int idx = 0; idx < pb.size(); ++idx) {
    const Path& g = pb.path(idx);
    Count de = path_dim_E(s, g);
    r.per_path.emplace_back(g, de);
    r.delta_pairs[static_cast<size_t>(g.source)][static_cast<size_t>(g.target)] += de;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      r.delta_total += s.m[static_cast<size_t>(i)] * s.m[static_cast<size_t>(j)] *
                       r.delta_pairs[static_cast<size_t>(i)][static_cast<size_t>(j)];
  r.bound_total = r.delta_total;
  r.exact = true;
  r.exactness_reason = "hereditary";
  return r;
}

DimReport bounded_dim(const SpeciesData& s, std::size_t max_paths) {
  DimReport r = hereditary_dim(s, max_paths);
  const int n = s.n_vertices;
  const int longest = PathBasis(species_quiver(s), max_paths).longest_len();
  if (longest >= 2 && !s.ext_higher.count(2))
    fail(ErrKind::MissingExtData,
         "paths of length 2 exist but no degree-2 Ext matrix was supplied");

  Count corrected = 0;
  for (const auto& [deg, mat] : s.ext_higher) {
    Count corr = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Count c = mat[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (c == 0) continue;
        r.delta_pairs[static_cast<size_t>(i)][static_cast<size_t>(j)] -= c;
        corr += s.m[static_cast<size_t>(i)] * s.m[static_cast<size_t>(j)] * c;
      }
    }
    r.ext_corrections[deg] = corr;
    corrected += corr;
  }
  r.bound_total -= corrected;
  r.delta_total = r.bound_total;
  if (corrected == 0) {
    r.exact = true;
    r.exactness_reason = "hereditary";
  } else if (longest <= 2) {
    r.exact = true;
    r.exactness_reason = "path-length <= 2";
  } else {
    r.exact = false;
    r.exactness_reason = "estimate only";
  }
  return r;
}

FaithfulBound faithful_module_bound(const SpeciesData& s, const std::vector<Count>& vdims) {
  s.validate();
  internal_check(static_cast<int>(vdims.size()) == s.n_vertices,
                 "vdims needs one entry per vertex");
  FaithfulBound b;
  Count sum = 0;
  for (Count v : vdims) sum += v;
  b.total = sum * sum;
  const size_t n = vdims.size();
  b.pairs.assign(n, std::vector<Count>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) b.pairs[i][j] = vdims[i] * vdims[j];
  return b;
}

SpeciesData extract_species(const AlgebraPresentation& p) {
  const int n = p.quiver().n_vertices;
  ExtTable t = bongartz_ext_pairwise(p);
  SpeciesData s;
  s.n_vertices = n;
  s.d.assign(static_cast<size_t>(n), 1);
  s.m.assign(static_cast<size_t>(n), 1);
  s.ext1.assign(static_cast<size_t>(n), std::vector<Count>(static_cast<size_t>(n), 0));
  if (t.max_degree >= 1) s.ext1 = t.entries[1];
  // degree 2 always travels along (bounded_dim needs it even when zero)
  s.ext_higher[2].assign(static_cast<size_t>(n), std::vector<Count>(static_cast<size_t>(n), 0));
  for (int k = 2; k <= t.max_degree; ++k) {
    if (k > 2 && t.totals[static_cast<size_t>(k)] == 0) continue;
    s.ext_higher[k] = t.entries[static_cast<size_t>(k)];
  }
  s.validate();
  return s;
}

AlgebraPresentation saturate(const AlgebraPresentation& p) {
  SpeciesData s = extract_species(p);
  const int n = s.n_vertices;
  Quiver q;
  q.n_vertices = n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (Count k = 0; k < s.ext1[static_cast<size_t>(i)][static_cast<size_t>(j)]; ++k) {
        Edge e;
        e.id = static_cast<int>(q.edges.size());
        e.from = i;
        e.to = j;
        e.label = "s" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k);
        q.edges.push_back(e);
      }
    }
  }
  AlgebraPresentation out(q, {});
  internal_check(is_hereditary(out), "saturation must be hereditary");
  internal_check(extract_species(out).ext1 == s.ext1, "saturation must keep the Ext^1 table");
  internal_check(out.dim_algebra() == hereditary_dim(s).delta_total,
                 "saturation dimension must match the species count");
  return out;
}

}  // namespace specalc
