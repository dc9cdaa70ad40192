#include "specalc/motives.hpp"

#include "specalc/errors.hpp"

namespace specalc {

void OneMotiveInput::validate() const {
  if (lattice_rank < 0 || torus_rank < 0 || ext1_Q0_Q1 < 0 || ext2_Q0_Q1 < 0)
    fail(ErrKind::InconsistentInput, "1-motive counts must be nonnegative");
  if (has_lattice != (lattice_rank > 0))
    fail(ErrKind::InconsistentInput, "lattice flag must match a positive lattice rank");
  if (has_torus != (torus_rank > 0))
    fail(ErrKind::InconsistentInput, "torus flag must match a positive torus rank");
  for (const AbelianPart& a : abelian_parts) {
    if (a.g < 1 || a.d < 1 || a.ext1_Q0_A < 0 || a.ext1_A_Q1 < 0)
      fail(ErrKind::InconsistentInput, "abelian part needs g >= 1, d >= 1 and nonnegative Ext");
    if ((2 * a.g) % a.d != 0)
      fail(ErrKind::InconsistentInput,
           "endomorphism dimension must divide 2g (multiplicity 2g/d is integral)");
  }
}

DimReport generic_period_dim(const SpeciesData& s, std::size_t max_paths) {
  DimReport r = bounded_dim(s, max_paths);

  // same quantity summed directly from the definition, as a consistency net
  Count direct = 0;
  const int n = s.n_vertices;
  for (int i = 0; i < n; ++i)
    direct += s.m[static_cast<size_t>(i)] * s.m[static_cast<size_t>(i)] * s.d[static_cast<size_t>(i)];
  const PathBasis pb(species_quiver(s), max_paths);
  for (int idx = 0; idx < pb.size(); ++idx) {
    const Path& g = pb.path(idx);
    if (g.length() == 0) continue;
    direct += s.m[static_cast<size_t>(g.source)] * s.m[static_cast<size_t>(g.target)] *
              path_dim_E(s, g);
  }
  for (const auto& [deg, mat] : s.ext_higher)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        direct -= s.m[static_cast<size_t>(i)] * s.m[static_cast<size_t>(j)] *
                  mat[static_cast<size_t>(i)][static_cast<size_t>(j)];
  internal_check(direct == r.delta_total, "path count and direct sum must agree");
  return r;
}

PeriodDimReport one_motive_dims(const OneMotiveInput& inp) {
  inp.validate();
  PeriodDimReport r;
  r.delta_alg = inp.has_lattice ? 1 : 0;
  r.delta_Ta = inp.has_torus ? 1 : 0;
  for (const AbelianPart& a : inp.abelian_parts) {
    const Count m = 2 * a.g / a.d;
    r.delta_2 += 2 * a.g * m;
    if (inp.has_torus) r.delta_3 += 2 * a.g * a.ext1_A_Q1;
    if (inp.has_lattice) r.delta_inc2 += 2 * a.g * a.ext1_Q0_A;
  }
  if (inp.has_lattice && inp.has_torus) {
    r.delta_inc3 = inp.ext1_Q0_Q1 - inp.ext2_Q0_Q1;
    for (const AbelianPart& a : inp.abelian_parts)
      r.delta_inc3 += a.d * a.ext1_Q0_A * a.ext1_A_Q1;
    if (r.delta_inc3 < 0)
      r.warnings.push_back("delta_inc3 is negative; the Ext data is inconsistent");
    else if (r.delta_inc3 > inp.lattice_rank * inp.torus_rank)
      r.warnings.push_back("delta_inc3 exceeds lattice_rank * torus_rank; the Ext data is inconsistent");
  }
  r.total = r.delta_alg + r.delta_2 + r.delta_Ta + r.delta_3 + r.delta_inc2 + r.delta_inc3;
  return r;
}

SpeciesData one_motive_to_species(const OneMotiveInput& inp) {
  inp.validate();
  const int parts = static_cast<int>(inp.abelian_parts.size());
  const int n = (inp.has_lattice ? 1 : 0) + parts + (inp.has_torus ? 1 : 0);
  const int q0 = inp.has_lattice ? 0 : -1;
  const int first_part = inp.has_lattice ? 1 : 0;
  const int q1 = inp.has_torus ? n - 1 : -1;

  SpeciesData s;
  s.n_vertices = n;
  s.d.assign(static_cast<size_t>(n), 1);
  s.m.assign(static_cast<size_t>(n), 1);
  s.ext1.assign(static_cast<size_t>(n), std::vector<Count>(static_cast<size_t>(n), 0));
  s.ext_higher[2].assign(static_cast<size_t>(n), std::vector<Count>(static_cast<size_t>(n), 0));
  for (int k = 0; k < parts; ++k) {
    const AbelianPart& a = inp.abelian_parts[static_cast<size_t>(k)];
    const int v = first_part + k;
    s.d[static_cast<size_t>(v)] = a.d;
    s.m[static_cast<size_t>(v)] = 2 * a.g / a.d;
    if (q0 >= 0) s.ext1[static_cast<size_t>(q0)][static_cast<size_t>(v)] = a.d * a.ext1_Q0_A;
    if (q1 >= 0) s.ext1[static_cast<size_t>(v)][static_cast<size_t>(q1)] = a.d * a.ext1_A_Q1;
  }
  if (q0 >= 0 && q1 >= 0) {
    s.ext1[static_cast<size_t>(q0)][static_cast<size_t>(q1)] = inp.ext1_Q0_Q1;
    s.ext_higher[2][static_cast<size_t>(q0)][static_cast<size_t>(q1)] = inp.ext2_Q0_Q1;
  }
  s.validate();
  internal_check(generic_period_dim(s).delta_total == one_motive_dims(inp).total,
                 "species translation must preserve the period dimension");
  return s;
}

}  // namespace specalc
