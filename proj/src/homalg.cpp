#include "specalc/homalg.hpp"

#include <algorithm>
#include <map>

#include "specalc/errors.hpp"
#include "specalc/matrix.hpp"
#include "specalc/rowspace.hpp"

namespace specalc {

namespace {

// Normal-form scaffolding for A = kQ/I: per (source, target) pair the ideal's
// merged row space plus the surviving (non-pivot) path indices, which form a
// basis of e_t A e_s.
class QuotientBasis {
public:
  explicit QuotientBasis(const AlgebraPresentation& p) : pb_(&p.basis()) {
    const int n = p.quiver().n_vertices;
    for (int s = 0; s < n; ++s) {
      for (int t = 0; t < n; ++t) {
        const auto& cols = pb_->paths_with(s, t);
        if (cols.empty()) continue;
        PairNF nf;
        nf.ideal = p.ideal().pair_space(s, t);
        nf.surv_slot.assign(cols.size(), -1);
        std::vector<bool> is_pivot(cols.size(), false);
        const RatMatrix& b = nf.ideal.basis();
        for (int r = 0; r < b.rows; ++r) {
          int c = 0;
          while (c < b.cols && rat_is_zero(b.at(r, c))) ++c;
          is_pivot[static_cast<size_t>(c)] = true;
        }
        for (size_t k = 0; k < cols.size(); ++k) {
          if (!is_pivot[k]) {
            nf.surv_slot[k] = static_cast<int>(nf.surviving.size());
            nf.surviving.push_back(cols[k]);
          }
        }
        pairs_[{s, t}] = std::move(nf);
      }
    }
  }

  const std::vector<int>& surviving(int s, int t) const {
    auto it = pairs_.find({s, t});
    return it == pairs_.end() ? empty_ : it->second.surviving;
  }

  // Coordinates of the class of basis path idx over surviving(source, target).
  std::vector<Rational> path_class(int idx) const {
    const Path& p = pb_->path(idx);
    const auto it = pairs_.find({p.source, p.target});
    internal_check(it != pairs_.end(), "path pair missing from quotient basis");
    const PairNF& nf = it->second;
    const auto& cols = pb_->paths_with(p.source, p.target);
    std::vector<Rational> v(cols.size());
    v[static_cast<size_t>(pb_->pos_in_pair(idx))] = 1;
    v = nf.ideal.reduce(std::move(v));
    std::vector<Rational> out(nf.surviving.size());
    for (size_t k = 0; k < cols.size(); ++k) {
      if (nf.surv_slot[k] >= 0) out[static_cast<size_t>(nf.surv_slot[k])] = v[k];
    }
    return out;
  }

private:
  struct PairNF {
    RowSpace ideal;
    std::vector<int> surviving;  // global path indices, ascending
    std::vector<int> surv_slot;  // per pair position: slot in surviving or -1
  };

  const PathBasis* pb_;
  std::map<std::pair<int, int>, PairNF> pairs_;
  std::vector<int> empty_;
};

// Working representation without the presentation pointer.
struct Repn {
  std::vector<int> dims;
  std::vector<RatMatrix> maps;
};

Count total_dim(const Repn& m) {
  Count t = 0;
  for (int d : m.dims) t += d;
  return t;
}

Repn projective_repn(const QuotientBasis& qb, const PathBasis& pb, int x,
                     const std::vector<int>& edge_path) {
  const Quiver& q = pb.quiver();
  Repn r;
  r.dims.resize(static_cast<size_t>(q.n_vertices));
  for (int v = 0; v < q.n_vertices; ++v)
    r.dims[static_cast<size_t>(v)] = static_cast<int>(qb.surviving(x, v).size());
  r.maps.resize(q.edges.size());
  for (const Edge& e : q.edges) {
    RatMatrix m(r.dims[static_cast<size_t>(e.to)], r.dims[static_cast<size_t>(e.from)]);
    const auto& cols = qb.surviving(x, e.from);
    for (size_t c = 0; c < cols.size(); ++c) {
      int prod = pb.concat(edge_path[static_cast<size_t>(e.id)], cols[c]);
      internal_check(prod >= 0, "edge times basis path must compose");
      std::vector<Rational> cls = qb.path_class(prod);
      for (int row = 0; row < m.rows; ++row) m.at(row, static_cast<int>(c)) = cls[static_cast<size_t>(row)];
    }
    r.maps[static_cast<size_t>(e.id)] = std::move(m);
  }
  return r;
}

// Action of a basis path on a vector sitting at the path's source vertex.
std::vector<Rational> act_path(const Repn& m, const Path& p, std::vector<Rational> u) {
  for (auto it = p.edge_seq.rbegin(); it != p.edge_seq.rend(); ++it)
    u = mat_apply(m.maps[static_cast<size_t>(*it)], u);
  return u;
}

// Radical of a representation at each vertex: the span of all incoming edge
// images.
std::vector<RowSpace> radical_spaces(const Repn& m, const Quiver& q) {
  std::vector<RowSpace> rad;
  rad.reserve(static_cast<size_t>(q.n_vertices));
  for (int v = 0; v < q.n_vertices; ++v) {
    int rows = 0;
    for (const Edge& e : q.edges)
      if (e.to == v) rows += m.maps[static_cast<size_t>(e.id)].cols;
    RatMatrix gen(rows, m.dims[static_cast<size_t>(v)]);
    int r = 0;
    for (const Edge& e : q.edges) {
      if (e.to != v) continue;
      const RatMatrix& em = m.maps[static_cast<size_t>(e.id)];
      for (int c = 0; c < em.cols; ++c, ++r)
        for (int row = 0; row < em.rows; ++row) gen.at(r, row) = em.at(row, c);
    }
    rad.push_back(RowSpace::from_rows(m.dims[static_cast<size_t>(v)], gen));
  }
  return rad;
}

}  // namespace

ExtTable bongartz_ext_pairwise(const AlgebraPresentation& p, int max_degree) {
  const PathBasis& pb = p.basis();
  const int n = p.quiver().n_vertices;
  if (max_degree < 0) max_degree = pb.longest_len();
  ExtTable t;
  t.max_degree = max_degree;
  t.n = n;
  t.entries.assign(static_cast<size_t>(max_degree) + 1,
                   std::vector<std::vector<Count>>(static_cast<size_t>(n),
                                                   std::vector<Count>(static_cast<size_t>(n), 0)));
  t.totals.assign(static_cast<size_t>(max_degree) + 1, 0);
  for (int i = 0; i < n; ++i) t.entries[0][static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  t.totals[0] = n;
  if (max_degree == 0) return t;

  const GradedSubspace rad = radical_power(pb, 1);
  const GradedSubspace& ideal = p.ideal();

  // powers[m] = I^m with I^0 the whole path algebra
  std::vector<GradedSubspace> powers;
  powers.push_back(GradedSubspace::full(pb));
  for (int m = 1; m <= max_degree / 2 + 1; ++m)
    powers.push_back(ideal_product(powers.back(), ideal));

  auto set_degree = [&](int k, const GradedSubspace& den, const GradedSubspace& num) {
    auto dims = quotient_pair_dims(den, num);
    Count tot = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        t.entries[static_cast<size_t>(k)][static_cast<size_t>(i)][static_cast<size_t>(j)] =
            dims[static_cast<size_t>(i)][static_cast<size_t>(j)];
        tot += dims[static_cast<size_t>(i)][static_cast<size_t>(j)];
      }
    }
    t.totals[static_cast<size_t>(k)] = tot;
  };

  for (int k = 1; k <= max_degree; ++k) {
    if (k % 2 == 1) {
      const int m = (k - 1) / 2;
      GradedSubspace rIm = ideal_product(rad, powers[static_cast<size_t>(m)]);
      GradedSubspace Imr = ideal_product(powers[static_cast<size_t>(m)], rad);
      GradedSubspace num = space_intersect(rIm, Imr);
      GradedSubspace den = space_sum(powers[static_cast<size_t>(m) + 1], ideal_product(rIm, rad));
      set_degree(k, den, num);
    } else {
      const int m = k / 2;
      GradedSubspace rIr =
          ideal_product(ideal_product(rad, powers[static_cast<size_t>(m) - 1]), rad);
      GradedSubspace num = space_intersect(powers[static_cast<size_t>(m)], rIr);
      GradedSubspace den = space_sum(ideal_product(powers[static_cast<size_t>(m)], rad),
                                     ideal_product(rad, powers[static_cast<size_t>(m)]));
      set_degree(k, den, num);
    }
  }
  return t;
}

std::vector<Count> bongartz_ext_dims(const AlgebraPresentation& p, int max_degree) {
  return bongartz_ext_pairwise(p, max_degree).totals;
}

void QuiverRepn::validate() const {
  internal_check(pres != nullptr, "representation needs its presentation");
  const Quiver& q = pres->quiver();
  internal_check(static_cast<int>(dims.size()) == q.n_vertices,
                 "representation dims must match vertex count");
  internal_check(maps.size() == q.edges.size(), "representation needs one matrix per edge");
  for (const Edge& e : q.edges) {
    const RatMatrix& m = maps[static_cast<size_t>(e.id)];
    internal_check(m.rows == dims[static_cast<size_t>(e.to)] &&
                       m.cols == dims[static_cast<size_t>(e.from)],
                   "edge matrix shape mismatch");
  }
  for (const AlgElement& rel : pres->relations()) {
    auto sig = rel.signature();
    internal_check(sig.has_value(), "relation must be signature homogeneous");
    auto [s, t] = *sig;
    RatMatrix acc(dims[static_cast<size_t>(t)], dims[static_cast<size_t>(s)]);
    for (const auto& [idx, c] : rel.coeffs) {
      RatMatrix term = RatMatrix::identity(dims[static_cast<size_t>(s)]);
      const Path& path = pres->basis().path(idx);
      for (auto it = path.edge_seq.rbegin(); it != path.edge_seq.rend(); ++it)
        term = mat_mul(maps[static_cast<size_t>(*it)], term);
      for (size_t cell = 0; cell < acc.entries.size(); ++cell)
        acc.entries[cell] += c * term.entries[cell];
    }
    for (const Rational& x : acc.entries)
      internal_check(rat_is_zero(x), "relation does not act as zero");
  }
}

std::vector<std::vector<Count>> resolution_ext_oracle(const AlgebraPresentation& p, int i,
                                                      int max_degree) {
  const PathBasis& pb = p.basis();
  const Quiver& q = p.quiver();
  const int n = q.n_vertices;
  internal_check(i >= 0 && i < n, "simple index out of range");
  if (max_degree < 0) max_degree = pb.longest_len();

  QuotientBasis qb(p);
  std::vector<int> edge_path(q.edges.size());
  for (const Edge& e : q.edges)
    edge_path[static_cast<size_t>(e.id)] = pb.index_of(e.from, {e.id});
  std::vector<Repn> proj;
  proj.reserve(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) proj.push_back(projective_repn(qb, pb, x, edge_path));

  // current syzygy, starting from the simple at vertex i
  Repn cur;
  cur.dims.assign(static_cast<size_t>(n), 0);
  cur.dims[static_cast<size_t>(i)] = 1;
  cur.maps.resize(q.edges.size());
  for (const Edge& e : q.edges)
    cur.maps[static_cast<size_t>(e.id)] =
        RatMatrix(cur.dims[static_cast<size_t>(e.to)], cur.dims[static_cast<size_t>(e.from)]);

  std::vector<std::vector<Count>> out;
  for (int k = 0; k <= max_degree; ++k) {
    std::vector<RowSpace> rad = radical_spaces(cur, q);
    std::vector<Count> tops(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v)
      tops[static_cast<size_t>(v)] = cur.dims[static_cast<size_t>(v)] - rad[static_cast<size_t>(v)].dim();
    out.push_back(tops);
    if (k == max_degree || total_dim(cur) == 0) break;

    // projective cover generators: per vertex, standard basis vectors at the
    // non-pivot coordinates of the radical, which complete it to a basis
    struct Gen {
      int x;
      std::vector<Rational> u;
    };
    std::vector<Gen> gens;
    for (int v = 0; v < n; ++v) {
      std::vector<bool> is_pivot(static_cast<size_t>(cur.dims[static_cast<size_t>(v)]), false);
      const RatMatrix& b = rad[static_cast<size_t>(v)].basis();
      for (int r = 0; r < b.rows; ++r) {
        int c = 0;
        while (c < b.cols && rat_is_zero(b.at(r, c))) ++c;
        is_pivot[static_cast<size_t>(c)] = true;
      }
      for (int c = 0; c < cur.dims[static_cast<size_t>(v)]; ++c) {
        if (is_pivot[static_cast<size_t>(c)]) continue;
        std::vector<Rational> u(static_cast<size_t>(cur.dims[static_cast<size_t>(v)]));
        u[static_cast<size_t>(c)] = 1;
        gens.push_back({v, std::move(u)});
      }
    }

    // cover P = direct sum of P_{g.x}; basis at vertex w is, per generator,
    // the surviving paths g.x -> w
    std::vector<int> pdim(static_cast<size_t>(n), 0);
    for (const Gen& g : gens)
      for (int w = 0; w < n; ++w)
        pdim[static_cast<size_t>(w)] += proj[static_cast<size_t>(g.x)].dims[static_cast<size_t>(w)];

    std::vector<RatMatrix> phi;  // per vertex: dims_M(w) x dims_P(w)
    phi.reserve(static_cast<size_t>(n));
    for (int w = 0; w < n; ++w) {
      RatMatrix m(cur.dims[static_cast<size_t>(w)], pdim[static_cast<size_t>(w)]);
      int col = 0;
      for (const Gen& g : gens) {
        for (int idx : qb.surviving(g.x, w)) {
          std::vector<Rational> img = act_path(cur, pb.path(idx), g.u);
          for (int row = 0; row < m.rows; ++row) m.at(row, col) = img[static_cast<size_t>(row)];
          ++col;
        }
      }
      internal_check(rank(m) == cur.dims[static_cast<size_t>(w)],
                     "projective cover must be surjective");
      phi.push_back(std::move(m));
    }

    std::vector<RatMatrix> pmaps(q.edges.size());  // edge maps of P, block diagonal
    for (const Edge& e : q.edges) {
      RatMatrix m(pdim[static_cast<size_t>(e.to)], pdim[static_cast<size_t>(e.from)]);
      int roff = 0, coff = 0;
      for (const Gen& g : gens) {
        const RatMatrix& blk = proj[static_cast<size_t>(g.x)].maps[static_cast<size_t>(e.id)];
        for (int r = 0; r < blk.rows; ++r)
          for (int c = 0; c < blk.cols; ++c) m.at(roff + r, coff + c) = blk.at(r, c);
        roff += blk.rows;
        coff += blk.cols;
      }
      pmaps[static_cast<size_t>(e.id)] = std::move(m);
    }

    // syzygy: vertexwise kernels of phi with the edge maps of P restricted
    std::vector<RowSpace> ker;
    ker.reserve(static_cast<size_t>(n));
    for (int w = 0; w < n; ++w)
      ker.push_back(RowSpace::from_rows(pdim[static_cast<size_t>(w)],
                                        kernel_basis(phi[static_cast<size_t>(w)])));

    Repn next;
    next.dims.resize(static_cast<size_t>(n));
    for (int w = 0; w < n; ++w) next.dims[static_cast<size_t>(w)] = ker[static_cast<size_t>(w)].dim();
    next.maps.resize(q.edges.size());
    for (const Edge& e : q.edges) {
      RatMatrix m(next.dims[static_cast<size_t>(e.to)], next.dims[static_cast<size_t>(e.from)]);
      const RatMatrix& kb = ker[static_cast<size_t>(e.from)].basis();
      for (int c = 0; c < kb.rows; ++c) {
        std::vector<Rational> vec(static_cast<size_t>(kb.cols));
        for (int col = 0; col < kb.cols; ++col) vec[static_cast<size_t>(col)] = kb.at(c, col);
        std::vector<Rational> img = mat_apply(pmaps[static_cast<size_t>(e.id)], vec);
        std::vector<Rational> coords = ker[static_cast<size_t>(e.to)].coordinates(img);
        for (int row = 0; row < m.rows; ++row) m.at(row, c) = coords[static_cast<size_t>(row)];
      }
      next.maps[static_cast<size_t>(e.id)] = std::move(m);
    }
    cur = std::move(next);
  }

  while (static_cast<int>(out.size()) <= max_degree)
    out.push_back(std::vector<Count>(static_cast<size_t>(n), 0));
  return out;
}

bool is_hereditary(const AlgebraPresentation& p) {
  const bool h = p.ideal().is_zero();
  auto totals = bongartz_ext_dims(p, 2);
  internal_check(h == (totals[2] == 0), "hereditary test disagrees with degree-2 dims");
  return h;
}

std::vector<std::vector<Count>> relation_space_dims(const AlgebraPresentation& p) {
  const PathBasis& pb = p.basis();
  const GradedSubspace& ideal = p.ideal();
  GradedSubspace rad = radical_power(pb, 1);
  GradedSubspace den = space_sum(ideal_product(ideal, rad), ideal_product(rad, ideal));
  auto dims = quotient_pair_dims(den, ideal);
  if (radical_power(pb, 3).is_zero())
    internal_check(dims == ideal.pair_dims(), "with rad^3 = 0 the ideal has no products left");
  return dims;
}

GlobalDimInfo global_dim_upper(const AlgebraPresentation& p) {
  GlobalDimInfo g;
  g.bound = p.basis().longest_len();
  for (int i = 0; i < p.quiver().n_vertices; ++i) {
    auto table = resolution_ext_oracle(p, i, g.bound);
    for (int k = 0; k < static_cast<int>(table.size()); ++k)
      for (Count c : table[static_cast<size_t>(k)])
        if (c > 0) g.exact = std::max(g.exact, k);
  }
  return g;
}

}  // namespace specalc
