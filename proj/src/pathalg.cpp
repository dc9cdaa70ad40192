#include "specalc/pathalg.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "specalc/errors.hpp"
#include "specalc/relparse.hpp"

namespace specalc {

PathBasis::PathBasis(Quiver q, std::size_t max_paths) : q_(std::move(q)) {
  q_.validate();
  if (!is_acyclic(q_)) fail(ErrKind::CyclicQuiver, "path algebra of a cyclic quiver is infinite-dimensional");
  paths_ = enumerate_paths(q_, -1, max_paths);
  pos_pair_.resize(paths_.size());
  pos_pair_len_.resize(paths_.size());
  for (int i = 0; i < size(); ++i) {
    const Path& p = paths_[i];
    longest_ = std::max(longest_, p.length());
    if (p.length() > 0) seq_index_[p.edge_seq] = i;
    auto& pl = pair_lists_[{p.source, p.target}];
    pos_pair_[i] = static_cast<int>(pl.size());
    pl.push_back(i);
    auto& pll = pair_len_lists_[{p.source, p.target, p.length()}];
    pos_pair_len_[i] = static_cast<int>(pll.size());
    pll.push_back(i);
  }
}

int PathBasis::index_of(int source, const std::vector<int>& edge_seq) const {
  if (edge_seq.empty()) return source < q_.n_vertices ? source : -1;
  auto it = seq_index_.find(edge_seq);
  return it == seq_index_.end() ? -1 : it->second;
}

int PathBasis::concat(int u, int v) const {
  const Path& pu = paths_[u];
  const Path& pv = paths_[v];
  if (pu.source != pv.target) return -1;
  if (pu.length() == 0) return v;
  if (pv.length() == 0) return u;
  std::vector<int> seq = pu.edge_seq;
  seq.insert(seq.end(), pv.edge_seq.begin(), pv.edge_seq.end());
  int idx = index_of(pv.source, seq);
  internal_check(idx >= 0, "composable concatenation missing from the path enumeration");
  return idx;
}

const std::vector<int>& PathBasis::paths_with(int s, int t) const {
  static const std::vector<int> empty;
  auto it = pair_lists_.find({s, t});
  return it == pair_lists_.end() ? empty : it->second;
}

const std::vector<int>& PathBasis::paths_with(int s, int t, int len) const {
  static const std::vector<int> empty;
  auto it = pair_len_lists_.find({s, t, len});
  return it == pair_len_lists_.end() ? empty : it->second;
}

std::optional<std::pair<int, int>> AlgElement::signature() const {
  std::optional<std::pair<int, int>> sig;
  for (const auto& [idx, c] : coeffs) {
    const Path& p = basis->path(idx);
    std::pair<int, int> s{p.source, p.target};
    if (!sig) sig = s;
    else if (*sig != s) return std::nullopt;
  }
  return sig;
}

bool AlgElement::length_homogeneous() const {
  int len = -1;
  for (const auto& [idx, c] : coeffs) {
    int l = basis->path(idx).length();
    if (len < 0) len = l;
    else if (len != l) return false;
  }
  return true;
}

AlgElement elem_unit(const PathBasis& pb, int path_idx, Rational c) {
  AlgElement v;
  v.basis = &pb;
  if (!rat_is_zero(c)) v.coeffs[path_idx] = c;
  return v;
}

AlgElement elem_add(const AlgElement& a, const AlgElement& b) {
  if (a.basis != b.basis) fail(ErrKind::BasisMismatch, "elem_add over different bases");
  AlgElement out = a;
  for (const auto& [idx, c] : b.coeffs) {
    Rational& slot = out.coeffs[idx];
    slot += c;
    if (rat_is_zero(slot)) out.coeffs.erase(idx);
  }
  return out;
}

AlgElement elem_scale(const Rational& c, const AlgElement& a) {
  AlgElement out;
  out.basis = a.basis;
  if (rat_is_zero(c)) return out;
  for (const auto& [idx, x] : a.coeffs) out.coeffs[idx] = c * x;
  return out;
}

AlgElement multiply(const AlgElement& a, const AlgElement& b) {
  if (a.basis != b.basis) fail(ErrKind::BasisMismatch, "multiply over different bases");
  AlgElement out;
  out.basis = a.basis;
  for (const auto& [i, ci] : a.coeffs) {
    for (const auto& [j, cj] : b.coeffs) {
      int k = a.basis->concat(i, j);
      if (k < 0) continue;
      Rational& slot = out.coeffs[k];
      slot += ci * cj;
      if (rat_is_zero(slot)) out.coeffs.erase(k);
    }
  }
  return out;
}

GradedSubspace GradedSubspace::full(const PathBasis& pb) { return radical_power(pb, 0); }

Count GradedSubspace::dim() const {
  Count d = 0;
  for (const auto& [k, sp] : blocks_) d += sp.dim();
  return d;
}

Count GradedSubspace::dim_pair(int s, int t) const {
  Count d = 0;
  for (const auto& [k, sp] : blocks_)
    if (k.source == s && k.target == t) d += sp.dim();
  return d;
}

std::vector<std::vector<Count>> GradedSubspace::pair_dims() const {
  int n = basis_->quiver().n_vertices;
  std::vector<std::vector<Count>> out(n, std::vector<Count>(n, 0));
  for (const auto& [k, sp] : blocks_) out[k.source][k.target] += sp.dim();
  return out;
}

std::vector<Rational> GradedSubspace::elem_row(const AlgElement& v,
                                               const std::vector<int>& cols) const {
  std::vector<Rational> row(cols.size());
  std::map<int, int> pos;
  for (size_t i = 0; i < cols.size(); ++i) pos[cols[i]] = static_cast<int>(i);
  for (const auto& [idx, c] : v.coeffs) {
    auto it = pos.find(idx);
    internal_check(it != pos.end(), "element support outside the block's path list");
    row[it->second] = c;
  }
  return row;
}

void GradedSubspace::ensure_mixed(int s, int t) {
  BlockKey mixed{s, t, kMixedLen};
  if (blocks_.count(mixed)) return;
  const std::vector<int>& cols = basis_->paths_with(s, t);
  RatMatrix rows(0, static_cast<int>(cols.size()));
  std::map<int, int> pos;
  for (size_t i = 0; i < cols.size(); ++i) pos[cols[i]] = static_cast<int>(i);
  std::vector<BlockKey> to_erase;
  std::vector<std::vector<Rational>> collected;
  for (const auto& [k, sp] : blocks_) {
    if (k.source != s || k.target != t) continue;
    const std::vector<int>& sub_cols = basis_->paths_with(s, t, k.len);
    for (int r = 0; r < sp.basis().rows; ++r) {
      std::vector<Rational> row(cols.size());
      for (int c = 0; c < sp.basis().cols; ++c) row[pos.at(sub_cols[c])] = sp.basis().at(r, c);
      collected.push_back(std::move(row));
    }
    to_erase.push_back(k);
  }
  for (const BlockKey& k : to_erase) blocks_.erase(k);
  RatMatrix m(static_cast<int>(collected.size()), static_cast<int>(cols.size()));
  for (size_t i = 0; i < collected.size(); ++i)
    for (size_t c = 0; c < cols.size(); ++c) m.at(static_cast<int>(i), static_cast<int>(c)) = collected[i][c];
  blocks_[mixed] = RowSpace::from_rows(static_cast<int>(cols.size()), m);
}

bool GradedSubspace::insert(const AlgElement& v) {
  internal_check(v.basis == basis_, "insert from a different basis");
  if (v.is_zero()) return false;
  auto sig = v.signature();
  internal_check(sig.has_value(), "insert of a (source,target)-inhomogeneous element");
  auto [s, t] = *sig;

  bool pure = v.length_homogeneous();
  BlockKey key{s, t, pure ? basis_->path(v.coeffs.begin()->first).length() : kMixedLen};
  if (blocks_.count({s, t, kMixedLen})) key.len = kMixedLen;
  if (key.len == kMixedLen) ensure_mixed(s, t);

  const std::vector<int>& cols = key.len == kMixedLen ? basis_->paths_with(s, t)
                                                      : basis_->paths_with(s, t, key.len);
  std::vector<Rational> row = elem_row(v, cols);
  auto it = blocks_.find(key);
  if (it == blocks_.end()) {
    RatMatrix m(1, static_cast<int>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c) m.at(0, static_cast<int>(c)) = row[c];
    RowSpace sp = RowSpace::from_rows(static_cast<int>(cols.size()), m);
    if (sp.dim() == 0) return false;
    blocks_[key] = std::move(sp);
    return true;
  }
  if (it->second.contains(row)) return false;
  RatMatrix m(1, static_cast<int>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c) m.at(0, static_cast<int>(c)) = row[c];
  it->second = RowSpace::from_rows(static_cast<int>(cols.size()),
                                   mat_stack(it->second.basis(), m));
  return true;
}

bool GradedSubspace::contains_elem(const AlgElement& v) const {
  internal_check(v.basis == basis_, "containment query from a different basis");
  if (v.is_zero()) return true;
  auto sig = v.signature();
  if (!sig) {
    // Split by signature; each component must lie inside.
    std::map<std::pair<int, int>, AlgElement> parts;
    for (const auto& [idx, c] : v.coeffs) {
      const Path& p = basis_->path(idx);
      AlgElement& part = parts[{p.source, p.target}];
      part.basis = basis_;
      part.coeffs[idx] = c;
    }
    for (const auto& [k, part] : parts)
      if (!contains_elem(part)) return false;
    return true;
  }
  auto [s, t] = *sig;
  RowSpace merged = pair_space(s, t);
  return merged.contains(elem_row(v, basis_->paths_with(s, t)));
}

RowSpace GradedSubspace::pair_space(int s, int t) const {
  const std::vector<int>& cols = basis_->paths_with(s, t);
  std::map<int, int> pos;
  for (size_t i = 0; i < cols.size(); ++i) pos[cols[i]] = static_cast<int>(i);
  std::vector<std::vector<Rational>> rows;
  for (const auto& [k, sp] : blocks_) {
    if (k.source != s || k.target != t) continue;
    const std::vector<int>& sub_cols =
        k.len == kMixedLen ? cols : basis_->paths_with(s, t, k.len);
    for (int r = 0; r < sp.basis().rows; ++r) {
      std::vector<Rational> row(cols.size());
      for (int c = 0; c < sp.basis().cols; ++c) row[pos.at(sub_cols[c])] = sp.basis().at(r, c);
      rows.push_back(std::move(row));
    }
  }
  RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t c = 0; c < cols.size(); ++c) m.at(static_cast<int>(i), static_cast<int>(c)) = rows[i][c];
  return RowSpace::from_rows(static_cast<int>(cols.size()), m);
}

bool GradedSubspace::contains(const GradedSubspace& other) const {
  internal_check(other.basis_ == basis_, "containment query from a different basis");
  std::set<std::pair<int, int>> pairs;
  for (const auto& [k, sp] : other.blocks_) pairs.insert({k.source, k.target});
  for (auto [s, t] : pairs) {
    if (!pair_space(s, t).contains(other.pair_space(s, t))) return false;
  }
  return true;
}

bool GradedSubspace::operator==(const GradedSubspace& o) const {
  return basis_ == o.basis_ && blocks_ == o.blocks_;
}

std::vector<AlgElement> GradedSubspace::basis_elements() const {
  std::vector<AlgElement> out;
  for (const auto& [k, sp] : blocks_) {
    const std::vector<int>& cols = k.len == kMixedLen
                                       ? basis_->paths_with(k.source, k.target)
                                       : basis_->paths_with(k.source, k.target, k.len);
    for (int r = 0; r < sp.basis().rows; ++r) {
      AlgElement v;
      v.basis = basis_;
      for (int c = 0; c < sp.basis().cols; ++c)
        if (!rat_is_zero(sp.basis().at(r, c))) v.coeffs[cols[c]] = sp.basis().at(r, c);
      out.push_back(std::move(v));
    }
  }
  return out;
}

void GradedSubspace::normalize() {
  std::vector<BlockKey> mixed_keys;
  for (const auto& [k, sp] : blocks_)
    if (k.len == kMixedLen) mixed_keys.push_back(k);
  for (const BlockKey& k : mixed_keys) {
    const RowSpace& sp = blocks_.at(k);
    const std::vector<int>& cols = basis_->paths_with(k.source, k.target);
    // A mixed block whose canonical basis rows are each supported in a single
    // length splits back into pure blocks (the RREF of a length-graded space
    // has length-pure rows).
    std::map<int, std::vector<std::vector<Rational>>> by_len;
    bool splittable = true;
    for (int r = 0; r < sp.basis().rows && splittable; ++r) {
      int len = -1;
      for (int c = 0; c < sp.basis().cols; ++c) {
        if (rat_is_zero(sp.basis().at(r, c))) continue;
        int l = basis_->path(cols[c]).length();
        if (len < 0) len = l;
        else if (len != l) { splittable = false; break; }
      }
      if (!splittable || len < 0) continue;
      by_len[len].push_back([&] {
        const std::vector<int>& sub_cols = basis_->paths_with(k.source, k.target, len);
        std::map<int, int> pos;
        for (size_t i = 0; i < sub_cols.size(); ++i) pos[sub_cols[i]] = static_cast<int>(i);
        std::vector<Rational> row(sub_cols.size());
        for (int c = 0; c < sp.basis().cols; ++c)
          if (!rat_is_zero(sp.basis().at(r, c))) row[pos.at(cols[c])] = sp.basis().at(r, c);
        return row;
      }());
    }
    if (!splittable) continue;
    blocks_.erase(k);
    for (auto& [len, rows] : by_len) {
      const std::vector<int>& sub_cols = basis_->paths_with(k.source, k.target, len);
      RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(sub_cols.size()));
      for (size_t i = 0; i < rows.size(); ++i)
        for (size_t c = 0; c < sub_cols.size(); ++c)
          m.at(static_cast<int>(i), static_cast<int>(c)) = rows[i][c];
      blocks_[{k.source, k.target, len}] = RowSpace::from_rows(static_cast<int>(sub_cols.size()), m);
    }
  }
}

GradedSubspace radical_power(const PathBasis& pb, int n) {
  GradedSubspace out(pb);
  for (int i = 0; i < pb.size(); ++i) {
    if (pb.path(i).length() >= n) out.insert(elem_unit(pb, i));
  }
  return out;
}

GradedSubspace two_sided_ideal(const PathBasis& pb, const std::vector<AlgElement>& gens) {
  GradedSubspace ideal(pb);
  std::deque<AlgElement> work;
  for (const AlgElement& g : gens) {
    if (g.is_zero()) continue;
    if (!g.signature())
      fail(ErrKind::InconsistentInput, "ideal generator is not (source,target)-homogeneous");
    if (ideal.insert(g)) work.push_back(g);
  }
  const Quiver& q = pb.quiver();
  while (!work.empty()) {
    AlgElement v = std::move(work.front());
    work.pop_front();
    auto [s, t] = *v.signature();
    for (const Edge& e : q.edges) {
      if (e.from == t) {
        AlgElement w = multiply(elem_unit(pb, pb.index_of(e.from, {e.id})), v);
        if (!w.is_zero() && ideal.insert(w)) work.push_back(w);
      }
      if (e.to == s) {
        AlgElement w = multiply(v, elem_unit(pb, pb.index_of(e.from, {e.id})));
        if (!w.is_zero() && ideal.insert(w)) work.push_back(w);
      }
    }
  }
  ideal.normalize();
  return ideal;
}

GradedSubspace ideal_product(const GradedSubspace& x, const GradedSubspace& y) {
  internal_check(&x.basis() == &y.basis(), "ideal_product over different bases");
  GradedSubspace out(x.basis());
  std::vector<AlgElement> xs = x.basis_elements();
  std::vector<AlgElement> ys = y.basis_elements();
  for (const AlgElement& u : xs) {
    auto su = *u.signature();
    for (const AlgElement& v : ys) {
      auto sv = *v.signature();
      if (su.first != sv.second) continue;  // source(u) must equal target(v)
      AlgElement w = multiply(u, v);
      if (!w.is_zero()) out.insert(w);
    }
  }
  out.normalize();
  return out;
}

GradedSubspace space_sum(const GradedSubspace& x, const GradedSubspace& y) {
  internal_check(&x.basis() == &y.basis(), "space_sum over different bases");
  GradedSubspace out = x;
  for (const AlgElement& v : y.basis_elements()) out.insert(v);
  out.normalize();
  return out;
}

GradedSubspace space_intersect(const GradedSubspace& x, const GradedSubspace& y) {
  internal_check(&x.basis() == &y.basis(), "space_intersect over different bases");
  const PathBasis& pb = x.basis();
  std::set<std::pair<int, int>> pairs;
  for (const auto& [k, sp] : x.blocks()) pairs.insert({k.source, k.target});
  GradedSubspace out(pb);
  for (auto [s, t] : pairs) {
    RowSpace meet = space_intersect(x.pair_space(s, t), y.pair_space(s, t));
    const std::vector<int>& cols = pb.paths_with(s, t);
    for (int r = 0; r < meet.basis().rows; ++r) {
      AlgElement v;
      v.basis = &pb;
      for (int c = 0; c < meet.basis().cols; ++c)
        if (!rat_is_zero(meet.basis().at(r, c))) v.coeffs[cols[c]] = meet.basis().at(r, c);
      out.insert(v);
    }
  }
  out.normalize();
  return out;
}

Count quotient_dim(const GradedSubspace& sub, const GradedSubspace& total) {
  internal_check(&sub.basis() == &total.basis(), "quotient_dim over different bases");
  std::set<std::pair<int, int>> pairs;
  for (const auto& [k, sp] : sub.blocks()) pairs.insert({k.source, k.target});
  for (const auto& [k, sp] : total.blocks()) pairs.insert({k.source, k.target});
  Count d = 0;
  for (auto [s, t] : pairs) d += quotient_dim(sub.pair_space(s, t), total.pair_space(s, t));
  return d;
}

std::vector<std::vector<Count>> quotient_pair_dims(const GradedSubspace& sub,
                                                   const GradedSubspace& total) {
  internal_check(&sub.basis() == &total.basis(), "quotient_pair_dims over different bases");
  int n = sub.basis().quiver().n_vertices;
  std::vector<std::vector<Count>> out(n, std::vector<Count>(n, 0));
  std::set<std::pair<int, int>> pairs;
  for (const auto& [k, sp] : sub.blocks()) pairs.insert({k.source, k.target});
  for (const auto& [k, sp] : total.blocks()) pairs.insert({k.source, k.target});
  for (auto [s, t] : pairs)
    out[s][t] = quotient_dim(sub.pair_space(s, t), total.pair_space(s, t));
  return out;
}

AlgebraPresentation::AlgebraPresentation(const Quiver& q,
                                         const std::vector<std::string>& relation_strings,
                                         std::size_t max_paths)
    : basis_(std::make_shared<const PathBasis>(q, max_paths)),
      relation_strings_(relation_strings),
      ideal_(GradedSubspace(*basis_)) {
  for (const std::string& s : relation_strings_) relations_.push_back(parse_relation(*basis_, s));
  init();
}

AlgebraPresentation::AlgebraPresentation(std::shared_ptr<const PathBasis> basis,
                                         std::vector<AlgElement> relations)
    : basis_(std::move(basis)), relations_(std::move(relations)), ideal_(GradedSubspace(*basis_)) {
  for (const AlgElement& r : relations_) relation_strings_.push_back(elem_str(r));
  init();
}

void AlgebraPresentation::init() {
  std::vector<AlgElement> gens;
  for (const AlgElement& r : relations_) {
    internal_check(r.basis == basis_.get(), "relation over a foreign basis");
    if (r.is_zero()) continue;
    if (!r.signature())
      fail(ErrKind::InconsistentInput,
           "relation is not (source,target)-homogeneous: " + elem_str(r));
    for (const auto& [idx, c] : r.coeffs) {
      if (basis_->path(idx).length() < 2)
        fail(ErrKind::NonAdmissible,
             "relation has a component of length < 2: " + elem_str(r));
    }
    gens.push_back(r);
  }
  ideal_ = two_sided_ideal(*basis_, gens);
}

std::vector<std::vector<Count>> AlgebraPresentation::algebra_pair_dims() const {
  int n = quiver().n_vertices;
  std::vector<std::vector<Count>> out(n, std::vector<Count>(n, 0));
  for (int i = 0; i < basis_->size(); ++i) {
    const Path& p = basis_->path(i);
    ++out[p.source][p.target];
  }
  auto ideal_dims = ideal_.pair_dims();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] -= ideal_dims[i][j];
  return out;
}

}  // namespace specalc
