#include "specalc/mixedtate.hpp"

#include "specalc/errors.hpp"

namespace specalc {

FieldParams::FieldParams(Count r1_, Count r2_, Count s_) : r1(r1_), r2(r2_), s(s_) {
  if (r1 < 0 || r2 < 0 || s < 0)
    fail(ErrKind::InconsistentInput, "field parameters must be nonnegative");
  if (r1 + 2 * r2 < 1)
    fail(ErrKind::InconsistentInput, "a number field has r1 + 2 r2 >= 1");
}

std::vector<Count> borel_dims(const FieldParams& fp, int max_m) {
  std::vector<Count> e(static_cast<size_t>(max_m) + 1, 0);
  if (max_m >= 1) e[1] = fp.r1 + fp.r2 + fp.s - 1;
  for (int m = 2; m <= max_m; ++m) e[static_cast<size_t>(m)] = m % 2 == 0 ? fp.r2 : fp.r1 + fp.r2;
  return e;
}

std::vector<Count> path_counts(const std::vector<Count>& e, int max_m) {
  internal_check(static_cast<int>(e.size()) > max_m, "e must cover indices up to max_m");
  std::vector<Count> p(static_cast<size_t>(max_m) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= max_m; ++m) {
    Count acc = 0;
    for (int i = 0; i < m; ++i) acc += p[static_cast<size_t>(i)] * e[static_cast<size_t>(m - i)];
    p[static_cast<size_t>(m)] = acc;
  }
  return p;
}

std::vector<Count> path_counts(const FieldParams& fp, int max_m) {
  std::vector<Count> p = path_counts(borel_dims(fp, max_m), max_m);
  const Count e1 = fp.r1 + fp.r2 + fp.s - 1;
  for (int m = 3; m <= max_m; ++m) {
    const Count closed = e1 * p[static_cast<size_t>(m - 1)] +
                         (fp.r2 + 1) * p[static_cast<size_t>(m - 2)] +
                         (1 - fp.s) * p[static_cast<size_t>(m - 3)];
    internal_check(closed == p[static_cast<size_t>(m)],
                   "3-term path recursion disagrees with the convolution");
  }
  return p;
}

DimBResult dim_B(const std::vector<Count>& p, int n) {
  internal_check(n >= 0 && static_cast<int>(p.size()) > n, "p must cover 0..n");
  auto value_at = [&](int k) {
    if (k < 0) return Count(0);
    Count v = 0;
    for (int m = 0; m <= k; ++m) v += p[static_cast<size_t>(m)] * (k - m + 1);
    return v;
  };
  DimBResult r;
  r.value = value_at(n);
  r.first_diff = r.value - value_at(n - 1);
  r.second_diff = r.first_diff - (value_at(n - 1) - value_at(n - 2));
  Count partial = 0;
  for (int m = 0; m <= n; ++m) partial += p[static_cast<size_t>(m)];
  internal_check(r.first_diff == partial, "first difference must be the partial p-sum");
  internal_check(r.second_diff == p[static_cast<size_t>(n)],
                 "second difference must be p_n");
  return r;
}

std::vector<Count> zagier_d(int max_n) {
  std::vector<Count> d(static_cast<size_t>(max_n) + 1, 0);
  if (max_n >= 0) d[0] = 1;
  if (max_n >= 2) d[2] = 1;
  for (int n = 3; n <= max_n; ++n)
    d[static_cast<size_t>(n)] = d[static_cast<size_t>(n - 2)] + d[static_cast<size_t>(n - 3)];
  return d;
}

std::pair<Count, Count> ev_odd_split(int n) {
  internal_check(n >= 0, "weight cutoff must be nonnegative");
  const std::vector<Count> p = path_counts(FieldParams(1, 0, 0), n);
  std::vector<Count> psum(p.size() + 1, 0);  // psum[k] = p_0 + ... + p_{k-1}
  for (size_t k = 0; k < p.size(); ++k) psum[k + 1] = psum[k] + p[k];
  Count ev = 0, odd = 0;
  for (int i = 0; i <= n; ++i) (i % 2 == 0 ? ev : odd) += psum[static_cast<size_t>(n - i) + 1];
  return {ev, odd};
}

namespace {

Count euler_phi(Count n) {
  Count result = n;
  for (Count q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    while (n % q == 0) n /= q;
    result -= result / q;
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace

CyclotomicChoice min_cyclotomic_params(Count m) {
  internal_check(m >= 0, "m must be nonnegative");
  for (Count N = 3;; ++N) {
    const Count half = euler_phi(N) / 2;
    if (half > m) return {N, FieldParams(0, half, 0)};
  }
}

Quiver mtm_quiver(const std::vector<Count>& e, int n) {
  internal_check(static_cast<int>(e.size()) > n, "e must cover differences up to n");
  Quiver q;
  q.n_vertices = n + 1;
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (Count k = 0; k < e[static_cast<size_t>(j - i)]; ++k) {
        Edge ed;
        ed.id = static_cast<int>(q.edges.size());
        ed.from = i;
        ed.to = j;
        ed.label = "t" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k);
        q.edges.push_back(ed);
      }
    }
  }
  q.validate();
  return q;
}

MtmReport mtm_report(const FieldParams& fp, int n) {
  internal_check(n >= 0, "weight cutoff must be nonnegative");
  MtmReport r;
  r.fp = fp;
  r.n = n;
  r.e = borel_dims(fp, n);
  r.p = path_counts(fp, n);
  r.dimB.reserve(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) r.dimB.push_back(dim_B(r.p, k).value);
  if (fp.is_Z()) {
    r.d = zagier_d(n);
    for (int k = 0; k <= n; ++k) {
      auto [ev, odd] = ev_odd_split(k);
      r.ev.push_back(ev);
      r.odd.push_back(odd);
      internal_check(ev + odd == r.dimB[static_cast<size_t>(k)],
                     "even and odd parts must sum to dim B");
    }
  }
  return r;
}

}  // namespace specalc
