#pragma once

#include <utility>
#include <vector>

#include "specalc/quiver.hpp"

namespace specalc {

// Number-field invariants driving the extension dimensions: r1 real places,
// r2 complex places, s inverted primes. r1 + 2 r2 >= 1 because a field has
// at least one archimedean place.
struct FieldParams {
  Count r1 = 0;
  Count r2 = 0;
  Count s = 0;

  FieldParams() = default;
  FieldParams(Count r1_, Count r2_, Count s_);

  bool is_Z() const { return r1 == 1 && r2 == 0 && s == 0; }
};

// e[m] = dim Ext^1 between weights m apart: e1 = r1 + r2 + s - 1, then r2
// for even m >= 2 and r1 + r2 for odd m >= 3. Index 0 is unused and zero.
std::vector<Count> borel_dims(const FieldParams& fp, int max_m);

// Path counts p[0..max_m] from the convolution p_m = sum_i p_i e_{m-i},
// p_0 = 1. e must cover indices 1..max_m.
std::vector<Count> path_counts(const std::vector<Count>& e, int max_m);

// Same, but also checks the closed 3-term form
// p_m = e1 p_{m-1} + (r2+1) p_{m-2} + (1-s) p_{m-3} for m >= 3.
std::vector<Count> path_counts(const FieldParams& fp, int max_m);

struct DimBResult {
  Count value = 0;        // dim B_n = sum_m p_m (n - m + 1)
  Count first_diff = 0;   // dim B_n - dim B_{n-1} = sum_{m <= n} p_m
  Count second_diff = 0;  // equals p_n
};

// All three quantities, mutually cross-checked. p must cover 0..n.
DimBResult dim_B(const std::vector<Count>& p, int n);

// Zagier's sequence: d_0 = 1, d_1 = 0, d_2 = 1, d_n = d_{n-2} + d_{n-3}.
std::vector<Count> zagier_d(int max_n);

// Even/odd weight split of B_n for the rational integers:
// dim P_i^(n) = sum_{j <= n-i} p_j summed over even resp. odd i.
std::pair<Count, Count> ev_odd_split(int n);

// Smallest cyclotomic level N >= 3 with phi(N)/2 > m, as field parameters
// (0, phi(N)/2, 0).
struct CyclotomicChoice {
  Count N = 0;
  FieldParams fp;
};

CyclotomicChoice min_cyclotomic_params(Count m);

// Explicit quiver on vertices 0..n with e[j-i] parallel edges i -> j; its
// total path count equals dim B_n, which the cross-module tests exploit.
Quiver mtm_quiver(const std::vector<Count>& e, int n);

// Everything above bundled for one field and weight cutoff; ev/odd/d are
// filled only in the rational-integer case.
struct MtmReport {
  FieldParams fp;
  int n = 0;
  std::vector<Count> e;     // 0..n, index 0 zero
  std::vector<Count> p;     // 0..n
  std::vector<Count> dimB;  // 0..n
  std::vector<Count> ev;
  std::vector<Count> odd;
  std::vector<Count> d;
};

MtmReport mtm_report(const FieldParams& fp, int n);

}  // namespace specalc
