#pragma once

// Generating functions for clusters (dissected polygons redrawn cell by cell).
//
//   A  clusters rooted at an outside edge, counted up to twisting
//   V  the same without twisting (closed form known)
//   B  clusters rooted at a cell
//   C  clusters rooted at an inside edge whose two sides differ
//   F  free clusters, F = B - C
//
// x marks cells, y marks outside edges (the root edge of A and V excluded).

#include "polycells/number.hpp"
#include "polycells/series.hpp"

namespace polycells {

struct ClusterSeriesSet {
  BivariateSeries A, V, B, C, F;
  SeriesBounds bounds;
};

/// Fixed point of A = y + (x/2) [A^2/(1-A) + (1+A) A2/(1-A2)], A2 = A(x^2, y^2).
BivariateSeries compute_A(SeriesBounds bounds = {});
/// Fixed point of V = y + x V^2/(1-V); checked against closed_form_v on every coefficient.
BivariateSeries compute_V(SeriesBounds bounds = {});
/// x * sum_{k=3}^{max_edge_deg} Z(D_k, A)
BivariateSeries compute_B(const BivariateSeries& A);
/// (1/2) [(A - y)^2 - (A2 - y^2)]
BivariateSeries compute_C(const BivariateSeries& A);
BivariateSeries compute_F(const BivariateSeries& B, const BivariateSeries& C);

ClusterSeriesSet compute_cluster_series(SeriesBounds bounds = {});

/// (1/m) C(n-2, m-1) C(m+n-1, n) for m >= 1, n >= 2; the y term v_{0,1} = 1; zero elsewhere.
Integer closed_form_v(int m, int n);

}  // namespace polycells
