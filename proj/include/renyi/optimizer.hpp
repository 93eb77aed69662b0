#pragma once

// Minimisation of A(lambda), A(lambda)/H(lambda) and alpha A - (1 - alpha) H
// over the probability simplex: a lattice scan followed by pairwise
// golden-section refinement.

#include <functional>
#include <span>

#include "renyi/exponents.hpp"

namespace renyi {

enum class SearchMethod { GridScan, LocalRefine };

std::string to_string(SearchMethod method);

struct SimplexSearchResult {
  WeightVector argmin;
  double value;  // objective evaluated at argmin
  SearchMethod method;
  double resolution;
};

struct SimplexSearchOptions {
  int resolution = 200;       // lattice step 1/resolution
  int golden_iterations = 50;
  int max_sweeps = 60;
  /// Coordinates below one lattice step are set to exactly 0 and refinement
  /// stays on that face.
  bool snap_to_face = false;
};

using SimplexObjective = std::function<double(std::span<const double>)>;

/// Scans the lattice in lexicographic order keeping the first point within
/// 1e-13 of the running minimum, then refines by golden-section on pairs of
/// free coordinates. Objectives may return +inf to exclude points.
SimplexSearchResult minimize_on_simplex(const SimplexObjective& objective, int m, const SimplexSearchOptions& opts = {});

/// min A(lambda); m in {2, 3, 4}.
SimplexSearchResult minimize_gap(const Exponent& r, int m);

/// min A(lambda) / H(lambda) over points other than the vertices. Small
/// coordinates are snapped to the face before refinement.
SimplexSearchResult minimize_gap_over_entropy(const Exponent& r, int m);

/// min alpha A(lambda) - (1 - alpha) H(lambda).
SimplexSearchResult minimize_mixed(const Exponent& r, int m, double alpha);

}  // namespace renyi
