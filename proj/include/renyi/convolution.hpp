#pragma once

// Density of sum_i a_i X_i for independent X_i on a common lattice.

#include <cstddef>
#include <vector>

#include "renyi/density.hpp"

namespace renyi {

struct SumPart {
  Density1D density;
  double coefficient;
};

struct SumSpec {
  std::vector<SumPart> parts;
};

struct ConvolutionOptions {
  std::size_t grid_n = 16384;  // cells across the widest scaled part
  /// Smallest order whose entropy will be taken of the sum. Orders below 1
  /// weight the tails more, so each part is covered out to the default window
  /// of its escort of this order.
  double min_order = 1.0;
  double max_mass_defect = 1e-6;
};

struct SumDensity {
  Density1D density;
  double mass_defect;  // 1 - captured mass before renormalisation
};

/// Each part is scaled, reduced to exact cell masses on the lattice h*Z
/// (cells centred on the nodes), and the mass vectors are convolved directly
/// in a left fold. Node values are cell mass / h. Throws GridCoverageError
/// when more than `max_mass_defect` of the mass falls outside the lattice.
SumDensity scaled_sum_density(const SumSpec& spec, const ConvolutionOptions& opts = {});

/// Linear (zero-padded) discrete convolution.
std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace renyi
