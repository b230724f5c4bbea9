#pragma once

#include <cstdint>
#include <vector>

#include "blowup/divisor_class.hpp"

namespace blowup::interpolation {

// Parameters for the finite-field dimension probe.  The prime must be odd
// and below 2^63; primality itself is trusted, not verified (the default
// is 2^31 - 1).  Keep the prime larger than the degree so the derivative
// coefficients stay nonzero.  Trial t seeds the generator with seed + t.
struct Options {
  std::uint64_t prime = 2147483647;
  std::uint64_t seed = 42;
  int trials = 3;
};

// Measured dimension of the plane-curve system of the given degree with the
// given point multiplicities, at independently sampled points over F_p.
// Dimensions are projective (-1 = empty system).  rank is the largest rank
// seen across trials, and actual_dim = cols - 1 - rank, so more trials can
// only tighten the estimate downward toward the true general-position value.
struct SystemDimensionReport {
  std::int64_t degree = 0;
  std::vector<std::int64_t> mults;
  std::int64_t rows = 0;          // vanishing conditions imposed
  std::int64_t cols = 0;          // coefficients of a degree-d plane curve
  std::int64_t rank = 0;
  std::int64_t actual_dim = -1;
  std::int64_t expected_dim = -1;
  bool is_special = false;        // actual_dim > expected_dim
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  int trials = 0;
};

// Rank of the interpolation matrix by exact Gaussian elimination over F_p.
// Non-positive multiplicities impose no conditions.  Throws on degenerate
// options or systems too large for dense elimination.
SystemDimensionReport actual_dimension(const DivisorClass& l, const Options& opt = {});

// Whether the measured dimension exceeds the virtual one.
bool is_special(const DivisorClass& l, const Options& opt = {});

// Whether the class carries an effective curve: negative multiplicities
// contribute forced exceptional components, so the test reduces to the
// plane system on the positive part (false outright when the degree is
// negative).
bool curve_class_effective(const DivisorClass& l, const Options& opt = {});

}  // namespace blowup::interpolation
