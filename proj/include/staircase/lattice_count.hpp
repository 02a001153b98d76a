#pragma once

#include <vector>

#include "staircase/core.hpp"

namespace staircase {

// Number of lattice points not above any generator, i.e. the count of
// standard monomials of the ideal generated by `gens` in nvars variables.
// Runs a depth-first sweep over the bounding box, slicing on the last
// coordinate and recursing; slices that do not change are counted in runs.
// Throws precondition_error("infinite length") when the ideal is not primary
// to the irrelevant ideal, internal_error on 64-bit overflow.
Count count_standard_monomials(const std::vector<ExponentVector>& gens, int nvars);

}  // namespace staircase
