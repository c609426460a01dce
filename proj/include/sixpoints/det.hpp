#ifndef SIXPOINTS_DET_HPP
#define SIXPOINTS_DET_HPP

#include <vector>

#include "sixpoints/rat.hpp"

namespace sixpoints {

// Exact determinant of a square matrix of rationals. Row denominators are
// cleared first, then Bareiss fraction-free elimination runs over the
// integers; every division in the sweep is exact.
Rat det_exact(const std::vector<std::vector<Rat>>& m);

}  // namespace sixpoints

#endif
