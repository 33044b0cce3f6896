#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "latcov/lattice.hpp"

namespace latcov {

/// Visits every spanning lattice-convex K inside {0..width-1} x {0..height-1}
/// exactly once per translation class: each K is reported with its
/// componentwise minimum at the origin. Vertices are grown as a convex chain
/// from the lowest-leftmost vertex with strictly increasing edge angles.
void for_each_lattice_convex(int width, int height,
                             const std::function<void(const LatticeSet&)>& visit);

/// Same family, materialized and sorted. Work is split into shards by the
/// first chain edge; the result does not depend on `jobs`.
std::vector<LatticeSet> enumerate_lattice_convex(int width, int height, unsigned jobs = 1);

}  // namespace latcov
