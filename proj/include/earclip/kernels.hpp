#pragma once

// Data-parallel kernels. Each has a serial reference with the same contract;
// tests require the two to produce identical results.

#include <span>
#include <vector>

#include "earclip/polygon.hpp"
#include "earclip/triangulation.hpp"

namespace earclip::kernels {

/// Initial ear status for every live node, O(n^2).
void classify_ears_serial(VertexRing& ring);
void classify_ears_parallel(VertexRing& ring);

/// Minimum angle per triangle in degrees; degenerate triangles yield 0.
std::vector<double> min_angles_serial(const Triangulation& tri);
std::vector<double> min_angles_parallel(const Triangulation& tri);

}  // namespace earclip::kernels
