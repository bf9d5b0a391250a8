#pragma once

#include <cstddef>
#include <optional>

#include "earclip/ear_clip.hpp"
#include "earclip/triangulation.hpp"

namespace earclip {

/// Threshold on a new triangle's minimum angle, in degrees, clamped to
/// [0, 60]. A triangle's minimum angle never exceeds 60, so larger values
/// would behave like 60 anyway.
class AngleBound {
public:
    static constexpr double kRecommended = 30.0;

    constexpr AngleBound() = default;
    explicit AngleBound(double degrees);

    double degrees() const { return degrees_; }
    /// True when the requested value was outside [0, 60].
    bool clamped() const { return clamped_; }

private:
    double degrees_ = kRecommended;
    bool clamped_ = false;
};

struct SwapStats {
    std::size_t sharp = 0;        ///< new triangles below the bound
    std::size_t no_neighbor = 0;  ///< sharp, but nothing across the longest edge yet
    std::size_t swapped = 0;
    std::size_t violations = 0;   ///< executed swaps that did not raise the pair minimum
};

struct SwapResult {
    bool swapped = false;
    std::size_t first = 0;
    std::size_t second = 0;
    double min_before = 0.0;
    double min_after = 0.0;
};

/// The triangle sharing `t`'s longest edge (opposite its largest angle), if
/// one has been generated yet.
std::optional<std::size_t> find_neighbor_across_longest_edge(std::size_t t, const Triangulation& tri);

/// Flips the shared diagonal of two adjacent triangles iff their union is a
/// strictly convex quadrilateral and the flip strictly raises the minimum of
/// the six angles. Throws std::logic_error when the triangles are not adjacent.
SwapResult try_swap(std::size_t t1, std::size_t t2, Triangulation& tri);

/// Smallest-angle-first clipping with one swap attempt per new triangle whose
/// minimum angle is below `bound`. The ring is never affected by a swap.
Triangulation triangulate_improved(VertexRing ring, AngleBound bound, Execution exec = Execution::Serial,
                                   SwapStats* stats = nullptr);

}  // namespace earclip
