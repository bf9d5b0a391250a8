#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "earclip/polygon.hpp"

namespace earclip {

struct Range {
    std::size_t min = 0;
    std::size_t max = 0;
};

/// Parses "MIN..MAX" or a single number.
Range parse_range(std::string_view text);

/// Random star-shaped polygons with star-shaped holes.
///
/// The outer ring has a vertex count drawn from `vertex_range` (within
/// [4, 10000]); angles around the centre are random but strictly increasing
/// and radii vary between 0.3R and R, so most polygons have many reflex
/// vertices. Holes are smaller star polygons placed by rejection sampling
/// with a clearance from every other ring. Output is normalized and fully
/// determined by `seed`. Throws GenerationFailed when a hole cannot be
/// placed within 10000 attempts.
std::vector<PolygonWithHoles> generate_corpus(std::uint64_t seed, std::size_t count, Range vertex_range,
                                              Range holes_range);

}  // namespace earclip
