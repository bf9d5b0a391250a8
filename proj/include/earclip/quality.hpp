#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "earclip/triangulation.hpp"

namespace earclip {

/// Minimum-angle histogram over the bins [0,15), [15,30), [30,45), [45,60].
struct QualityReport {
    std::array<double, 4> bin_fractions{};
    double average_min_angle = 0.0;
    std::size_t triangle_count = 0;    ///< triangles included in the statistics
    std::size_t degenerate_count = 0;  ///< flagged zero-area triangles, excluded
};

std::size_t quality_bin(double min_angle_degrees);

/// Report over the non-degenerate triangles. Throws EmptyInput when there
/// are none.
QualityReport report(const Triangulation& tri);

/// Same histogram from precomputed minimum angles.
QualityReport report_from_angles(std::span<const double> min_angles, std::size_t degenerate_count = 0);

enum class TableFormat { Text, Csv, Markdown };

/// Renders rows as a table with bins as percentages and the average in
/// degrees, both to two decimals.
std::string compare(std::span<const std::pair<std::string, QualityReport>> rows,
                    TableFormat format = TableFormat::Text);

}  // namespace earclip
