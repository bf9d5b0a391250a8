#include "earclip/quality.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "earclip/errors.hpp"
#include "earclip/kernels.hpp"

namespace earclip {

std::size_t quality_bin(double min_angle_degrees) {
    if (!(min_angle_degrees > 0.0)) {
        return 0;
    }
    return std::min<std::size_t>(static_cast<std::size_t>(min_angle_degrees / 15.0), 3);
}

QualityReport report_from_angles(std::span<const double> min_angles, std::size_t degenerate_count) {
    if (min_angles.empty()) {
        throw GeometryError(ErrorKind::EmptyInput, "no non-degenerate triangles to report on");
    }
    QualityReport r;
    std::array<std::size_t, 4> counts{};
    double sum = 0.0;
    for (double a : min_angles) {
        ++counts[quality_bin(a)];
        sum += a;
    }
    const auto n = static_cast<double>(min_angles.size());
    for (std::size_t b = 0; b < 4; ++b) {
        r.bin_fractions[b] = static_cast<double>(counts[b]) / n;
    }
    r.average_min_angle = sum / n;
    r.triangle_count = min_angles.size();
    r.degenerate_count = degenerate_count;
    return r;
}

QualityReport report(const Triangulation& tri) {
    const std::vector<double> all = kernels::min_angles_serial(tri);
    std::vector<double> kept;
    kept.reserve(all.size());
    for (std::size_t t = 0; t < tri.size(); ++t) {
        if (!tri[t].degenerate) {
            kept.push_back(all[t]);
        }
    }
    return report_from_angles(kept, tri.size() - kept.size());
}

std::string compare(std::span<const std::pair<std::string, QualityReport>> rows, TableFormat format) {
    static constexpr std::array<const char*, 4> kBins = {"[0,15)", "[15,30)", "[30,45)", "[45,60]"};
    std::string out;
    auto pct = [](double f) { return fmt::format("{:.2f}%", 100.0 * f); };

    switch (format) {
        case TableFormat::Csv:
            out += "algorithm,min_0_15,min_15_30,min_30_45,min_45_60,average,triangles,degenerate\n";
            for (const auto& [label, r] : rows) {
                out += fmt::format("{},{},{},{},{},{:.2f},{},{}\n", label, pct(r.bin_fractions[0]),
                                   pct(r.bin_fractions[1]), pct(r.bin_fractions[2]), pct(r.bin_fractions[3]),
                                   r.average_min_angle, r.triangle_count, r.degenerate_count);
            }
            break;
        case TableFormat::Markdown:
            out += fmt::format("| Algorithm | {} | {} | {} | {} | Average |\n", kBins[0], kBins[1], kBins[2], kBins[3]);
            out += "|---|---:|---:|---:|---:|---:|\n";
            for (const auto& [label, r] : rows) {
                out += fmt::format("| {} | {} | {} | {} | {} | {:.2f} |\n", label, pct(r.bin_fractions[0]),
                                   pct(r.bin_fractions[1]), pct(r.bin_fractions[2]), pct(r.bin_fractions[3]),
                                   r.average_min_angle);
            }
            break;
        case TableFormat::Text: {
            std::size_t width = 9;  // "algorithm"
            for (const auto& row : rows) {
                width = std::max(width, row.first.size());
            }
            out += fmt::format("{:<{}}  {:>8} {:>8} {:>8} {:>8} {:>8}\n", "algorithm", width, kBins[0], kBins[1],
                               kBins[2], kBins[3], "average");
            for (const auto& [label, r] : rows) {
                out += fmt::format("{:<{}}  {:>8} {:>8} {:>8} {:>8} {:>8.2f}\n", label, width,
                                   pct(r.bin_fractions[0]), pct(r.bin_fractions[1]), pct(r.bin_fractions[2]),
                                   pct(r.bin_fractions[3]), r.average_min_angle);
            }
            break;
        }
    }
    return out;
}

}  // namespace earclip
