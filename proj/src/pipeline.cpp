#include "earclip/pipeline.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

#include "earclip/errors.hpp"
#include "earclip/kernels.hpp"

namespace earclip {

Algorithm parse_algorithm(std::string_view name) {
    if (name == "traditional") return Algorithm::Traditional;
    if (name == "basic") return Algorithm::Basic;
    if (name == "improved") return Algorithm::Improved;
    throw std::invalid_argument(fmt::format("unknown algorithm '{}'", name));
}

const char* to_string(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::Traditional: return "traditional";
        case Algorithm::Basic: return "basic";
        case Algorithm::Improved: return "improved";
    }
    return "unknown";
}

Triangulation triangulate(const DegenerateRing& ring, const RunConfig& config, SwapStats* swaps) {
    VertexRing vr = build_ring(ring.ring, ring.original_index, config.eps);
    switch (config.algorithm) {
        case Algorithm::Traditional: return triangulate_traditional(std::move(vr), config.exec);
        case Algorithm::Basic: return triangulate_basic(std::move(vr), config.exec);
        case Algorithm::Improved: return triangulate_improved(std::move(vr), config.bound, config.exec, swaps);
    }
    throw std::logic_error("unreachable");
}

RunResult run(const RunConfig& config, const PolygonWithHoles& poly) {
    if (config.validate) {
        if (const std::string why = validate(poly, config.eps); !why.empty()) {
            throw GeometryError(ErrorKind::InvalidRing, "validation failed: " + why);
        }
    }
    RunResult result;
    result.ring = eliminate_holes(poly, config.eps);
    result.triangulation = triangulate(result.ring, config, &result.swaps);
    result.report = report(result.triangulation);
    return result;
}

namespace {

struct Sample {
    std::vector<double> min_angles;
    std::size_t degenerate = 0;
    bool ok = false;
};

Sample evaluate_one(const PolygonWithHoles& poly, const RunConfig& config) {
    Sample s;
    try {
        const DegenerateRing ring = eliminate_holes(poly, config.eps);
        const Triangulation tri = triangulate(ring, config);
        const std::vector<double> all = kernels::min_angles_serial(tri);
        for (std::size_t t = 0; t < tri.size(); ++t) {
            if (tri[t].degenerate) {
                ++s.degenerate;
            } else {
                s.min_angles.push_back(all[t]);
            }
        }
        s.ok = !s.min_angles.empty();
    } catch (const GeometryError&) {
        s.ok = false;
    }
    return s;
}

}  // namespace

std::vector<CorpusRow> evaluate_corpus(std::span<const PolygonWithHoles> corpus,
                                       std::span<const std::pair<std::string, RunConfig>> configs,
                                       Execution exec) {
    const std::size_t jobs = corpus.size() * configs.size();
    std::vector<Sample> samples(jobs);
    const auto n = static_cast<std::int64_t>(jobs);
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t j = 0; j < n; ++j) {
            const auto k = static_cast<std::size_t>(j);
            samples[k] = evaluate_one(corpus[k / configs.size()], configs[k % configs.size()].second);
        }
    } else {
        for (std::size_t k = 0; k < jobs; ++k) {
            samples[k] = evaluate_one(corpus[k / configs.size()], configs[k % configs.size()].second);
        }
    }

    std::vector<CorpusRow> rows;
    for (std::size_t c = 0; c < configs.size(); ++c) {
        CorpusRow row;
        row.label = configs[c].first;
        std::vector<double> pooled;
        std::size_t degenerate = 0;
        for (std::size_t p = 0; p < corpus.size(); ++p) {
            const Sample& s = samples[p * configs.size() + c];
            if (!s.ok) {
                ++row.failures;
                row.polygon_average.push_back(std::numeric_limits<double>::quiet_NaN());
                continue;
            }
            double sum = 0.0;
            for (double a : s.min_angles) {
                sum += a;
            }
            row.polygon_average.push_back(sum / static_cast<double>(s.min_angles.size()));
            pooled.insert(pooled.end(), s.min_angles.begin(), s.min_angles.end());
            degenerate += s.degenerate;
        }
        if (!pooled.empty()) {
            row.pooled = report_from_angles(pooled, degenerate);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace earclip
