#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "earclip/bridge.hpp"
#include "earclip/ear_clip.hpp"
#include "earclip/quality.hpp"
#include "earclip/swap_opt.hpp"

namespace earclip {

enum class Algorithm { Traditional, Basic, Improved };

Algorithm parse_algorithm(std::string_view name);
const char* to_string(Algorithm algorithm);

enum class OutputFormat { Json, Obj, Svg, Stats };

struct RunConfig {
    Algorithm algorithm = Algorithm::Basic;
    AngleBound bound{AngleBound::kRecommended};
    bool validate = false;
    std::uint64_t seed = 42;
    OutputFormat emit = OutputFormat::Json;
    Execution exec = Execution::Serial;
    Epsilon eps{};
};

struct RunResult {
    DegenerateRing ring;
    Triangulation triangulation;
    QualityReport report;
    SwapStats swaps;
};

/// Runs the selected triangulator on an already bridged ring.
Triangulation triangulate(const DegenerateRing& ring, const RunConfig& config, SwapStats* swaps = nullptr);

/// Bridges the holes, triangulates and reports. `poly` must be normalized.
/// With `config.validate` set, an invalid polygon throws InvalidRing.
RunResult run(const RunConfig& config, const PolygonWithHoles& poly);

/// Aggregated quality of one configuration over a corpus.
struct CorpusRow {
    std::string label;
    QualityReport pooled;                 ///< all triangles of all polygons together
    std::vector<double> polygon_average;  ///< per polygon; NaN where the run failed
    std::size_t failures = 0;
};

/// Runs every configuration on every polygon. With Execution::Parallel the
/// polygons are distributed over OpenMP threads; each thread owns its
/// polygon and the reduction is serial, so results match the serial path.
std::vector<CorpusRow> evaluate_corpus(std::span<const PolygonWithHoles> corpus,
                                       std::span<const std::pair<std::string, RunConfig>> configs,
                                       Execution exec = Execution::Serial);

}  // namespace earclip
