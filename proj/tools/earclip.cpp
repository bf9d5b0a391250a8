// earclip: command-line front end for triangulation, corpus generation and
// quality benchmarking.
//
// Exit codes: 0 success, 2 parse error, 3 geometry error, 4 usage error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "earclip/corpus.hpp"
#include "earclip/errors.hpp"
#include "earclip/io.hpp"
#include "earclip/pipeline.hpp"

namespace fs = std::filesystem;
using namespace earclip;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitGeometry = 3;
constexpr int kExitUsage = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError(fmt::format("cannot open '{}'", path));
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw UsageError(fmt::format("cannot write '{}'", path));
    }
    out << data;
}

std::string ring_line(const std::vector<Point2>& pts) {
    std::string s = "ring";
    for (const Point2& p : pts) {
        s += fmt::format(" {},{}", p.x, p.y);
    }
    return s;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

struct TriangulateArgs {
    std::string algorithm = "basic";
    double bound = AngleBound::kRecommended;
    bool bound_given = false;
    bool validate = false;
    std::string input;
    std::string output;
    std::string format = "text";
    std::string emit = "json";
    std::string emit_degenerate;
};

int cmd_triangulate(const TriangulateArgs& args) {
    RunConfig config;
    config.algorithm = parse_algorithm(args.algorithm);
    config.bound = AngleBound(args.bound);
    config.validate = args.validate;
    config.exec = Execution::Parallel;
    if (args.bound_given && config.algorithm != Algorithm::Improved) {
        std::cerr << "warning: --bound only affects --algorithm improved\n";
    }
    if (config.bound.clamped()) {
        std::cerr << fmt::format("warning: bound {} clamped to {}\n", args.bound, config.bound.degrees());
    }

    const std::string text = read_file(args.input);
    const ParsedPolygon parsed =
        parse_polygon(text, args.format == "geojson" ? InputFormat::GeoJson : InputFormat::Text, config.eps);
    for (const std::string& notice : parsed.notices) {
        std::cerr << "notice: " << notice << '\n';
    }

    const RunResult result = run(config, parsed.polygon);
    if (!args.emit_degenerate.empty()) {
        write_output(args.emit_degenerate, ring_line(result.ring.ring.points) + "\n");
    }

    std::string out;
    if (args.emit == "json") {
        out = to_json(result.triangulation, result.report);
    } else if (args.emit == "obj") {
        out = to_obj(result.triangulation);
    } else if (args.emit == "svg") {
        out = render_svg(parsed.polygon, result.triangulation);
    } else {
        const std::string label =
            config.algorithm == Algorithm::Improved
                ? fmt::format("improved({})", config.bound.degrees())
                : std::string(to_string(config.algorithm));
        const std::vector<std::pair<std::string, QualityReport>> rows{{label, result.report}};
        out = compare(rows, TableFormat::Text);
        if (result.report.degenerate_count > 0) {
            out += fmt::format("degenerate triangles excluded: {}\n", result.report.degenerate_count);
        }
    }
    write_output(args.output, out);
    return 0;
}

struct CorpusArgs {
    std::uint64_t seed = 42;
    std::size_t count = 1;
    std::string vertices = "4..200";
    std::string holes = "0..0";
    std::string out_dir;
};

int cmd_gen_corpus(const CorpusArgs& args) {
    const auto corpus = generate_corpus(args.seed, args.count, parse_range(args.vertices), parse_range(args.holes));
    fs::create_directories(args.out_dir);
    for (std::size_t k = 0; k < corpus.size(); ++k) {
        write_output((fs::path(args.out_dir) / fmt::format("polygon_{:04d}.txt", k)).string(),
                     serialize_polygon(corpus[k]));
    }
    std::cerr << fmt::format("wrote {} polygons to {}\n", corpus.size(), args.out_dir);
    return 0;
}

struct BenchArgs {
    std::string corpus;
    std::string algorithms = "basic,traditional,improved";
    std::string bounds = "0,30,60";
    std::string report = "md";
};

int cmd_bench(const BenchArgs& args) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(args.corpus)) {
        if (entry.is_regular_file() && entry.path().extension() == ".txt") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        throw UsageError(fmt::format("no .txt polygons in '{}'", args.corpus));
    }
    std::vector<PolygonWithHoles> corpus;
    for (const auto& f : files) {
        try {
            corpus.push_back(parse_polygon(read_file(f.string())).polygon);
        } catch (const ParseError&) {
            std::cerr << fmt::format("in {}:\n", f.string());
            throw;
        }
    }

    std::vector<std::pair<std::string, RunConfig>> configs;
    for (const std::string& name : split_list(args.algorithms)) {
        RunConfig config;
        config.algorithm = parse_algorithm(name);
        if (config.algorithm != Algorithm::Improved) {
            configs.emplace_back(name, config);
            continue;
        }
        for (const std::string& b : split_list(args.bounds)) {
            config.bound = AngleBound(std::stod(b));
            configs.emplace_back(fmt::format("improved({})", config.bound.degrees()), config);
        }
    }
    if (configs.empty()) {
        throw UsageError("no algorithms selected");
    }

    const auto rows = evaluate_corpus(corpus, configs, Execution::Parallel);
    std::vector<std::pair<std::string, QualityReport>> table;
    for (const CorpusRow& row : rows) {
        table.emplace_back(row.label, row.pooled);
        if (row.failures > 0) {
            std::cerr << fmt::format("warning: {} failed on {} polygon(s)\n", row.label, row.failures);
        }
    }
    std::cout << compare(table, args.report == "csv" ? TableFormat::Csv : TableFormat::Markdown);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ear-clipping triangulation with smallest-angle ear selection and edge swapping"};
    app.require_subcommand(1);

    TriangulateArgs tri_args;
    auto* tri = app.add_subcommand("triangulate", "Triangulate one polygon file");
    tri->add_option("--algorithm", tri_args.algorithm, "traditional | basic | improved")
        ->check(CLI::IsMember({"traditional", "basic", "improved"}));
    auto* bound_opt = tri->add_option("--bound", tri_args.bound, "Angle bound in degrees for improved (default 30)");
    tri->add_flag("--validate", tri_args.validate, "Check ring simplicity and hole placement first");
    tri->add_option("--input", tri_args.input, "Polygon file")->required();
    tri->add_option("--output", tri_args.output, "Output file (default stdout)");
    tri->add_option("--format", tri_args.format, "Input format")->check(CLI::IsMember({"text", "geojson"}));
    tri->add_option("--emit", tri_args.emit, "Output kind")->check(CLI::IsMember({"json", "obj", "svg", "stats"}));
    tri->add_option("--emit-degenerate", tri_args.emit_degenerate, "Write the bridged single ring to this file");

    CorpusArgs corpus_args;
    auto* gen = app.add_subcommand("gen-corpus", "Generate random star-shaped polygons");
    gen->add_option("--seed", corpus_args.seed, "RNG seed (default 42)");
    gen->add_option("--count", corpus_args.count, "Number of polygons")->required();
    gen->add_option("--vertices", corpus_args.vertices, "Outer vertex count MIN..MAX");
    gen->add_option("--holes", corpus_args.holes, "Hole count MIN..MAX");
    gen->add_option("--out-dir", corpus_args.out_dir, "Output directory")->required();

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Minimum-angle quality table over a corpus directory");
    bench->add_option("--corpus", bench_args.corpus, "Directory of polygon files")->required();
    bench->add_option("--algorithms", bench_args.algorithms, "Comma-separated algorithms");
    bench->add_option("--bounds", bench_args.bounds, "Comma-separated bounds for improved");
    bench->add_option("--report", bench_args.report, "csv | md")->check(CLI::IsMember({"csv", "md"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }
    tri_args.bound_given = bound_opt->count() > 0;

    try {
        if (*tri) return cmd_triangulate(tri_args);
        if (*gen) return cmd_gen_corpus(corpus_args);
        if (*bench) return cmd_bench(bench_args);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const EarSearchFailed& e) {
        std::cerr << "geometry error: " << e.what() << "\nsurviving " << ring_line(e.surviving_ring()) << '\n';
        return kExitGeometry;
    } catch (const NoValidBridge& e) {
        std::cerr << "geometry error: " << e.what() << "\nouter " << ring_line(e.outer_ring()) << "\nhole "
                  << ring_line(e.hole_ring()) << '\n';
        return kExitGeometry;
    } catch (const GeometryError& e) {
        std::cerr << "geometry error: " << e.what() << '\n';
        return e.kind() == ErrorKind::InvalidRing ? kExitParse : kExitGeometry;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
