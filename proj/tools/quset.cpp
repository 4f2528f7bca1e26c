// quset: fuzzy/quantum set calculations over PGM images.
//
// Subcommands: match, sample, estimate, fuzzyop. All numeric stdout is
// deterministic for fixed inputs and seeds; timing goes to stderr.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "quset/error.hpp"
#include "quset/fuzzy.hpp"
#include "quset/operators.hpp"
#include "quset/pgm.hpp"
#include "quset/quset.hpp"
#include "quset/registers.hpp"
#include "quset/tolerances.hpp"

namespace {

using namespace quset;

std::string format_double(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

std::string escape_json(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buffer[8];
                    std::snprintf(buffer, sizeof(buffer), "\\u%04x", c);
                    out += buffer;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

// Insertion-ordered JSON object writer. Doubles are printed with 17
// significant digits so every value round-trips exactly.
class JsonObject {
  public:
    JsonObject& field(const std::string& name, const std::string& value) {
        return raw(name, "\"" + escape_json(value) + "\"");
    }
    JsonObject& field(const std::string& name, const char* value) {
        return field(name, std::string(value));
    }
    JsonObject& field(const std::string& name, bool value) {
        return raw(name, value ? "true" : "false");
    }
    JsonObject& field(const std::string& name, std::uint64_t value) {
        return raw(name, std::to_string(value));
    }
    JsonObject& field(const std::string& name, int value) {
        return raw(name, std::to_string(value));
    }
    JsonObject& field(const std::string& name, double value) {
        return raw(name, format_double(value));
    }
    JsonObject& raw(const std::string& name, const std::string& rendered) {
        if (!first_) body_ += ',';
        first_ = false;
        body_ += "\"" + escape_json(name) + "\":" + rendered;
        return *this;
    }
    std::string str() const { return "{" + body_ + "}"; }

  private:
    std::string body_;
    bool first_ = true;
};

// One result row: shared by the text renderer and the JSON results block.
struct ResultRow {
    std::string name;
    enum class Kind { Double, UInt, Int } kind;
    double as_double = 0.0;
    std::uint64_t as_uint = 0;
    int as_int = 0;
};

struct Report {
    std::string command;
    JsonObject inputs;
    std::optional<std::uint64_t> seed;
    std::vector<ResultRow> results;
    std::string frequencies_json; // rendered array, optional
    std::vector<std::string> frequency_lines;
    std::string output_path;

    void add(const std::string& name, double v) {
        results.push_back({name, ResultRow::Kind::Double, v, 0, 0});
    }
    void add(const std::string& name, std::uint64_t v) {
        results.push_back({name, ResultRow::Kind::UInt, 0, v, 0});
    }
    void add(const std::string& name, int v) {
        results.push_back({name, ResultRow::Kind::Int, 0, 0, v});
    }
};

void emit_report(const Report& report, bool as_json) {
    if (as_json) {
        JsonObject root;
        root.field("command", report.command);
        root.raw("inputs", report.inputs.str());
        if (report.seed) root.field("seed", *report.seed);
        JsonObject results;
        for (const auto& row : report.results) {
            switch (row.kind) {
                case ResultRow::Kind::Double: results.field(row.name, row.as_double); break;
                case ResultRow::Kind::UInt: results.field(row.name, row.as_uint); break;
                case ResultRow::Kind::Int: results.field(row.name, row.as_int); break;
            }
        }
        root.raw("results", results.str());
        if (!report.frequencies_json.empty()) {
            root.raw("frequencies", report.frequencies_json);
        }
        if (!report.output_path.empty()) {
            root.field("output", report.output_path);
        }
        std::cout << root.str() << "\n";
        return;
    }
    for (const auto& row : report.results) {
        std::cout << row.name << " = ";
        switch (row.kind) {
            case ResultRow::Kind::Double: std::cout << format_double(row.as_double); break;
            case ResultRow::Kind::UInt: std::cout << row.as_uint; break;
            case ResultRow::Kind::Int: std::cout << row.as_int; break;
        }
        std::cout << "\n";
    }
    for (const auto& line : report.frequency_lines) std::cout << line << "\n";
    if (!report.output_path.empty()) std::cout << "wrote = " << report.output_path << "\n";
}

FuzzySet load_single(const std::string& path, bool invert, bool pad) {
    const ImageDocument img = read_pgm(path);
    if (pad) {
        return image_to_fuzzy(img, invert, std::max(img.width, img.height));
    }
    if (img.width != img.height) {
        throw DomainError("'" + path + "' is " + std::to_string(img.width) + "x" +
                          std::to_string(img.height) + "; pass --pad to zero-pad to a square");
    }
    return image_to_fuzzy(img, invert);
}

std::pair<FuzzySet, FuzzySet> load_pair(const std::string& path_a, const std::string& path_b,
                                        bool invert, bool pad) {
    const ImageDocument a = read_pgm(path_a);
    const ImageDocument b = read_pgm(path_b);
    if (pad) {
        const int side = std::max({a.width, a.height, b.width, b.height});
        return {image_to_fuzzy(a, invert, side), image_to_fuzzy(b, invert, side)};
    }
    if (a.width != a.height || b.width != b.height || a.width != b.width) {
        throw DomainError("images are " + std::to_string(a.width) + "x" +
                          std::to_string(a.height) + " and " + std::to_string(b.width) + "x" +
                          std::to_string(b.height) +
                          "; pass --pad to zero-pad to a common square");
    }
    return {image_to_fuzzy(a, invert), image_to_fuzzy(b, invert)};
}

struct MatchArgs {
    std::string file_a, file_b;
    bool invert = false, pad = false, json = false;
};

void run_match(const MatchArgs& args) {
    const auto [fa, fb] = load_pair(args.file_a, args.file_b, args.invert, args.pad);
    const StandardizedFuzzySet pa = standardize(fa);
    const StandardizedFuzzySet pb = standardize(fb);

    const double h_fuzzy = likelihood(pa, pb);
    const QuSet qa = from_fuzzy_sqrt(pa);
    const QuSet qb = from_fuzzy_sqrt(pb);
    const Amplitude h_quantum = inner(qa, qb);
    const double overlap = overlap_probability(qa, qb);

    // The square-root embedding must reproduce the fuzzy likelihood; a gap
    // means the library is inconsistent with itself.
    if (std::abs(h_fuzzy - h_quantum.real()) > 1e-10) {
        throw InternalError("likelihood bridge check failed: fuzzy " +
                            format_double(h_fuzzy) + " vs quantum " +
                            format_double(h_quantum.real()));
    }

    Report report;
    report.command = "match";
    report.inputs.field("file_a", args.file_a)
        .field("file_b", args.file_b)
        .field("invert", args.invert)
        .field("pad", args.pad);
    report.add("grid_side", pa.grid().side);
    report.add("likelihood_fuzzy", h_fuzzy);
    report.add("inner_re", h_quantum.real());
    report.add("inner_im", h_quantum.imag());
    report.add("overlap_probability", overlap);
    emit_report(report, args.json);
}

struct SampleArgs {
    std::string file;
    std::uint64_t count = 0;
    std::uint64_t seed = 0;
    bool invert = false, pad = false, json = false;
};

void run_sample(const SampleArgs& args) {
    if (args.count == 0) {
        throw DomainError("--count must be at least 1");
    }
    const StandardizedFuzzySet p = standardize(load_single(args.file, args.invert, args.pad));
    StochasticRegister reg(p, args.seed);

    const GridSpec grid = p.grid();
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(grid.cell_count()), 0);
    std::ostringstream stream;
    for (std::uint64_t t = 0; t < args.count; ++t) {
        const Dot d = reg.sample();
        ++counts[offset_of(d, grid)];
        if (!args.json) stream << d.i << " " << d.j << "\n";
    }
    if (!args.json) std::cout << stream.str();

    Report report;
    report.command = "sample";
    report.inputs.field("file", args.file)
        .field("invert", args.invert)
        .field("pad", args.pad)
        .field("count", args.count);
    report.seed = args.seed;
    report.add("grid_side", grid.side);
    report.add("count", args.count);

    if (args.json) {
        std::string array = "[";
        for (std::size_t k = 0; k < counts.size(); ++k) {
            const Dot d = dot_at_offset(k, grid);
            JsonObject cell;
            cell.field("i", d.i)
                .field("j", d.j)
                .field("count", counts[k])
                .field("freq", static_cast<double>(counts[k]) / static_cast<double>(args.count));
            if (k > 0) array += ',';
            array += cell.str();
        }
        array += "]";
        report.frequencies_json = array;
    } else {
        report.frequency_lines.push_back("# frequency: i j count freq");
        for (std::size_t k = 0; k < counts.size(); ++k) {
            const Dot d = dot_at_offset(k, grid);
            const double freq =
                static_cast<double>(counts[k]) / static_cast<double>(args.count);
            report.frequency_lines.push_back("# " + std::to_string(d.i) + " " +
                                             std::to_string(d.j) + " " +
                                             std::to_string(counts[k]) + " " +
                                             format_double(freq));
        }
    }
    emit_report(report, args.json);
}

struct EstimateArgs {
    std::string file_a, file_b;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    bool invert = false, pad = false, json = false;
};

void run_estimate(const EstimateArgs& args) {
    const auto [fa, fb] = load_pair(args.file_a, args.file_b, args.invert, args.pad);
    const QuSet qa = from_fuzzy_sqrt(standardize(fa));
    const QuSet qb = from_fuzzy_sqrt(standardize(fb));

    const double exact = overlap_probability(qa, qb);
    const OverlapEstimate estimate =
        estimate_overlap(qa, qb, args.trials, args.seed, args.workers);

    // z-score against the exact value. When the estimator lands exactly on a
    // boundary its own standard error is zero; fall back to the binomial
    // error under the exact probability so the report stays finite.
    double denominator = estimate.std_err_p;
    if (denominator == 0.0) {
        denominator = std::sqrt(exact * (1.0 - exact) / static_cast<double>(estimate.trials));
    }
    const double z = denominator > 0.0 ? (estimate.p_hat - exact) / denominator : 0.0;

    Report report;
    report.command = "estimate";
    report.inputs.field("file_a", args.file_a)
        .field("file_b", args.file_b)
        .field("invert", args.invert)
        .field("pad", args.pad)
        .field("trials", args.trials)
        .field("workers", static_cast<std::uint64_t>(args.workers));
    report.seed = args.seed;
    report.add("grid_side", qa.grid().side);
    report.add("overlap_exact", exact);
    report.add("p_hat", estimate.p_hat);
    report.add("h_abs_hat", estimate.h_abs_hat);
    report.add("std_err_p", estimate.std_err_p);
    report.add("z_score", z);
    report.add("successes", estimate.successes);
    emit_report(report, args.json);
}

struct FuzzyOpArgs {
    std::string op;
    std::vector<std::string> files;
    std::string norm = "product";
    std::string out;
    bool invert = false, pad = false, json = false;
};

void run_fuzzyop(const FuzzyOpArgs& args) {
    const FuzzyNorm norm = args.norm == "minmax" ? FuzzyNorm::MinMax : FuzzyNorm::Product;
    FuzzySet result = [&] {
        if (args.op == "not") {
            if (args.files.size() != 1) {
                throw DomainError("fuzzyop not takes exactly one image");
            }
            return fuzzy_not(load_single(args.files[0], args.invert, args.pad));
        }
        if (args.files.size() != 2) {
            throw DomainError("fuzzyop " + args.op + " takes exactly two images");
        }
        const auto [a, b] = load_pair(args.files[0], args.files[1], args.invert, args.pad);
        return args.op == "and" ? fuzzy_and(a, b, norm) : fuzzy_or(a, b, norm);
    }();

    write_pgm(args.out, fuzzy_to_image(result));

    Report report;
    report.command = "fuzzyop";
    report.inputs.field("op", args.op).field("file_a", args.files[0]);
    if (args.files.size() > 1) report.inputs.field("file_b", args.files[1]);
    report.inputs.field("norm", args.norm)
        .field("invert", args.invert)
        .field("pad", args.pad)
        .field("out", args.out);
    report.add("grid_side", result.grid().side);
    report.add("maxval", 255);
    report.output_path = args.out;
    emit_report(report, args.json);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fuzzy and quantum set calculations over PGM images"};
    app.require_subcommand(1);

    MatchArgs match_args;
    auto* match = app.add_subcommand(
        "match", "exact likelihood and quantum overlap of two images");
    match->add_option("file_a", match_args.file_a, "first PGM image")->required();
    match->add_option("file_b", match_args.file_b, "second PGM image")->required();
    match->add_flag("--invert", match_args.invert, "read black ink as high adequacy");
    match->add_flag("--pad", match_args.pad, "zero-pad to the smallest common square");
    match->add_flag("--json", match_args.json, "emit one JSON report object");

    SampleArgs sample_args;
    auto* sample = app.add_subcommand(
        "sample", "draw dots from the stochastic register of an image");
    sample->add_option("file", sample_args.file, "PGM image")->required();
    sample->add_option("--count", sample_args.count, "number of draws")->required();
    sample->add_option("--seed", sample_args.seed, "generator seed")->required();
    sample->add_flag("--invert", sample_args.invert, "read black ink as high adequacy");
    sample->add_flag("--pad", sample_args.pad, "zero-pad to a square");
    sample->add_flag("--json", sample_args.json, "emit one JSON report object");

    EstimateArgs estimate_args;
    auto* estimate = app.add_subcommand(
        "estimate", "Monte Carlo overlap via masked readout, with the exact value");
    estimate->add_option("file_a", estimate_args.file_a, "first PGM image")->required();
    estimate->add_option("file_b", estimate_args.file_b, "second PGM image")->required();
    estimate->add_option("--trials", estimate_args.trials, "number of prepare+mask cycles")
        ->required();
    estimate->add_option("--seed", estimate_args.seed, "generator seed")->required();
    estimate->add_option("--workers", estimate_args.workers,
                         "independent trial batches (seed + ordinal each)");
    estimate->add_flag("--invert", estimate_args.invert, "read black ink as high adequacy");
    estimate->add_flag("--pad", estimate_args.pad, "zero-pad to the smallest common square");
    estimate->add_flag("--json", estimate_args.json, "emit one JSON report object");

    FuzzyOpArgs fuzzyop_args;
    auto* fuzzyop = app.add_subcommand("fuzzyop", "apply a fuzzy connective to images");
    fuzzyop->add_option("op", fuzzyop_args.op, "one of: not, and, or")
        ->required()
        ->check(CLI::IsMember({"not", "and", "or"}));
    fuzzyop->add_option("files", fuzzyop_args.files, "one image for not, two for and/or")
        ->required()
        ->expected(1, 2);
    fuzzyop->add_option("--norm", fuzzyop_args.norm, "connective pair")
        ->check(CLI::IsMember({"product", "minmax"}));
    fuzzyop->add_option("--out", fuzzyop_args.out, "output PGM path")->required();
    fuzzyop->add_flag("--invert", fuzzyop_args.invert, "read black ink as high adequacy");
    fuzzyop->add_flag("--pad", fuzzyop_args.pad, "zero-pad to a common square");
    fuzzyop->add_flag("--json", fuzzyop_args.json, "emit one JSON report object");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    const auto started = std::chrono::steady_clock::now();
    int code = 0;
    try {
        if (match->parsed()) run_match(match_args);
        if (sample->parsed()) run_sample(sample_args);
        if (estimate->parsed()) run_estimate(estimate_args);
        if (fuzzyop->parsed()) run_fuzzyop(fuzzyop_args);
    } catch (const InternalError& e) {
        std::cerr << "internal-consistency error: " << e.what() << "\n";
        code = 4;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        code = 3;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        code = 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        code = 1;
    }
    const auto elapsed = std::chrono::duration<double, std::milli>(
        std::chrono::steady_clock::now() - started);
    std::cerr << "elapsed_ms = " << format_double(elapsed.count()) << "\n";
    return code;
}
