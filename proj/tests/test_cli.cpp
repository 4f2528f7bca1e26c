#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

#include "quset/pgm.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

std::string cli_binary() {
    if (const char* env = std::getenv("QUSET_CLI")) return env;
    for (const char* guess : {"./build/tools/quset", "../tools/quset", "tools/quset"}) {
        if (fs::exists(guess)) return guess;
    }
    FAIL("set QUSET_CLI to the quset binary path");
    return {};
}

CliResult run_cli(const std::string& args) {
    const std::string command = cli_binary() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        result.out.append(buffer, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

// Fixture images shared by the CLI tests, written once per process.
struct Fixtures {
    fs::path dir;
    std::string delta, half, half_p5, disjoint, uniform, black, rect, color;

    Fixtures() {
        dir = fs::temp_directory_path() / "quset_cli_fixtures";
        fs::create_directories(dir);
        auto path = [&](const char* name) { return (dir / name).string(); };

        delta = path("delta.pgm");
        quset::write_pgm(delta, {2, 2, 255, {255, 0, 0, 0}});
        half = path("half.pgm");
        quset::write_pgm(half, {2, 2, 255, {255, 255, 0, 0}});
        disjoint = path("disjoint.pgm");
        quset::write_pgm(disjoint, {2, 2, 255, {0, 0, 255, 255}});
        uniform = path("uniform.pgm");
        quset::write_pgm(uniform, {2, 2, 255, {255, 255, 255, 255}});
        black = path("black.pgm");
        quset::write_pgm(black, {2, 2, 255, {0, 0, 0, 0}});
        rect = path("rect.pgm");
        quset::write_pgm(rect, {3, 2, 255, {255, 0, 0, 0, 0, 0}});

        half_p5 = path("half_p5.pgm");
        std::ofstream p5(half_p5, std::ios::binary);
        p5 << "P5\n2 2\n255\n";
        p5 << static_cast<char>(255) << static_cast<char>(255) << '\0' << '\0';
        p5.close();

        color = path("color.ppm");
        std::ofstream p3(color, std::ios::binary);
        p3 << "P3\n1 1\n255\n1 2 3\n";
    }
};

const Fixtures& fixtures() {
    static Fixtures f;
    return f;
}

double result_of(const std::string& json_text, const std::string& name) {
    return nlohmann::json::parse(json_text).at("results").at(name).get<double>();
}

} // namespace

TEST_CASE("match reports the likelihood ladder") {
    const auto& f = fixtures();

    SUBCASE("identical images have unit likelihood") {
        const CliResult r = run_cli("match " + f.delta + " " + f.delta + " --json");
        CHECK(r.exit_code == 0);
        CHECK(result_of(r.out, "likelihood_fuzzy") == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(result_of(r.out, "overlap_probability") == doctest::Approx(1.0).epsilon(1e-9));
    }
    SUBCASE("disjoint ink gives zero") {
        const CliResult r = run_cli("match " + f.delta + " " + f.disjoint + " --json");
        CHECK(r.exit_code == 0);
        CHECK(result_of(r.out, "likelihood_fuzzy") == 0.0);
    }
    SUBCASE("the half-overlap fixture hits 1/sqrt(2)") {
        const CliResult r = run_cli("match " + f.delta + " " + f.half + " --json");
        CHECK(r.exit_code == 0);
        CHECK(result_of(r.out, "likelihood_fuzzy") ==
              doctest::Approx(0.7071067811865476).epsilon(1e-10));
        CHECK(result_of(r.out, "inner_re") ==
              doctest::Approx(0.7071067811865476).epsilon(1e-10));
        CHECK(result_of(r.out, "overlap_probability") == doctest::Approx(0.5).epsilon(1e-10));
    }
    SUBCASE("P2 and P5 twins give identical text reports") {
        const CliResult p2 = run_cli("match " + f.delta + " " + f.half);
        const CliResult p5 = run_cli("match " + f.delta + " " + f.half_p5);
        CHECK(p2.exit_code == 0);
        CHECK(p2.out == p5.out);
    }
}

TEST_CASE("sample emits a deterministic stream and summary") {
    const auto& f = fixtures();

    SUBCASE("delta image repeats one dot") {
        const CliResult r = run_cli("sample " + f.delta + " --count 5 --seed 1");
        CHECK(r.exit_code == 0);
        CHECK(r.out.substr(0, 20) == "1 1\n1 1\n1 1\n1 1\n1 1\n");
    }
    SUBCASE("same seed, same bytes") {
        const std::string args = "sample " + f.half + " --count 1000 --seed 42";
        const CliResult first = run_cli(args);
        const CliResult second = run_cli(args);
        CHECK(first.exit_code == 0);
        CHECK(first.out == second.out);
        const CliResult other = run_cli("sample " + f.half + " --count 1000 --seed 43");
        CHECK(first.out != other.out);
    }
    SUBCASE("uniform frequencies stay within 5 sigma, JSON shape") {
        const CliResult r =
            run_cli("sample " + f.uniform + " --count 100000 --seed 7 --json");
        CHECK(r.exit_code == 0);
        const auto doc = nlohmann::json::parse(r.out);
        CHECK(doc.at("command") == "sample");
        CHECK(doc.at("seed") == 7);
        CHECK(doc.at("frequencies").size() == 4);
        for (const auto& cell : doc.at("frequencies")) {
            CHECK(std::abs(cell.at("freq").get<double>() - 0.25) <= 0.006846531968814577);
        }
    }
    SUBCASE("zero count and empty images are domain errors") {
        CHECK(run_cli("sample " + f.delta + " --count 0 --seed 1").exit_code == 2);
        CHECK(run_cli("sample " + f.black + " --count 10 --seed 1").exit_code == 2);
    }
}

TEST_CASE("estimate compares Monte Carlo to the exact overlap") {
    const auto& f = fixtures();

    SUBCASE("identical images give p_hat exactly 1") {
        const CliResult r =
            run_cli("estimate " + f.half + " " + f.half + " --trials 200 --seed 3 --json");
        CHECK(r.exit_code == 0);
        CHECK(result_of(r.out, "p_hat") == 1.0);
        CHECK(result_of(r.out, "overlap_exact") == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(result_of(r.out, "z_score") == 0.0);
    }
    SUBCASE("disjoint images give p_hat exactly 0") {
        const CliResult r = run_cli("estimate " + f.delta + " " + f.disjoint +
                                    " --trials 200 --seed 3 --json");
        CHECK(r.exit_code == 0);
        CHECK(result_of(r.out, "p_hat") == 0.0);
    }
    SUBCASE("half overlap is within 5 standard errors") {
        const CliResult r = run_cli("estimate " + f.delta + " " + f.half +
                                    " --trials 10000 --seed 11 --json");
        CHECK(r.exit_code == 0);
        CHECK(result_of(r.out, "overlap_exact") == doctest::Approx(0.5).epsilon(1e-10));
        CHECK(std::abs(result_of(r.out, "z_score")) <= 5.0);
    }
    SUBCASE("worker fan-out stays deterministic") {
        const std::string args = "estimate " + f.delta + " " + f.half +
                                 " --trials 9001 --seed 5 --workers 3 --json";
        const CliResult first = run_cli(args);
        const CliResult second = run_cli(args);
        CHECK(first.exit_code == 0);
        CHECK(first.out == second.out);
    }
}

TEST_CASE("fuzzyop writes PGM results") {
    const auto& f = fixtures();
    const std::string out1 = (f.dir / "not1.pgm").string();
    const std::string out2 = (f.dir / "not2.pgm").string();

    SUBCASE("double negation restores the image bytes") {
        CHECK(run_cli("fuzzyop not " + f.half + " --out " + out1).exit_code == 0);
        CHECK(run_cli("fuzzyop not " + out1 + " --out " + out2).exit_code == 0);
        std::ifstream original(f.half, std::ios::binary);
        std::ifstream restored(out2, std::ios::binary);
        const std::string original_bytes((std::istreambuf_iterator<char>(original)), {});
        const std::string restored_bytes((std::istreambuf_iterator<char>(restored)), {});
        CHECK(original_bytes == restored_bytes);
    }
    SUBCASE("and with an all-ones image is the identity") {
        const std::string out = (f.dir / "and_ones.pgm").string();
        CHECK(run_cli("fuzzyop and " + f.half + " " + f.uniform + " --out " + out).exit_code ==
              0);
        const quset::ImageDocument img = quset::read_pgm(out);
        CHECK(img.pixels == std::vector<int>{255, 255, 0, 0});
    }
    SUBCASE("or with an all-zeros image is the identity") {
        const std::string out = (f.dir / "or_zeros.pgm").string();
        CHECK(run_cli("fuzzyop or " + f.black + " " + f.half + " --out " + out).exit_code == 0);
        const quset::ImageDocument img = quset::read_pgm(out);
        CHECK(img.pixels == std::vector<int>{255, 255, 0, 0});
    }
    SUBCASE("minmax norm is selectable") {
        const std::string out = (f.dir / "and_minmax.pgm").string();
        CHECK(run_cli("fuzzyop and " + f.delta + " " + f.half + " --norm minmax --out " + out)
                  .exit_code == 0);
        CHECK(quset::read_pgm(out).pixels == std::vector<int>{255, 0, 0, 0});
    }
}

TEST_CASE("exit codes follow the error taxonomy") {
    const auto& f = fixtures();

    // 2: domain errors (size mismatch without --pad, degenerate mass)
    CHECK(run_cli("match " + f.delta + " " + f.rect).exit_code == 2);
    CHECK(run_cli("match " + f.black + " " + f.black).exit_code == 2);

    // --pad repairs the mismatch
    const CliResult padded = run_cli("match " + f.delta + " " + f.rect + " --pad --json");
    CHECK(padded.exit_code == 0);
    CHECK(nlohmann::json::parse(padded.out).at("results").at("grid_side") == 3);

    // 3: parse errors (unsupported format, missing file)
    CHECK(run_cli("match " + f.delta + " " + f.color).exit_code == 3);
    CHECK(run_cli("match " + f.delta + " /nonexistent.pgm").exit_code == 3);
}
