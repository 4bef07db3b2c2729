#include <catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include <sys/wait.h>

#ifndef ENTVOL_CLI_PATH
#error "ENTVOL_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(ENTVOL_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult res;
    std::array<char, 4096> buf{};
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
        res.output.append(buf.data(), got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

double value_after(const std::string& text, const std::string& key) {
    const auto pos = text.find(key + " = ");
    REQUIRE(pos != std::string::npos);
    return std::stod(text.substr(pos + key.size() + 3));
}

}  // namespace

TEST_CASE("cli entropy") {
    const auto r = run_cli("entropy LR");
    CHECK(r.exit_code == 0);
    CHECK_THAT(value_after(r.output, "entropy"), Catch::Matchers::WithinAbs(0.9624236501192069, 1e-12));
    CHECK_THAT(value_after(r.output, "dilatation"), Catch::Matchers::WithinAbs(2.618033988749895, 1e-12));
}

TEST_CASE("cli volume") {
    const auto r = run_cli("volume LR");
    CHECK(r.exit_code == 0);
    CHECK_THAT(value_after(r.output, "volume"), Catch::Matchers::WithinAbs(2.029883212819307, 1e-9));
    CHECK(value_after(r.output, "residual") < 1e-9);
    CHECK_THAT(value_after(r.output, "min_angle"),
               Catch::Matchers::WithinAbs(std::numbers::pi / 3.0, 1e-8));
}

TEST_CASE("cli ratio") {
    const auto r = run_cli("ratio LR");
    CHECK(r.exit_code == 0);
    CHECK_THAT(value_after(r.output, "ratio"), Catch::Matchers::WithinAbs(0.474127, 1e-5));
}

TEST_CASE("cli constants") {
    const auto r = run_cli("constants");
    CHECK(r.exit_code == 0);
    CHECK_THAT(value_after(r.output, "v3"), Catch::Matchers::WithinAbs(1.0149416064096536, 1e-12));
    CHECK_THAT(value_after(r.output, "v8"), Catch::Matchers::WithinAbs(3.663862376708876, 1e-12));
    CHECK_THAT(value_after(r.output, "thm52_bound"), Catch::Matchers::WithinAbs(0.13134, 5e-5));
}

TEST_CASE("cli rejects invalid words with exit code 2") {
    const auto a = run_cli("entropy LL");
    CHECK(a.exit_code == 2);
    CHECK(a.output.find("pseudo-Anosov") != std::string::npos);
    CHECK(run_cli("entropy LXR").exit_code == 2);
    CHECK(run_cli("entropy").exit_code == 2);
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("cli survey smoke") {
    const std::string out = "cli_survey.csv";
    const auto r = run_cli("survey --min-len 2 --max-len 4 --out " + out);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("7 classes written") != std::string::npos);
    std::ifstream in(out);
    REQUIRE(in);
    std::string header;
    std::getline(in, header);
    CHECK(header ==
          "word,length,block_length,trace,dilatation,entropy,volume,ratio,min_angle,residual,"
          "iterations");
    int rows = 0;
    std::string line;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 7);
    in.close();
    std::remove(out.c_str());

    const std::string scat = "cli_scatter.txt";
    const auto s = run_cli("survey --min-len 2 --max-len 4 --format scatter --jobs 2 --out " + scat);
    CHECK(s.exit_code == 0);
    std::ifstream sin(scat);
    REQUIRE(sin);
    rows = 0;
    while (std::getline(sin, line)) ++rows;
    CHECK(rows == 7);
    sin.close();
    std::remove(scat.c_str());

    CHECK(run_cli("survey --min-len 4 --max-len 3 --out x.csv").exit_code == 2);
    CHECK(run_cli("survey --min-len 2 --max-len 4 --format bogus --out x.csv").exit_code == 2);
}

TEST_CASE("cli scan-block1 smoke") {
    const auto r = run_cli("scan-block1 --max-mn 6");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("minimum ratio") != std::string::npos);
    CHECK(r.output.find("at (m,n) = (1,1)") != std::string::npos);
}

TEST_CASE("cli penner smoke") {
    const std::string sys = "cli_penner_sys.txt";
    {
        std::ofstream out(sys);
        out << "1 1\n1\n";
    }
    const auto r = run_cli("penner --system " + sys + " --word \"A1 B1\"");
    CHECK(r.exit_code == 0);
    CHECK_THAT(value_after(r.output, "dilatation"),
               Catch::Matchers::WithinAbs((3.0 + std::sqrt(5.0)) / 2.0, 1e-10));

    const auto fam = run_cli("penner --system " + sys + " --word \"A1 B1\" --family-k 2");
    CHECK(fam.exit_code == 0);
    CHECK(fam.output.find("k=1") != std::string::npos);
    CHECK(fam.output.find("k=2") != std::string::npos);

    const auto bad = run_cli("penner --system " + sys + " --word \"A1 A1\"");
    CHECK(bad.exit_code == 2);
    CHECK(run_cli("penner --system no_such_file.txt --word \"A1 B1\"").exit_code == 2);
    std::remove(sys.c_str());
}

TEST_CASE("cli reports solver failure with exit code 3") {
    const auto r = run_cli("--max-iter 1 volume LLRRLR");
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("solver failure") != std::string::npos);
}

TEST_CASE("cli help exits zero") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("volume --help").exit_code == 0);
}
