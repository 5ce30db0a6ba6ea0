#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "test_support.hpp"

namespace {

struct CliRun {
    int exit_code;
    std::string output;
};

CliRun run_cli(const std::string& args) {
    const std::string out_path =
        (std::filesystem::temp_directory_path() / "entdj_cli_out.txt").string();
    const std::string command =
        std::string(ENTDJ_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    const int status = std::system(command.c_str());
    CliRun result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    result.output = buffer.str();
    return result;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

TEST_CASE("dj subcommand reports class and query count", "[cli]") {
    const CliRun constant = run_cli("dj 0000");
    REQUIRE(constant.exit_code == 0);
    REQUIRE(constant.output.find("Constant, 1 query") != std::string::npos);

    const CliRun balanced = run_cli("dj 0110");
    REQUIRE(balanced.exit_code == 0);
    REQUIRE(balanced.output.find("Balanced, 1 query") != std::string::npos);
}

TEST_CASE("dj subcommand maps failures to exit codes", "[cli]") {
    const CliRun neither = run_cli("dj 0001");
    REQUIRE(neither.exit_code == 3);
    REQUIRE(neither.output.find("promise violation") != std::string::npos);

    REQUIRE(run_cli("dj 011").exit_code == 2);
    REQUIRE(run_cli("dj 01x0").exit_code == 2);
    REQUIRE(run_cli("dj").exit_code == 2);
    REQUIRE(run_cli("frobnicate 01").exit_code == 2);
}

TEST_CASE("gen subcommand reports both verdicts and the query advantage", "[cli]") {
    const CliRun constant_pair = run_cli("gen 00 00");
    REQUIRE(constant_pair.exit_code == 0);
    REQUIRE(constant_pair.output.find("Constant, Equal; quantum 2 vs classical 3 queries") !=
            std::string::npos);

    const CliRun unequal = run_cli("gen 01 10");
    REQUIRE(unequal.exit_code == 0);
    REQUIRE(unequal.output.find("Balanced, Unequal") != std::string::npos);

    const CliRun triple = run_cli("gen 01 01 01");
    REQUIRE(triple.exit_code == 0);
    REQUIRE(triple.output.find("Balanced, Equal; quantum 3 vs classical 4 queries") !=
            std::string::npos);

    const CliRun solo = run_cli("gen 01");
    REQUIRE(solo.exit_code == 0);
    REQUIRE(solo.output.find("Balanced; quantum 1 vs classical 2 queries") != std::string::npos);

    const CliRun mixed = run_cli("gen 00 01");
    REQUIRE(mixed.exit_code == 3);

    REQUIRE(run_cli("gen 0110 01").exit_code == 2);
}

TEST_CASE("case subcommand writes chart and summary files", "[cli]") {
    const std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "entdj_case_out";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);

    const CliRun run =
        run_cli("case 3 --noise off --shots 512 --runs 2 --seed 7 --out " + dir.string());
    REQUIRE(run.exit_code == 0);
    REQUIRE(run.output.find("mean fidelity: 1.000000") != std::string::npos);

    const std::string chart = slurp(dir / "case3_chart.csv");
    REQUIRE(chart.rfind("outcome,theory,exp_mean,exp_std\n", 0) == 0);
    REQUIRE(chart.find("000,1.000000,1.000000,0.000000") != std::string::npos);

    const std::string summary = slurp(dir / "case3_summary.txt");
    REQUIRE(summary.find("case 3") != std::string::npos);
    REQUIRE(summary.find("verdict: Constant, Equal") != std::string::npos);
    REQUIRE(summary.find("fidelity of mean distribution: 1.000000") != std::string::npos);
}

TEST_CASE("case subcommand output is byte-identical for a fixed seed", "[cli]") {
    const std::filesystem::path dir_a =
        std::filesystem::temp_directory_path() / "entdj_case_a";
    const std::filesystem::path dir_b =
        std::filesystem::temp_directory_path() / "entdj_case_b";
    std::filesystem::remove_all(dir_a);
    std::filesystem::remove_all(dir_b);
    std::filesystem::create_directories(dir_a);
    std::filesystem::create_directories(dir_b);

    const std::string flags = "case 2 --shots 1024 --runs 3 --seed 4242 --out ";
    REQUIRE(run_cli(flags + dir_a.string()).exit_code == 0);
    REQUIRE(run_cli(flags + dir_b.string()).exit_code == 0);

    REQUIRE(slurp(dir_a / "case2_chart.csv") == slurp(dir_b / "case2_chart.csv"));
    const std::string summary_a = slurp(dir_a / "case2_summary.txt");
    const std::string summary_b = slurp(dir_b / "case2_summary.txt");
    REQUIRE(summary_a == summary_b);

    // a different seed must actually change the sampled files
    const std::filesystem::path dir_c =
        std::filesystem::temp_directory_path() / "entdj_case_c";
    std::filesystem::remove_all(dir_c);
    std::filesystem::create_directories(dir_c);
    REQUIRE(run_cli("case 2 --shots 1024 --runs 3 --seed 4243 --out " + dir_c.string())
                .exit_code == 0);
    REQUIRE(slurp(dir_a / "case2_chart.csv") != slurp(dir_c / "case2_chart.csv"));
}

TEST_CASE("case subcommand maps failures to exit codes", "[cli]") {
    REQUIRE(run_cli("case 5").exit_code == 2);
    REQUIRE(run_cli("case 0").exit_code == 2);
    REQUIRE(run_cli("case").exit_code == 2);
    REQUIRE(run_cli("case 1 --shots 0").exit_code == 2);
    REQUIRE(run_cli("case 1 --noise ./no_such_noise_file.conf").exit_code == 4);

    std::ofstream bad("./cli_bad_noise.conf", std::ios::binary);
    bad << "qubit 0 gate_error=2.0 readout_error=0.1\n";
    bad.close();
    REQUIRE(run_cli("case 1 --shots 16 --runs 1 --noise ./cli_bad_noise.conf").exit_code == 4);
}

TEST_CASE("case subcommand accepts a noise file argument", "[cli]") {
    const std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "entdj_case_file_noise";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);

    const std::string noise_path = std::string(ENTDJ_DATA_DIR) + "/ibmqx4_noise.conf";
    const CliRun run = run_cli("case 4 --shots 512 --runs 2 --seed 11 --noise " + noise_path +
                               " --out " + dir.string());
    REQUIRE(run.exit_code == 0);
    REQUIRE(std::filesystem::exists(dir / "case4_chart.csv"));
    REQUIRE(std::filesystem::exists(dir / "case4_summary.txt"));
}

TEST_CASE("help exits cleanly", "[cli]") {
    REQUIRE(run_cli("--help").exit_code == 0);
    REQUIRE(run_cli("dj --help").exit_code == 0);
}
