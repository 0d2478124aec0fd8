// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "micap/csv.hpp"
#include "micap/json_io.hpp"
#include "micap/matrix.hpp"
#include "micap/reference.hpp"

#ifndef MICAP_CLI_PATH
#error "MICAP_CLI_PATH must point at the command line binary"
#endif

namespace {

namespace fs = std::filesystem;

/// Runs the CLI with the given arguments, discarding its output, and
/// returns the process exit code.
int run_cli(const std::string& args) {
    const std::string command = std::string(MICAP_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(command.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::path("cli_out_" + name);
    fs::remove_all(dir);
    return dir;
}

std::vector<std::string> data_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        const std::string line = text.substr(start, end - start);
        if (!line.empty() && line[0] != '#') lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

double max_coefficient_distance(const std::vector<micap::cxd>& got,
                                const std::vector<micap::cxd>& want) {
    REQUIRE(got.size() == want.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i)
        worst = std::max(worst, std::abs(got[i] - want[i]));
    return worst;
}

} // namespace

TEST_CASE("split subcommand writes the published coefficients") {
    const fs::path dir = fresh_dir("split");
    REQUIRE(run_cli("split --out " + dir.string()) == 0);

    const fs::path path = dir / "split.json";
    REQUIRE(fs::exists(path));
    const nlohmann::json doc =
        micap::parse_json_text(micap::read_text_file(path.string()), path.string());

    CHECK(doc.at("n").get<std::size_t>() == 4);
    CHECK(doc.at("reconstruction_residual_max_abs").get<double>() <= 1e-12);

    const micap::PublishedReference& ref = micap::published_reference();
    const std::vector<micap::cxd> a = micap::complex_vector_from_json(doc.at("a"));
    const std::vector<micap::cxd> b = micap::complex_vector_from_json(doc.at("b"));
    CHECK(max_coefficient_distance(a, ref.split_a) <= 1e-4);
    CHECK(max_coefficient_distance(b, ref.split_b) <= 1e-4);

    const micap::ComplexMatrix a_dense = micap::matrix_from_json(doc.at("a_dense"));
    CHECK(micap::max_abs_diff(a_dense, ref.split_a_dense) <= 1e-4);
}

TEST_CASE("icc-table subcommand tabulates every grid row") {
    const fs::path dir = fresh_dir("icc");
    REQUIRE(run_cli("icc-table --out " + dir.string()) == 0);

    const fs::path table = dir / "table2.csv";
    REQUIRE(fs::exists(table));
    const std::vector<std::string> rows = data_lines(micap::read_text_file(table.string()));
    REQUIRE(rows.size() == 14);
    CHECK(rows[0] == "alpha,sigma,rho_as_printed,rho_cscs,dist_identity,converged");
    CHECK(rows[1].substr(0, 2) == "5,");
    CHECK(rows[13].substr(0, 6) == "60000,");

    REQUIRE(fs::exists(dir / "table2_diff.csv"));
}

TEST_CASE("icc-table honors a custom alpha grid and eps-conv") {
    const fs::path dir = fresh_dir("icc_custom");
    REQUIRE(run_cli("icc-table --alpha 5,60000 --eps-conv 1e-3 --out " + dir.string()) == 0);

    const std::vector<std::string> rows =
        data_lines(micap::read_text_file((dir / "table2.csv").string()));
    REQUIRE(rows.size() == 3);
    CHECK(rows[1].substr(0, 2) == "5,");
    CHECK(rows[1].find(",false") != std::string::npos);
    CHECK(rows[2].substr(0, 6) == "60000,");
    CHECK(rows[2].find(",true") != std::string::npos);
}

TEST_CASE("capacity subcommand writes CDFs, the sweep, gains, and figures") {
    const fs::path dir = fresh_dir("capacity");
    REQUIRE(run_cli("capacity --trials 300 --cdf-trials 150 --seed 11 --out " + dir.string()) == 0);

    for (const char* name :
         {"cdf_iid.csv", "cdf_correlated.csv", "cdf_icc_alpha5.csv", "cdf_icc_alpha10.csv",
          "cdf_icc_alpha20.csv", "cdf_icc_alpha30.csv", "snr_sweep.csv", "gains.csv",
          "fig1_cdf.svg", "fig2_mean_vs_snr.svg"}) {
        CAPTURE(name);
        CHECK(fs::exists(dir / name));
    }

    const std::vector<std::string> cdf =
        data_lines(micap::read_text_file((dir / "cdf_iid.csv").string()));
    REQUIRE(cdf.size() == 151);
    CHECK(cdf[0] == "capacity,probability");

    const std::vector<std::string> sweep =
        data_lines(micap::read_text_file((dir / "snr_sweep.csv").string()));
    CHECK(sweep[0] == "snr_db,mode,alpha,mean,stderr,trials,seed");
    // 7 grid SNRs times 6 modes.
    CHECK(sweep.size() == 43);
    CHECK(sweep[1].find(",iid,,") != std::string::npos);

    const std::vector<std::string> gains =
        data_lines(micap::read_text_file((dir / "gains.csv").string()));
    CHECK(gains[0] == "variant,alpha,gain,gain_stderr,gain_snr_avg,published,delta");
    CHECK(gains.size() == 9);
    CHECK(gains[1].substr(0, 11) == "as-printed,");
    CHECK(gains[5].substr(0, 5) == "cscs,");
}

TEST_CASE("csv-only format suppresses the figures") {
    const fs::path dir = fresh_dir("csv_only");
    REQUIRE(run_cli("capacity --trials 50 --cdf-trials 50 --format csv --out " + dir.string()) ==
            0);
    CHECK(fs::exists(dir / "snr_sweep.csv"));
    CHECK_FALSE(fs::exists(dir / "fig1_cdf.svg"));
    CHECK_FALSE(fs::exists(dir / "fig2_mean_vs_snr.svg"));
}

TEST_CASE("reproduce-all is deterministic byte for byte") {
    const fs::path dir1 = fresh_dir("repro1");
    const fs::path dir2 = fresh_dir("repro2");
    const std::string flags = "reproduce-all --trials 200 --cdf-trials 100 --seed 7 --out ";
    REQUIRE(run_cli(flags + dir1.string()) == 0);
    REQUIRE(run_cli(flags + dir2.string()) == 0);

    std::size_t compared = 0;
    for (const auto& entry : fs::directory_iterator(dir1)) {
        if (entry.path().extension() != ".csv" && entry.path().extension() != ".json") continue;
        const fs::path other = dir2 / entry.path().filename();
        CAPTURE(entry.path().string());
        REQUIRE(fs::exists(other));
        CHECK(micap::read_text_file(entry.path().string()) ==
              micap::read_text_file(other.string()));
        ++compared;
    }
    CHECK(compared >= 10);
}

TEST_CASE("config file overrides feed the run") {
    const fs::path dir = fresh_dir("config");
    const fs::path config_path = "cli_config_small.json";
    micap::write_text_file(config_path.string(),
                           "{\n"
                           "  \"channel\": {\"n_t\": 4, \"n_r\": 4, \"snr_db\": 10.0,"
                           " \"trials\": 80, \"seed\": 3},\n"
                           "  \"capacity\": {\"alpha_grid\": [5.0],"
                           " \"snr_grid_db\": [0.0, 10.0], \"cdf_trials\": 40}\n"
                           "}\n");
    REQUIRE(run_cli("capacity --config " + config_path.string() + " --out " + dir.string()) == 0);

    const std::vector<std::string> sweep =
        data_lines(micap::read_text_file((dir / "snr_sweep.csv").string()));
    // 2 grid SNRs times 3 modes plus the column header.
    CHECK(sweep.size() == 7);
    CHECK(sweep[1].find(",80,3") != std::string::npos);
}

TEST_CASE("invalid invocations exit with the validation code") {
    CHECK(run_cli("capacity --alpha 0 --trials 4") == 2);
    CHECK(run_cli("icc-table --variant bogus") == 2);
    CHECK(run_cli("split --config does_not_exist.json") == 2);
    CHECK(run_cli("frobnicate") == 2);

    const fs::path bad_config = "cli_config_bad.json";
    micap::write_text_file(bad_config.string(),
                           "{\"covariance\": {\"dense\": ["
                           "[[1,0],[2,0]],"
                           "[[3,0],[9,0]]"
                           "]}}");
    CHECK(run_cli("split --config " + bad_config.string()) == 2);

    CHECK(run_cli("--help") == 0);
    CHECK(run_cli("split --help") == 0);
}
