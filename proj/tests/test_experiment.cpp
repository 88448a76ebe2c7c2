#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "attinit/cli.hpp"
#include "attinit/config_io.hpp"
#include "attinit/csv.hpp"
#include "attinit/errors.hpp"
#include "attinit/experiment.hpp"

using namespace attinit;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

ExperimentSpec tiny_smoke_spec(const std::string& out_dir) {
    ExperimentSpec spec = find_built_in("smoke");
    spec.scenario.duration_s = 120.0;
    spec.scenario.init_phase_s = 60.0;
    spec.outputs = out_dir;
    return spec;
}

std::filesystem::path temp_dir(const std::string& tag) {
    const auto dir = std::filesystem::temp_directory_path() / ("attinit_test_" + tag);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("built-in specs round-trip through the config format unchanged") {
    for (const ExperimentSpec& spec : built_in_specs()) {
        const ExperimentSpec back = parse_spec(serialize_spec(spec));
        CHECK(back == spec);
        CHECK(back.name == spec.name);
    }
}

TEST_CASE("config parser reports unknown keys and bad values by field name") {
    try {
        parse_spec("name = x\nmethods = Optimal\n[scenario]\nwavelength = 3\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.field() == "wavelength");
    }
    try {
        parse_spec("name = x\nmethods = Optimal\n[scenario]\nmc_runs = many\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.field() == "mc_runs");
    }
    CHECK_THROWS_AS(parse_spec("methods = Telepathy\n"), ConfigError);
    CHECK_THROWS_AS(parse_spec("[mystery]\n"), ConfigError);
}

TEST_CASE("list_cases documents the published settings") {
    const std::string listing = list_cases();
    CHECK(listing.find("case1") != std::string::npos);
    CHECK(listing.find("bias 0.1 deg/h") != std::string::npos);
    CHECK(listing.find("[10,10,30]") != std::string::npos);
    CHECK(listing.find("case2") != std::string::npos);
    CHECK(listing.find("[30,30,60]") != std::string::npos);
    CHECK(listing.find("(25 deg)^2") != std::string::npos);
    CHECK(listing.find("case3") != std::string::npos);
    CHECK(listing.find("bias 10 deg/h") != std::string::npos);
    CHECK(listing.find("(10 deg/h)^2") != std::string::npos);
    CHECK(listing.find("case4") != std::string::npos);
    CHECK(listing.find("bias_sweep") != std::string::npos);
    CHECK(listing.find("smoke") != std::string::npos);
}

TEST_CASE("run_case writes schema-conformant, deterministic outputs") {
    const auto dir = temp_dir("run_case");
    const ExperimentSpec spec = tiny_smoke_spec((dir / "a").string());
    const CaseOutcome outcome = run_case(spec);
    CHECK(outcome.failed_runs == 0);

    const std::string curves = read_file(outcome.curves_path);
    CHECK(curves.rfind("method,run,t_s,err_deg\n", 0) == 0);
    CHECK(curves.find("\r") == std::string::npos);
    CHECK(curves.find("Optimal,0,1,") != std::string::npos);
    CHECK(curves.find("MekfOnly,0,120,") != std::string::npos);

    // one row per method x run x epoch plus the header
    const long expected_rows = 3L * 1L * 120L + 1L;
    long got_rows = std::count(curves.begin(), curves.end(), '\n');
    CHECK(got_rows == expected_rows);

    const std::string summary = read_file(outcome.summary_path);
    CHECK(summary.rfind("method,t_s,mean_err_deg,p95_err_deg,runs\n", 0) == 0);

    // zero-noise smoke: the Optimal error column vanishes beyond epoch 2
    const MonteCarloResult& opt = outcome.results.at(Method::Optimal);
    for (std::size_t e = 2; e < opt.t_s.size(); ++e) {
        CHECK(opt.runs[0].err_deg[e] < 1e-6);
    }

    // byte-identical rerun
    ExperimentSpec again = spec;
    again.outputs = (dir / "b").string();
    const CaseOutcome second = run_case(again);
    CHECK(read_file(second.curves_path) == curves);
    CHECK(read_file(second.summary_path) == summary);

    CHECK(std::filesystem::exists(outcome.plot_path));
}

TEST_CASE("summary means match a recomputation from the curves file") {
    const auto dir = temp_dir("summary");
    ExperimentSpec spec = tiny_smoke_spec(dir.string());
    spec.scenario.mc_runs = 3;
    spec.scenario.sigma_star_rad = 1e-5;  // make the runs differ
    spec.scenario.r_scalar_rad2 = 1e-10;
    spec.methods = {Method::Optimal};
    const CaseOutcome outcome = run_case(spec);

    // parse the curves back and recompute the per-epoch mean
    std::ifstream in(outcome.curves_path);
    std::string line;
    std::getline(in, line);  // header
    std::map<double, std::pair<double, int>> sums;
    while (std::getline(in, line)) {
        std::istringstream is(line);
        std::string method, run, t, err;
        std::getline(is, method, ',');
        std::getline(is, run, ',');
        std::getline(is, t, ',');
        std::getline(is, err, ',');
        sums[std::stod(t)].first += std::stod(err);
        sums[std::stod(t)].second += 1;
    }

    std::ifstream sin(outcome.summary_path);
    std::getline(sin, line);  // header
    while (std::getline(sin, line)) {
        std::istringstream is(line);
        std::string method, t, mean, p95, runs;
        std::getline(is, method, ',');
        std::getline(is, t, ',');
        std::getline(is, mean, ',');
        std::getline(is, p95, ',');
        std::getline(is, runs, ',');
        const auto& cell = sums.at(std::stod(t));
        CHECK(std::stoi(runs) == cell.second);
        CHECK(std::abs(std::stod(mean) - cell.first / cell.second) < 1e-12);
        CHECK(std::stod(mean) <= std::stod(p95) + 1e-15);
    }
}

TEST_CASE("bias sweep orders errors by bias level") {
    const auto dir = temp_dir("sweep");
    ExperimentSpec base = find_built_in("bias_sweep");
    base.outputs = dir.string();
    base.scenario.duration_s = 300.0;
    base.scenario.mc_runs = 3;
    const SweepOutcome outcome = run_bias_sweep(base, {0.1, 10.0});
    CHECK(outcome.failed_runs == 0);

    const std::string sweep = read_file(outcome.sweep_path);
    CHECK(sweep.rfind("bias_degph,run,t_s,err_deg\n", 0) == 0);
    CHECK(sweep.find("\n0.1,0,1,") != std::string::npos);
    CHECK(sweep.find("\n10,2,300,") != std::string::npos);

    const int last = static_cast<int>(outcome.results.at(0.1).t_s.size()) - 1;
    CHECK(outcome.results.at(0.1).mean_at(last) < outcome.results.at(10.0).mean_at(last));

    CHECK_THROWS_AS(run_bias_sweep(base, {}), ConfigError);
    CHECK_THROWS_AS(run_bias_sweep(base, {-1.0}), ConfigError);
}

TEST_CASE("spec validation rejects empty names and method lists") {
    ExperimentSpec spec = find_built_in("smoke");
    spec.name.clear();
    CHECK_THROWS_AS(spec.validate(), ConfigError);
    spec = find_built_in("smoke");
    spec.methods.clear();
    CHECK_THROWS_AS(spec.validate(), ConfigError);
    CHECK_THROWS_AS(find_built_in("case99"), ConfigError);
}

TEST_CASE("full case1 batch writes one row per method, run and epoch") {
    const auto dir = temp_dir("case1_full");
    ExperimentSpec spec = find_built_in("case1");
    spec.outputs = dir.string();
    const CaseOutcome outcome = run_case(spec);
    CHECK(outcome.failed_runs == 0);
    CHECK(std::filesystem::exists(outcome.curves_path));
    CHECK(std::filesystem::exists(outcome.summary_path));

    const std::string curves = read_file(outcome.curves_path);
    const long rows = std::count(curves.begin(), curves.end(), '\n');
    CHECK(rows == 3L * 50L * 5400L + 1L);
    for (const char* m : {"Optimal,", "OptimalPlusMekf,", "MekfOnly,"}) {
        CHECK(curves.find(m) != std::string::npos);
    }
    CHECK(curves.find(",49,5400,") != std::string::npos);  // last run, last epoch
    std::filesystem::remove_all(dir);
}

TEST_CASE("a run that fails numerically yields exit code 3 and partial results") {
    const auto dir = temp_dir("exit3");
    // a filter with zero initial covariance, zero process noise and zero
    // measurement variance has a singular innovation at the first update
    ExperimentSpec spec = find_built_in("smoke");
    spec.scenario.duration_s = 30.0;
    spec.scenario.init_phase_s = 10.0;
    spec.scenario.sigma_v_rad = 0.0;
    spec.scenario.sigma_u_rad = 0.0;
    spec.scenario.r_scalar_rad2 = 0.0;
    spec.scenario.mekf_att_std_deg = 0.0;
    spec.scenario.bias_std_degph = 0.0;
    spec.methods = {Method::Optimal, Method::MekfOnly};
    const auto path = dir / "singular.cfg";
    save_spec_file(spec, path.string());

    CHECK(cli_main({"run", path.string(), "--out", (dir / "out").string()}) ==
          kExitNumericalFailure);
    // the healthy method's rows were still written
    const std::string curves = read_file((dir / "out" / "smoke_curves.csv").string());
    CHECK(curves.find("Optimal,0,") != std::string::npos);
    CHECK(curves.find("MekfOnly") == std::string::npos);
}

TEST_CASE("percentile95 uses the nearest-rank definition") {
    std::vector<double> v;
    for (int i = 1; i <= 100; ++i) {
        v.push_back(double(i));
    }
    CHECK(percentile95(v) == 95.0);
    CHECK(percentile95({7.0}) == 7.0);
    CHECK(percentile95({1.0, 2.0}) == 2.0);
}

TEST_CASE("cli maps outcomes to the documented exit codes") {
    const auto dir = temp_dir("cli");

    SUBCASE("list succeeds") {
        CHECK(cli_main({"list"}) == kExitOk);
    }
    SUBCASE("unknown case is a config error") {
        CHECK(cli_main({"run", "case99", "--out", dir.string()}) == kExitConfigError);
    }
    SUBCASE("bad method override is a config error") {
        CHECK(cli_main({"run", "smoke", "--methods", "FancyFilter", "--out", dir.string()}) ==
              kExitConfigError);
    }
    SUBCASE("config file with a bad field is a config error") {
        const auto path = dir / "bad.cfg";
        std::ofstream(path) << "name = bad\nmethods = Optimal\n[scenario]\nmc_runs = 0\n";
        CHECK(cli_main({"run", path.string()}) == kExitConfigError);
    }
    SUBCASE("unwritable output directory is an io error") {
        CHECK(cli_main({"run", "smoke", "--out", "/proc/nope"}) == kExitIoError);
    }
    SUBCASE("run and sweep succeed on a small config file") {
        ExperimentSpec spec = tiny_smoke_spec((dir / "out").string());
        spec.scenario.duration_s = 60.0;
        spec.scenario.init_phase_s = 30.0;
        const auto path = dir / "tiny.cfg";
        save_spec_file(spec, path.string());
        CHECK(cli_main({"run", path.string(), "--out", (dir / "out").string()}) == kExitOk);
        CHECK(cli_main({"sweep", path.string(), "--biases", "0,1", "--out",
                        (dir / "out").string()}) == kExitOk);
        CHECK(std::filesystem::exists(dir / "out" / "smoke_curves.csv"));
        CHECK(std::filesystem::exists(dir / "out" / "smoke_sweep.csv"));
    }
    SUBCASE("seed and run-count overrides reach the scenario") {
        ExperimentSpec spec = tiny_smoke_spec((dir / "o2").string());
        spec.scenario.duration_s = 30.0;
        spec.scenario.init_phase_s = 10.0;
        spec.scenario.sigma_star_rad = 1e-5;
        spec.scenario.r_scalar_rad2 = 1e-10;
        spec.methods = {Method::Optimal};
        const auto path = dir / "o2.cfg";
        save_spec_file(spec, path.string());
        CHECK(cli_main({"run", path.string(), "--out", (dir / "o2a").string(), "--seed",
                        "42", "--mc-runs", "2"}) == kExitOk);
        CHECK(cli_main({"run", path.string(), "--out", (dir / "o2b").string(), "--seed",
                        "42", "--mc-runs", "2"}) == kExitOk);
        CHECK(read_file((dir / "o2a" / "smoke_curves.csv").string()) ==
              read_file((dir / "o2b" / "smoke_curves.csv").string()));
        CHECK(cli_main({"run", path.string(), "--out", (dir / "o2c").string(), "--seed",
                        "43", "--mc-runs", "2"}) == kExitOk);
        CHECK(read_file((dir / "o2a" / "smoke_curves.csv").string()) !=
              read_file((dir / "o2c" / "smoke_curves.csv").string()));
    }
}

TEST_CASE("format_double survives a parse round-trip") {
    for (double v : {0.08, 1.0 / 3.0, 2.909e-5, 5400.0, 1e-300, 0.0}) {
        CHECK(std::stod(format_double(v)) == v);
    }
}
