#include "attinit/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <sstream>

#include "attinit/csv.hpp"
#include "attinit/errors.hpp"
#include "attinit/svg_plot.hpp"

namespace attinit {

void ExperimentSpec::validate() const {
    if (name.empty()) {
        throw ConfigError("name", "must be non-empty");
    }
    if (methods.empty()) {
        throw ConfigError("methods", "must list at least one method");
    }
    scenario.validate();
}

bool ExperimentSpec::operator==(const ExperimentSpec& other) const {
    const ScenarioConfig& a = scenario;
    const ScenarioConfig& b = other.scenario;
    return name == other.name && methods == other.methods &&
           a.duration_s == b.duration_s && a.dt_s == b.dt_s &&
           a.rate_profile.osc_amplitude_rad_s == b.rate_profile.osc_amplitude_rad_s &&
           a.rate_profile.osc_period_s == b.rate_profile.osc_period_s &&
           a.rate_profile.orbit_rate_rad_s == b.rate_profile.orbit_rate_rad_s &&
           a.truth_substeps == b.truth_substeps && a.gyro_bias_degph == b.gyro_bias_degph &&
           a.sigma_v_rad == b.sigma_v_rad && a.sigma_star_rad == b.sigma_star_rad &&
           a.init_phase_s == b.init_phase_s && a.solve_every == b.solve_every &&
           a.sigma_u_rad == b.sigma_u_rad && a.r_scalar_rad2 == b.r_scalar_rad2 &&
           a.init_att_err_deg == b.init_att_err_deg &&
           a.mekf_att_std_deg == b.mekf_att_std_deg &&
           a.handoff_att_std_deg == b.handoff_att_std_deg &&
           a.bias_std_degph == b.bias_std_degph && a.mc_runs == b.mc_runs &&
           a.seed == b.seed;
}

std::vector<ExperimentSpec> built_in_specs() {
    ExperimentSpec case1;
    case1.name = "case1";
    case1.methods = {Method::Optimal, Method::OptimalPlusMekf, Method::MekfOnly};
    // defaults of ScenarioConfig are the case-1 settings

    ExperimentSpec case2 = case1;
    case2.name = "case2";
    case2.scenario.init_att_err_deg = Vec3(30.0, 30.0, 60.0);
    case2.scenario.mekf_att_std_deg = 25.0;

    ExperimentSpec case3 = case1;
    case3.name = "case3";
    case3.scenario.gyro_bias_degph = Vec3(10.0, 10.0, 10.0);
    case3.scenario.bias_std_degph = 10.0;

    ExperimentSpec case4 = case3;
    case4.name = "case4";
    case4.scenario.init_att_err_deg = Vec3(30.0, 30.0, 60.0);
    case4.scenario.mekf_att_std_deg = 25.0;

    ExperimentSpec sweep = case1;
    sweep.name = "bias_sweep";
    sweep.methods = {Method::Optimal};

    ExperimentSpec smoke;
    smoke.name = "smoke";
    smoke.methods = {Method::Optimal, Method::OptimalPlusMekf, Method::MekfOnly};
    smoke.scenario.duration_s = 600.0;
    smoke.scenario.mc_runs = 1;
    smoke.scenario.gyro_bias_degph = Vec3::Zero();
    smoke.scenario.sigma_v_rad = 0.0;
    smoke.scenario.sigma_star_rad = 0.0;
    smoke.scenario.r_scalar_rad2 = 1e-12;  // keep the filter update well posed

    return {case1, case2, case3, case4, sweep, smoke};
}

ExperimentSpec find_built_in(const std::string& name) {
    for (const ExperimentSpec& spec : built_in_specs()) {
        if (spec.name == name) {
            return spec;
        }
    }
    throw ConfigError("case", "unknown built-in experiment '" + name + "'");
}

namespace {

std::string vec3_text(const Vec3& v) {
    std::ostringstream os;
    os << "[" << format_double(v.x()) << "," << format_double(v.y()) << ","
       << format_double(v.z()) << "]";
    return os.str();
}

std::string describe(const ExperimentSpec& s) {
    std::ostringstream os;
    const ScenarioConfig& c = s.scenario;
    os << s.name << ": ";
    if (s.name == "bias_sweep") {
        os << "Optimal across gyro biases {0.01,0.1,1,10,100} deg/h, otherwise case1 settings";
        return os.str();
    }
    os << "bias " << format_double(c.gyro_bias_degph.x()) << " deg/h"
       << ", init err " << vec3_text(c.init_att_err_deg) << " deg"
       << ", mekf att cov (" << format_double(c.mekf_att_std_deg) << " deg)^2"
       << ", handoff att cov (" << format_double(c.handoff_att_std_deg) << " deg)^2"
       << ", bias cov (" << format_double(c.bias_std_degph) << " deg/h)^2"
       << ", " << c.mc_runs << " runs x " << format_double(c.duration_s) << " s";
    if (s.name == "smoke") {
        os << " (noise-free)";
    }
    return os.str();
}

std::filesystem::path prepare_output_dir(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create output directory '" + dir + "': " + ec.message());
    }
    return std::filesystem::path(dir);
}

std::vector<SummaryRow> summarize(const std::string& method, const MonteCarloResult& mc) {
    std::vector<SummaryRow> rows;
    rows.reserve(mc.t_s.size());
    for (std::size_t e = 0; e < mc.t_s.size(); ++e) {
        std::vector<double> sample;
        sample.reserve(mc.runs.size());
        for (const RunResult& r : mc.runs) {
            if (!r.failed) {
                sample.push_back(r.err_deg[e]);
            }
        }
        SummaryRow row;
        row.method = method;
        row.t_s = mc.t_s[e];
        row.runs = static_cast<int>(sample.size());
        if (!sample.empty()) {
            double sum = 0.0;
            for (double v : sample) {
                sum += v;
            }
            row.mean_err_deg = sum / sample.size();
            row.p95_err_deg = percentile95(sample);
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

std::string list_cases() {
    std::ostringstream os;
    for (const ExperimentSpec& spec : built_in_specs()) {
        os << describe(spec) << "\n";
    }
    return os.str();
}

double percentile95(std::vector<double> values) {
    if (values.empty()) {
        return std::nan("");
    }
    std::sort(values.begin(), values.end());
    const std::size_t rank =
        static_cast<std::size_t>(std::ceil(0.95 * values.size()));
    return values[std::max<std::size_t>(rank, 1) - 1];
}

CaseOutcome run_case(const ExperimentSpec& spec) {
    spec.validate();
    const auto dir = prepare_output_dir(spec.outputs);

    CaseOutcome outcome;
    outcome.curves_path = (dir / (spec.name + "_curves.csv")).string();
    outcome.summary_path = (dir / (spec.name + "_summary.csv")).string();
    outcome.plot_path = (dir / (spec.name + "_mean_err.svg")).string();

    for (Method m : spec.methods) {
        outcome.results.emplace(m, run_monte_carlo(spec.scenario, m));
    }

    CsvWriter curves(outcome.curves_path, "method,run,t_s,err_deg");
    for (Method m : spec.methods) {
        const MonteCarloResult& mc = outcome.results.at(m);
        for (std::size_t run = 0; run < mc.runs.size(); ++run) {
            const RunResult& r = mc.runs[run];
            if (r.failed) {
                ++outcome.failed_runs;
                continue;
            }
            for (std::size_t e = 0; e < mc.t_s.size(); ++e) {
                curves.row(to_string(m), static_cast<long>(run), mc.t_s[e], r.err_deg[e]);
            }
        }
    }
    curves.close();

    CsvWriter summary(outcome.summary_path, "method,t_s,mean_err_deg,p95_err_deg,runs");
    std::vector<PlotSeries> series;
    for (Method m : spec.methods) {
        const std::vector<SummaryRow> rows = summarize(to_string(m), outcome.results.at(m));
        PlotSeries ps;
        ps.name = to_string(m);
        for (const SummaryRow& row : rows) {
            summary.row(row.method, row.t_s, row.mean_err_deg, row.p95_err_deg, row.runs);
            ps.x.push_back(row.t_s);
            ps.y.push_back(row.mean_err_deg);
        }
        series.push_back(std::move(ps));
    }
    summary.close();

    write_line_plot_or_warn(outcome.plot_path, spec.name + ": mean attitude error",
                            "t [s]", "mean error [deg]", series);
    return outcome;
}

SweepOutcome run_bias_sweep(const ExperimentSpec& base,
                            const std::vector<double>& biases_degph) {
    base.validate();
    if (biases_degph.empty()) {
        throw ConfigError("biases", "must list at least one bias level");
    }
    for (double b : biases_degph) {
        if (!(b >= 0.0) || !std::isfinite(b)) {
            throw ConfigError("biases", "levels must be finite and >= 0");
        }
    }
    const auto dir = prepare_output_dir(base.outputs);

    SweepOutcome outcome;
    outcome.sweep_path = (dir / (base.name + "_sweep.csv")).string();
    outcome.plot_path = (dir / (base.name + "_sweep_mean_err.svg")).string();

    for (double bias : biases_degph) {
        ScenarioConfig cfg = base.scenario;
        cfg.gyro_bias_degph = Vec3(bias, bias, bias);
        outcome.results.emplace(bias, run_monte_carlo(cfg, Method::Optimal));
    }

    CsvWriter sweep(outcome.sweep_path, "bias_degph,run,t_s,err_deg");
    std::vector<PlotSeries> series;
    for (double bias : biases_degph) {
        const MonteCarloResult& mc = outcome.results.at(bias);
        for (std::size_t run = 0; run < mc.runs.size(); ++run) {
            const RunResult& r = mc.runs[run];
            if (r.failed) {
                ++outcome.failed_runs;
                continue;
            }
            for (std::size_t e = 0; e < mc.t_s.size(); ++e) {
                sweep.row(bias, static_cast<long>(run), mc.t_s[e], r.err_deg[e]);
            }
        }
        PlotSeries ps;
        ps.name = format_double(bias) + " deg/h";
        ps.x = mc.t_s;
        for (std::size_t e = 0; e < mc.t_s.size(); ++e) {
            ps.y.push_back(mc.mean_at(static_cast<int>(e)));
        }
        series.push_back(std::move(ps));
    }
    sweep.close();

    write_line_plot_or_warn(outcome.plot_path,
                            base.name + ": Optimal mean error by gyro bias", "t [s]",
                            "mean error [deg]", series);
    return outcome;
}

}  // namespace attinit
