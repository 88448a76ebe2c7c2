#include "attinit/config_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "attinit/csv.hpp"
#include "attinit/errors.hpp"

namespace attinit {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, ',')) {
        out.push_back(trim(item));
    }
    return out;
}

double parse_double(const std::string& field, const std::string& text) {
    const std::string t = trim(text);
    double v = 0.0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (res.ec != std::errc() || res.ptr != t.data() + t.size()) {
        throw ConfigError(field, "expected a number, got '" + t + "'");
    }
    return v;
}

int parse_int(const std::string& field, const std::string& text) {
    const std::string t = trim(text);
    int v = 0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (res.ec != std::errc() || res.ptr != t.data() + t.size()) {
        throw ConfigError(field, "expected an integer, got '" + t + "'");
    }
    return v;
}

std::uint64_t parse_u64(const std::string& field, const std::string& text) {
    const std::string t = trim(text);
    std::uint64_t v = 0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (res.ec != std::errc() || res.ptr != t.data() + t.size()) {
        throw ConfigError(field, "expected an unsigned integer, got '" + t + "'");
    }
    return v;
}

Vec3 parse_vec3(const std::string& field, const std::string& text) {
    const auto parts = split_commas(text);
    if (parts.size() != 3) {
        throw ConfigError(field, "expected three comma-separated numbers");
    }
    return Vec3(parse_double(field, parts[0]), parse_double(field, parts[1]),
                parse_double(field, parts[2]));
}

std::string vec3_csv(const Vec3& v) {
    return format_double(v.x()) + ", " + format_double(v.y()) + ", " + format_double(v.z());
}

}  // namespace

std::string serialize_spec(const ExperimentSpec& spec) {
    const ScenarioConfig& c = spec.scenario;
    std::ostringstream os;
    os << "# attinit experiment config\n";
    os << "name = " << spec.name << "\n";
    os << "methods = ";
    for (std::size_t i = 0; i < spec.methods.size(); ++i) {
        os << (i ? ", " : "") << to_string(spec.methods[i]);
    }
    os << "\n\n[scenario]\n";
    os << "duration_s = " << format_double(c.duration_s) << "\n";
    os << "dt_s = " << format_double(c.dt_s) << "\n";
    os << "osc_amplitude_rad_s = " << format_double(c.rate_profile.osc_amplitude_rad_s) << "\n";
    os << "osc_period_s = " << format_double(c.rate_profile.osc_period_s) << "\n";
    os << "orbit_rate_rad_s = " << format_double(c.rate_profile.orbit_rate_rad_s) << "\n";
    os << "truth_substeps = " << c.truth_substeps << "\n";
    os << "gyro_bias_degph = " << vec3_csv(c.gyro_bias_degph) << "\n";
    os << "sigma_v_rad = " << format_double(c.sigma_v_rad) << "\n";
    os << "sigma_star_rad = " << format_double(c.sigma_star_rad) << "\n";
    os << "init_phase_s = " << format_double(c.init_phase_s) << "\n";
    os << "solve_every = " << c.solve_every << "\n";
    os << "mc_runs = " << c.mc_runs << "\n";
    os << "seed = " << c.seed << "\n";
    os << "\n[filter]\n";
    os << "sigma_u_rad = " << format_double(c.sigma_u_rad) << "\n";
    os << "r_scalar_rad2 = " << format_double(c.r_scalar_rad2) << "\n";
    os << "init_att_err_deg = " << vec3_csv(c.init_att_err_deg) << "\n";
    os << "mekf_att_std_deg = " << format_double(c.mekf_att_std_deg) << "\n";
    os << "handoff_att_std_deg = " << format_double(c.handoff_att_std_deg) << "\n";
    os << "bias_std_degph = " << format_double(c.bias_std_degph) << "\n";
    return os.str();
}

ExperimentSpec parse_spec(const std::string& text) {
    ExperimentSpec spec;
    spec.methods.clear();
    ScenarioConfig& c = spec.scenario;

    std::string section;
    std::istringstream is(text);
    std::string raw;
    while (std::getline(is, raw)) {
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ConfigError("section", "malformed section header '" + line + "'");
            }
            section = trim(line.substr(1, line.size() - 2));
            if (section != "scenario" && section != "filter") {
                throw ConfigError("section", "unknown section '" + section + "'");
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line", "expected 'key = value', got '" + line + "'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (section.empty()) {
            if (key == "name") {
                spec.name = value;
            } else if (key == "methods") {
                for (const std::string& name : split_commas(value)) {
                    const auto m = method_from_string(name);
                    if (!m) {
                        throw ConfigError("methods", "unknown method '" + name + "'");
                    }
                    spec.methods.push_back(*m);
                }
            } else {
                throw ConfigError(key, "unknown key");
            }
        } else if (section == "scenario") {
            if (key == "duration_s") c.duration_s = parse_double(key, value);
            else if (key == "dt_s") c.dt_s = parse_double(key, value);
            else if (key == "osc_amplitude_rad_s")
                c.rate_profile.osc_amplitude_rad_s = parse_double(key, value);
            else if (key == "osc_period_s") c.rate_profile.osc_period_s = parse_double(key, value);
            else if (key == "orbit_rate_rad_s")
                c.rate_profile.orbit_rate_rad_s = parse_double(key, value);
            else if (key == "truth_substeps") c.truth_substeps = parse_int(key, value);
            else if (key == "gyro_bias_degph") c.gyro_bias_degph = parse_vec3(key, value);
            else if (key == "sigma_v_rad") c.sigma_v_rad = parse_double(key, value);
            else if (key == "sigma_star_rad") c.sigma_star_rad = parse_double(key, value);
            else if (key == "init_phase_s") c.init_phase_s = parse_double(key, value);
            else if (key == "solve_every") c.solve_every = parse_int(key, value);
            else if (key == "mc_runs") c.mc_runs = parse_int(key, value);
            else if (key == "seed") c.seed = parse_u64(key, value);
            else throw ConfigError(key, "unknown key in [scenario]");
        } else {  // filter
            if (key == "sigma_u_rad") c.sigma_u_rad = parse_double(key, value);
            else if (key == "r_scalar_rad2") c.r_scalar_rad2 = parse_double(key, value);
            else if (key == "init_att_err_deg") c.init_att_err_deg = parse_vec3(key, value);
            else if (key == "mekf_att_std_deg") c.mekf_att_std_deg = parse_double(key, value);
            else if (key == "handoff_att_std_deg")
                c.handoff_att_std_deg = parse_double(key, value);
            else if (key == "bias_std_degph") c.bias_std_degph = parse_double(key, value);
            else throw ConfigError(key, "unknown key in [filter]");
        }
    }
    return spec;
}

ExperimentSpec load_spec_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read config file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_spec(buffer.str());
}

void save_spec_file(const ExperimentSpec& spec, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write config file '" + path + "'");
    }
    out << serialize_spec(spec);
    out.flush();
    if (!out) {
        throw IoError("write failure on '" + path + "'");
    }
}

}  // namespace attinit
