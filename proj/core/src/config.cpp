#include "hhgq/config.hpp"

#include "hhgq/errors.hpp"
#include "hhgq/units.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace hhgq {

std::string to_string(Direction d) { return d == Direction::gamma_m ? "gm" : "ga"; }
std::string to_string(EnvelopeKind e) { return e == EnvelopeKind::gaussian ? "gaussian" : "sin2"; }
std::string to_string(WindowKind w) { return w == WindowKind::hann ? "hann" : "none"; }
std::string to_string(FwhmConvention f) { return f == FwhmConvention::field ? "field" : "intensity"; }

double SimulationConfig::omega_l() const { return units::omega_from_wavelength_um(lambda_um); }
double SimulationConfig::e0_au() const { return units::v_per_angstrom_to_au(e0_v_per_angstrom); }
double SimulationConfig::t2_au() const {
    return t2_infinite() ? std::numeric_limits<double>::infinity() : units::fs_to_au(t2_fs);
}

double SimulationConfig::fwhm_au() const {
    const double fwhm_field = n_cycles * units::optical_period(omega_l());
    // An intensity-FWHM spec widens the field envelope by sqrt(2) for a Gaussian.
    if (fwhm_of == FwhmConvention::intensity && envelope == EnvelopeKind::gaussian)
        return fwhm_field * std::numbers::sqrt2;
    return fwhm_field;
}

namespace {

std::string trim(std::string s) {
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': cannot parse '" + value + "' as a number");
    }
}

int parse_int(const std::string& key, const std::string& value) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw ConfigError("config key '" + key + "': cannot parse '" + value + "' as an integer");
    return v;
}

void assign(SimulationConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "direction") {
        if (value == "gm") cfg.direction = Direction::gamma_m;
        else if (value == "ga") cfg.direction = Direction::gamma_a;
        else throw ConfigError("config key 'direction': expected gm or ga, got '" + value + "'");
    } else if (key == "e_g_au") {
        cfg.e_g_au = parse_double(key, value);
    } else if (key == "ep_x_au") {
        cfg.ep_x_au = parse_double(key, value);
    } else if (key == "ep_z_au") {
        cfg.ep_z_au = parse_double(key, value);
    } else if (key == "lambda_um") {
        cfg.lambda_um = parse_double(key, value);
    } else if (key == "e0_v_per_angstrom") {
        cfg.e0_v_per_angstrom = parse_double(key, value);
    } else if (key == "n_cycles") {
        cfg.n_cycles = parse_double(key, value);
    } else if (key == "envelope") {
        if (value == "gaussian") cfg.envelope = EnvelopeKind::gaussian;
        else if (value == "sin2") cfg.envelope = EnvelopeKind::sin2;
        else throw ConfigError("config key 'envelope': expected gaussian or sin2, got '" + value + "'");
    } else if (key == "fwhm_of") {
        if (value == "field") cfg.fwhm_of = FwhmConvention::field;
        else if (value == "intensity") cfg.fwhm_of = FwhmConvention::intensity;
        else throw ConfigError("config key 'fwhm_of': expected field or intensity, got '" + value + "'");
    } else if (key == "cep") {
        cfg.cep = parse_double(key, value);
    } else if (key == "span_fwhm") {
        cfg.span_fwhm = parse_double(key, value);
    } else if (key == "t2_fs") {
        cfg.t2_fs = (value == "inf") ? std::numeric_limits<double>::infinity()
                                     : parse_double(key, value);
    } else if (key == "n_k") {
        cfg.n_k = parse_int(key, value);
    } else if (key == "n_t") {
        cfg.n_t = parse_int(key, value);
    } else if (key == "q_cutoff") {
        cfg.q_cutoff = parse_int(key, value);
    } else if (key == "n_z") {
        cfg.n_z = parse_double(key, value);
    } else if (key == "g0") {
        cfg.g0 = parse_double(key, value);
    } else if (key == "window") {
        if (value == "hann") cfg.window = WindowKind::hann;
        else if (value == "none") cfg.window = WindowKind::none;
        else throw ConfigError("config key 'window': expected hann or none, got '" + value + "'");
    } else {
        throw ConfigError("unknown config key '" + key + "'");
    }
}

} // namespace

void validate_config(const SimulationConfig& cfg) {
    if (cfg.n_k <= 0 || cfg.n_k % 2 == 0)
        throw ConfigError("config key 'n_k': must be odd and positive (grid symmetric about K = 0), got " +
                          std::to_string(cfg.n_k));
    if (cfg.n_t <= 0 || (cfg.n_t & (cfg.n_t - 1)) != 0)
        throw ConfigError("config key 'n_t': must be a power of two, got " + std::to_string(cfg.n_t));
    if (cfg.q_cutoff < 1)
        throw ConfigError("config key 'q_cutoff': must be >= 1, got " + std::to_string(cfg.q_cutoff));
    if (!(cfg.n_z > 0.0))
        throw ConfigError("config key 'n_z': must be > 0");
    if (!cfg.t2_infinite() && !(cfg.t2_fs > 0.0))
        throw ConfigError("config key 't2_fs': must be > 0 or inf");
    if (!(cfg.e_g_au > 0.0))
        throw ConfigError("config key 'e_g_au': must be > 0");
    if (!(cfg.ep_x_au > 0.0) || !(cfg.ep_z_au > 0.0))
        throw ConfigError("config key 'ep_x_au'/'ep_z_au': Kane parameters must be > 0");
    if (!(cfg.lambda_um > 0.0))
        throw ConfigError("config key 'lambda_um': must be > 0");
    if (cfg.e0_v_per_angstrom < 0.0)
        throw ConfigError("config key 'e0_v_per_angstrom': must be >= 0");
    if (!(cfg.n_cycles > 0.0))
        throw ConfigError("config key 'n_cycles': must be > 0");
    if (!(cfg.span_fwhm > 0.0))
        throw ConfigError("config key 'span_fwhm': must be > 0");
    if (!(cfg.g0 > 0.0))
        throw ConfigError("config key 'g0': must be > 0");
}

SimulationConfig parse_config(const std::string& text, const std::string& source_name) {
    SimulationConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::set<std::string> seen;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(source_name + ":" + std::to_string(lineno) +
                              ": expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError(source_name + ":" + std::to_string(lineno) + ": empty key or value");
        if (!seen.insert(key).second)
            throw ConfigError(source_name + ":" + std::to_string(lineno) + ": duplicate key '" + key + "'");
        assign(cfg, key, value);
    }
    validate_config(cfg);
    return cfg;
}

SimulationConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config file not found or unreadable: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path.string());
}

void apply_override(SimulationConfig& cfg, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
        throw ConfigError("override must be key=value, got '" + assignment + "'");
    assign(cfg, trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
    validate_config(cfg);
}

std::string render_config(const SimulationConfig& cfg) {
    std::ostringstream out;
    out.precision(17);
    out << "direction = " << to_string(cfg.direction) << '\n'
        << "e_g_au = " << cfg.e_g_au << '\n'
        << "ep_x_au = " << cfg.ep_x_au << '\n'
        << "ep_z_au = " << cfg.ep_z_au << '\n'
        << "lambda_um = " << cfg.lambda_um << '\n'
        << "e0_v_per_angstrom = " << cfg.e0_v_per_angstrom << '\n'
        << "n_cycles = " << cfg.n_cycles << '\n'
        << "envelope = " << to_string(cfg.envelope) << '\n'
        << "fwhm_of = " << to_string(cfg.fwhm_of) << '\n'
        << "cep = " << cfg.cep << '\n'
        << "span_fwhm = " << cfg.span_fwhm << '\n';
    if (cfg.t2_infinite())
        out << "t2_fs = inf\n";
    else
        out << "t2_fs = " << cfg.t2_fs << '\n';
    out << "n_k = " << cfg.n_k << '\n'
        << "n_t = " << cfg.n_t << '\n'
        << "q_cutoff = " << cfg.q_cutoff << '\n'
        << "n_z = " << cfg.n_z << '\n'
        << "g0 = " << cfg.g0 << '\n'
        << "window = " << to_string(cfg.window) << '\n';
    return out.str();
}

} // namespace hhgq
