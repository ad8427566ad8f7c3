#include "config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <charconv>
#include <cmath>
#include <map>
#include <set>

namespace shockdecay::cli {

namespace {

namespace pt = boost::property_tree;

const std::map<std::string, std::set<std::string>> kSchema{
    {"gas", {"gamma"}},
    {"geometry", {"type"}},
    {"scenario", {"h", "k", "x_end", "rtol", "atol", "regime", "samples"}},
    {"pulse", {"shape", "amplitude", "tau0", "file", "x_end"}},
    {"ccw", {"mach", "variant"}},
    {"compare", {"fit_lo", "fit_hi", "eps_coarse", "eps_fine"}},
    {"output", {"path"}},
};

double to_double(const std::string& where, const std::string& text)
{
    double v = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
        throw ConfigError(where + ": '" + text + "' is not a number");
    return v;
}

std::size_t to_count(const std::string& where, const std::string& text)
{
    std::size_t v = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
        throw ConfigError(where + ": '" + text + "' is not a non-negative integer");
    return v;
}

Regime parse_regime(const std::string& s)
{
    if (s == "case1" || s == "1") return Regime::Case1;
    if (s == "case2" || s == "2") return Regime::Case2;
    throw std::invalid_argument("unknown regime '" + s + "' (case1|case2)");
}

template <class F>
auto convert(const std::string& where, F&& f)
{
    try {
        return f();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(where + ": " + e.what());
    }
}

}  // namespace

void load_ini(const std::string& path, RunConfig& cfg)
{
    pt::ptree tree;
    try {
        pt::read_ini(path, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError("config " + e.filename() + ":" + std::to_string(e.line()) + ": " + e.message());
    }

    for (const auto& [section, body] : tree) {
        const auto it = kSchema.find(section);
        if (it == kSchema.end()) {
            if (body.empty())
                throw ConfigError("config " + path + ": key '" + section + "' outside a section");
            throw ConfigError("config " + path + ": unknown section [" + section + "]");
        }
        for (const auto& [key, node] : body) {
            const std::string where = "config " + path + ": [" + section + "] " + key;
            if (!it->second.count(key)) throw ConfigError(where + ": unknown key");
            const std::string v = node.get_value<std::string>();
            if (section == "gas") cfg.gamma = to_double(where, v);
            else if (section == "geometry") cfg.geom = convert(where, [&] { return parse_geometry(v); });
            else if (section == "scenario") {
                if (key == "h") cfg.h = to_double(where, v);
                else if (key == "k") cfg.k = to_double(where, v);
                else if (key == "x_end") cfg.x_end = to_double(where, v);
                else if (key == "rtol") cfg.rtol = to_double(where, v);
                else if (key == "atol") cfg.atol = to_double(where, v);
                else if (key == "regime") cfg.regime = convert(where, [&] { return parse_regime(v); });
                else cfg.samples = to_count(where, v);
            } else if (section == "pulse") {
                if (key != "x_end") cfg.pulse.given = true;
                if (key == "shape") cfg.pulse.shape = v;
                else if (key == "amplitude") cfg.pulse.amplitude = to_double(where, v);
                else if (key == "tau0") cfg.pulse.tau0 = to_double(where, v);
                else if (key == "file") cfg.pulse.file = v;
                else cfg.fit_x_end = to_double(where, v);
            } else if (section == "ccw") {
                if (key == "mach") cfg.mach = to_double(where, v);
                else cfg.variant = convert(where, [&] { return parse_ccw_variant(v); });
            } else if (section == "compare") {
                if (key == "fit_lo") cfg.fit_lo = to_double(where, v);
                else if (key == "fit_hi") cfg.fit_hi = to_double(where, v);
                else if (key == "eps_coarse") cfg.eps_coarse = to_double(where, v);
                else cfg.eps_fine = to_double(where, v);
            } else {
                cfg.out = v;
            }
        }
    }
}

void apply(const Overrides& o, RunConfig& cfg)
{
    if (o.gamma) cfg.gamma = *o.gamma;
    if (o.geometry) cfg.geom = convert("--geometry", [&] { return parse_geometry(*o.geometry); });
    if (o.h) cfg.h = *o.h;
    if (o.k) cfg.k = *o.k;
    if (o.x_end) cfg.x_end = *o.x_end;
    if (o.rtol) cfg.rtol = *o.rtol;
    if (o.atol) cfg.atol = *o.atol;
    if (o.regime) cfg.regime = convert("--regime", [&] { return parse_regime(*o.regime); });
    if (o.samples) cfg.samples = *o.samples;
    if (o.shape || o.amplitude || o.tau0 || o.pulse_file) cfg.pulse.given = true;
    if (o.shape) cfg.pulse.shape = *o.shape;
    if (o.amplitude) cfg.pulse.amplitude = *o.amplitude;
    if (o.tau0) cfg.pulse.tau0 = *o.tau0;
    if (o.pulse_file) {
        cfg.pulse.file = *o.pulse_file;
        if (!o.shape) cfg.pulse.shape = "file";
    }
    if (o.fit_x_end) cfg.fit_x_end = *o.fit_x_end;
    if (o.mach) cfg.mach = *o.mach;
    if (o.variant) cfg.variant = convert("--variant", [&] { return parse_ccw_variant(*o.variant); });
    if (o.out) cfg.out = *o.out;
}

void check(const RunConfig& cfg)
{
    auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!(std::isfinite(cfg.gamma) && cfg.gamma > 1.0)) throw ConfigError("gamma: must be > 1");
    if (!(std::isfinite(cfg.x_end) && cfg.x_end > 1.0)) throw ConfigError("x_end: must be finite and > 1");
    if (!(positive(cfg.rtol) && cfg.rtol < 1.0)) throw ConfigError("rtol: must lie in (0, 1)");
    if (!positive(cfg.atol)) throw ConfigError("atol: must be > 0");
    if (cfg.samples < 2) throw ConfigError("samples: need at least 2");
    if (!(std::isfinite(cfg.h) && cfg.h >= 0.0)) throw ConfigError("h: must be finite and >= 0");
    if (!std::isfinite(cfg.k)) throw ConfigError("k: must be finite");
    if (cfg.pulse.shape != "half-sine" && cfg.pulse.shape != "ramp" && cfg.pulse.shape != "file")
        throw ConfigError("pulse shape: '" + cfg.pulse.shape + "' (half-sine|ramp|file)");
    if (cfg.pulse.shape == "file" && cfg.pulse.file.empty()) throw ConfigError("pulse file: path required");
    if (!(std::isfinite(cfg.pulse.amplitude) && cfg.pulse.amplitude >= 0.0))
        throw ConfigError("pulse amplitude: must be finite and >= 0");
    if (!positive(cfg.pulse.tau0)) throw ConfigError("pulse tau0: must be > 0");
    if (!(std::isfinite(cfg.fit_x_end) && cfg.fit_x_end > 1.0)) throw ConfigError("pulse x_end: must be > 1");
    if (!(std::isfinite(cfg.mach) && cfg.mach > 1.0)) throw ConfigError("mach: must be > 1");
    if (!(cfg.fit_lo > 1.0 && cfg.fit_hi > cfg.fit_lo && std::isfinite(cfg.fit_hi)))
        throw ConfigError("compare fit window: need 1 < fit_lo < fit_hi");
    if (!(positive(cfg.eps_coarse) && positive(cfg.eps_fine)))
        throw ConfigError("compare amplitudes: must be > 0");
}

Scenario to_scenario(const RunConfig& cfg)
{
    Scenario s;
    s.gas = GasParams(cfg.gamma);
    s.geom = cfg.geom;
    s.h = cfg.h;
    s.k = cfg.k;
    s.x_end = cfg.x_end;
    s.rtol = cfg.rtol;
    s.atol = cfg.atol;
    s.regime = cfg.regime;
    s.log_samples = cfg.samples;
    return s;
}

}  // namespace shockdecay::cli
