#include "swdl/config.hpp"

#include <sstream>

#include "swdl/io.hpp"

namespace swdl {

ConfigMap ConfigMap::parse(const std::string& text) {
    ConfigMap cfg;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = io::trim(line);
        if (t.empty() || t.front() == '#' || t.front() == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']') {
                throw ConfigError("line " + std::to_string(lineno) +
                                  ": unterminated section header");
            }
            section = io::trim(t.substr(1, t.size() - 2));
            if (section.empty()) {
                throw ConfigError("line " + std::to_string(lineno) +
                                  ": empty section name");
            }
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(lineno) +
                              ": expected key = value");
        }
        const std::string key = io::trim(t.substr(0, eq));
        const std::string value = io::trim(t.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError("line " + std::to_string(lineno) + ": empty key");
        }
        if (section.empty()) {
            throw ConfigError("line " + std::to_string(lineno) +
                              ": key outside any [section]");
        }
        cfg.data_[section][key] = Entry{value, lineno};
    }
    return cfg;
}

void ConfigMap::set(const std::string& dotted_key, const std::string& value) {
    const auto dot = dotted_key.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 == dotted_key.size()) {
        throw ConfigError("override key must look like section.key, got \"" +
                          dotted_key + "\"");
    }
    data_[dotted_key.substr(0, dot)][dotted_key.substr(dot + 1)] = Entry{value, 0};
}

std::optional<std::string> ConfigMap::get(const std::string& section,
                                          const std::string& key) const {
    const auto s = data_.find(section);
    if (s == data_.end()) return std::nullopt;
    const auto k = s->second.find(key);
    if (k == s->second.end()) return std::nullopt;
    return k->second.value;
}

std::string ConfigMap::get_or(const std::string& section, const std::string& key,
                              const std::string& fallback) const {
    const auto v = get(section, key);
    return v ? *v : fallback;
}

double ConfigMap::get_double(const std::string& section, const std::string& key,
                             double fallback) const {
    const auto v = get(section, key);
    if (!v) return fallback;
    try {
        return io::parse_double(*v);
    } catch (const ConfigError&) {
        throw ConfigError("field " + section + "." + key + ": bad number \"" + *v +
                          "\"");
    }
}

std::size_t ConfigMap::get_count(const std::string& section, const std::string& key,
                                 std::size_t fallback) const {
    const double d = get_double(section, key, static_cast<double>(fallback));
    if (d < 2.0 || d != std::floor(d)) {
        throw ConfigError("field " + section + "." + key +
                          ": expected integer count >= 2");
    }
    return static_cast<std::size_t>(d);
}

std::string ConfigMap::canonical() const {
    std::string out;
    for (const auto& [section, entries] : data_) {
        for (const auto& [key, entry] : entries) {
            out += section + "." + key + " = " + entry.value + "\n";
        }
    }
    return out;
}

void ConfigMap::merge_defaults(const ConfigMap& defaults) {
    for (const auto& [section, entries] : defaults.data_) {
        for (const auto& [key, entry] : entries) {
            auto& slot = data_[section];
            if (slot.find(key) == slot.end()) slot[key] = entry;
        }
    }
}

namespace {

AxisSpec read_axis(const ConfigMap& map, const std::string& section,
                   const std::string& prefix, const AxisSpec& fallback) {
    AxisSpec a;
    a.lo = map.get_double(section, prefix + "_lo", fallback.lo);
    a.hi = map.get_double(section, prefix + "_hi", fallback.hi);
    a.count = map.get_count(section, prefix + "_count", fallback.count);
    if (!(a.lo < a.hi)) {
        throw ConfigError("field " + section + "." + prefix +
                          "_lo: axis needs lo < hi");
    }
    return a;
}

std::vector<double> parse_params(const std::string& text, const std::string& field) {
    std::vector<double> out;
    for (const auto& f : io::split_csv_line(text)) {
        try {
            out.push_back(io::parse_double(f));
        } catch (const ConfigError&) {
            throw ConfigError("field " + field + ": bad number \"" + f + "\"");
        }
    }
    return out;
}

SymplecticMatrix resolve_matrix(const ConfigMap& map, const std::string& key,
                                const RunConfig& partial) {
    const std::string spec = map.get_or("matrices", key, key == "a1" ? "wd" : "fourier");
    const std::string field = "matrices." + key;
    if (key == "a1") {
        if (spec == "wd") return matrices::wd_a1();
        if (spec == "optimal") {
            const auto p = parse_params(
                map.get_or("matrices", "a1_params", "2,2"), "matrices.a1_params");
            if (p.size() != 2) {
                throw ConfigError("field matrices.a1_params: expected \"a1,b1\"");
            }
            return optimal_a1(p[0], p[1]);
        }
    } else {
        if (spec == "fourier") return matrices::l1();
        if (spec == "lfm") {
            const auto p = parse_params(
                map.get_or("matrices", "a2_params", "0.5,0.5,1"),
                "matrices.a2_params");
            if (p.size() < 3 || p.size() > 5) {
                throw ConfigError(
                    "field matrices.a2_params: expected \"beta,b2,d2[,a1,b1]\"");
            }
            double pa1 = partial.a1.a();
            double pb1 = partial.a1.b();
            if (p.size() == 5) {
                pa1 = p[3];
                pb1 = p[4];
            }
            return lfm_a2(p[0], p[1], p[2], pa1, pb1);
        }
    }
    const auto nums = parse_params(spec, field);
    if (nums.size() != 4) {
        throw ConfigError("field " + field +
                          ": expected \"a,b,c,d\" or a named selector");
    }
    try {
        return validate(nums[0], nums[1], nums[2], nums[3]);
    } catch (const NotSymplectic& e) {
        throw ConfigError("field " + field + ": " + e.what());
    }
}

Signal resolve_signal(const ConfigMap& map, RunConfig& rc) {
    const std::string kind = map.get_or("signal", "kind", "lfm");
    rc.signal_kind = kind;
    if (kind == "lfm") {
        const double alpha = map.get_double("signal", "alpha", 1.0);
        const double beta = map.get_double("signal", "beta", 0.5);
        const double lo = map.get_double("signal", "window_lo", -5.0);
        const double hi = map.get_double("signal", "window_hi", 5.0);
        if (!(lo < hi)) {
            throw ConfigError("field signal.window_lo: window needs lo < hi");
        }
        rc.lfm_alpha = alpha;
        rc.lfm_beta = beta;
        return lfm(alpha, beta, {lo, hi});
    }
    GaussianParams p;
    p.t0_center = map.get_double("signal", "t0", 0.0);
    p.zeta = map.get_double("signal", "zeta", 1.0);
    p.epsilon = map.get_double("signal", "epsilon", 0.0);
    p.omega0 = map.get_double("signal", "omega0", 0.0);
    p.xi = map.get_double("signal", "xi", 1.0);
    p.varsigma = map.get_double("signal", "varsigma", 0.0);
    p.m = static_cast<int>(map.get_double("signal", "m", 1.0));
    try {
        if (kind == "gaussian") return gaussian(p);
        if (kind == "gauss_exponential") return gauss_exponential(p);
        if (kind == "gauss_chirp") return gauss_chirp(p);
    } catch (const Error& e) {
        throw ConfigError(std::string("section [signal]: ") + e.what());
    }
    if (kind == "csv") {
        const auto path = map.get("signal", "path");
        if (!path) throw ConfigError("field signal.path: required for kind = csv");
        return Signal::from_samples(io::read_sampled_signal_csv(*path));
    }
    throw ConfigError("field signal.kind: unknown kind \"" + kind + "\"");
}

} // namespace

RunConfig RunConfig::resolve(const ConfigMap& map) {
    RunConfig rc;
    rc.signal = resolve_signal(map, rc);
    rc.a1 = resolve_matrix(map, "a1", rc);
    rc.a2 = resolve_matrix(map, "a2", rc);
    rc.t_axis = read_axis(map, "grid", "t", AxisSpec{-5.0, 5.0, 201});
    rc.u_axis = read_axis(map, "grid", "u", AxisSpec{-5.0, 5.0, 201});
    rc.slope_axis = read_axis(map, "radon", "slope", AxisSpec{0.0, 2.0, 101});
    rc.out_dir = map.get_or("output", "dir", "out");
    rc.method = map.get_or("output", "method", "definition");
    if (rc.method != "definition" && rc.method != "equivalent" &&
        rc.method != "both") {
        throw ConfigError("field output.method: expected definition|equivalent|both");
    }
    const std::string cls = map.get_or("bounds", "class", "arbitrary");
    if (cls == "arbitrary") {
        rc.bound_class = SignalClass::arbitrary;
    } else if (cls == "real") {
        rc.bound_class = SignalClass::real_valued;
    } else if (cls == "complex") {
        rc.bound_class = SignalClass::complex_valued;
    } else {
        throw ConfigError("field bounds.class: expected arbitrary|real|complex");
    }
    rc.cross_method_tolerance =
        map.get_double("tolerances", "cross_method", 1e-4);
    rc.canonical_text = map.canonical();
    return rc;
}

ConfigMap preset_fig1() {
    return ConfigMap::parse(R"(
[signal]
kind = lfm
alpha = 1
beta = 0.5
window_lo = -5
window_hi = 5

[matrices]
a1 = optimal
a1_params = 2,2
a2 = lfm
a2_params = 0.5,0.5,1

[grid]
t_lo = -5
t_hi = 5
t_count = 201
u_lo = -5
u_hi = 5
u_count = 201

[radon]
slope_lo = 0
slope_hi = 2
slope_count = 101

[output]
dir = out
method = definition
)");
}

} // namespace swdl
