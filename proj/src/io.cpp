#include "swdl/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "swdl/detect.hpp"
#include "swdl/errors.hpp"
#include "swdl/moments.hpp"
#include "swdl/signal.hpp"
#include "swdl/tfd.hpp"

namespace swdl::io {

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
    std::string t = trim(text);
    if (!t.empty() && t.front() == '+') t.erase(t.begin());
    double value = 0.0;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last || t.empty()) {
        throw ConfigError("malformed number \"" + text + "\"");
    }
    return value;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

std::string trim(const std::string& text) {
    const auto b = text.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = text.find_last_not_of(" \t\r\n");
    return text.substr(b, e - b + 1);
}

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (const unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out << content;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_sampled_signal_csv(const std::filesystem::path& path,
                              const SampledSignal& s) {
    std::string out = "t,re,im\n";
    for (std::size_t k = 0; k < s.size(); ++k) {
        out += format_double(s.t_at(k));
        out += ',';
        out += format_double(s.values()[k].real());
        out += ',';
        out += format_double(s.values()[k].imag());
        out += '\n';
    }
    write_text_file(path, out);
}

SampledSignal read_sampled_signal_csv(const std::filesystem::path& path) {
    std::istringstream in(read_text_file(path));
    std::string line;
    if (!std::getline(in, line) || trim(line) != "t,re,im") {
        throw ConfigError(path.string() + ": expected header \"t,re,im\"");
    }
    std::vector<double> t;
    std::vector<cplx> v;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 3) {
            throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                              ": expected 3 fields");
        }
        t.push_back(parse_double(fields[0]));
        v.emplace_back(parse_double(fields[1]), parse_double(fields[2]));
    }
    if (t.size() < 2) {
        throw ConfigError(path.string() + ": need at least 2 samples");
    }
    const double dt = t[1] - t[0];
    for (std::size_t k = 1; k < t.size(); ++k) {
        if (std::abs(t[k] - t[0] - dt * static_cast<double>(k)) > 1e-9 * std::abs(dt)) {
            throw ConfigError(path.string() + ": samples must be uniformly spaced");
        }
    }
    return SampledSignal(t[0], dt, std::move(v));
}

void write_lct_csv(const std::filesystem::path& path, const LctResult& r) {
    std::string out = "u,re,im\n";
    for (std::size_t k = 0; k < r.values.size(); ++k) {
        out += format_double(r.u_at(k));
        out += ',';
        out += format_double(r.values[k].real());
        out += ',';
        out += format_double(r.values[k].imag());
        out += '\n';
    }
    write_text_file(path, out);
}

void write_tfgrid_csv(const std::filesystem::path& path, const TFGrid& g) {
    std::string out = "t,u,re,im,abs\n";
    for (std::size_t it = 0; it < g.nt; ++it) {
        const std::string ts = format_double(g.t_at(it));
        for (std::size_t iu = 0; iu < g.nu; ++iu) {
            const cplx v = g.at(it, iu);
            out += ts;
            out += ',';
            out += format_double(g.u_at(iu));
            out += ',';
            out += format_double(v.real());
            out += ',';
            out += format_double(v.imag());
            out += ',';
            out += format_double(std::abs(v));
            out += '\n';
        }
    }
    write_text_file(path, out);
}

void write_tfgrid_pgm(const std::filesystem::path& path, const TFGrid& g) {
    const double peak = g.peak_abs();
    std::string out = "P5\n" + std::to_string(g.nu) + " " + std::to_string(g.nt) +
                      "\n255\n";
    out.reserve(out.size() + g.nt * g.nu);
    for (std::size_t it = 0; it < g.nt; ++it) {
        for (std::size_t iu = 0; iu < g.nu; ++iu) {
            const double v = peak > 0.0 ? std::abs(g.at(it, iu)) / peak : 0.0;
            out += static_cast<char>(std::lround(255.0 * v));
        }
    }
    write_text_file(path, out);
}

void write_radon_csv(const std::filesystem::path& path, const RadonMap& m) {
    std::string out = "slope,intercept,value\n";
    for (std::size_t is = 0; is < m.slopes.size(); ++is) {
        const std::string ss = format_double(m.slopes[is]);
        for (std::size_t ic = 0; ic < m.intercepts.size(); ++ic) {
            out += ss;
            out += ',';
            out += format_double(m.intercepts[ic]);
            out += ',';
            out += format_double(m.at(is, ic));
            out += '\n';
        }
    }
    write_text_file(path, out);
}

void write_rate_amplitude_csv(const std::filesystem::path& path,
                              const RateAmplitude& r) {
    std::string out = "rate,amplitude\n";
    for (std::size_t i = 0; i < r.rates.size(); ++i) {
        out += format_double(r.rates[i]);
        out += ',';
        out += format_double(r.amplitude[i]);
        out += '\n';
    }
    write_text_file(path, out);
}

namespace {

const char* class_name(SignalClass c) {
    switch (c) {
        case SignalClass::arbitrary: return "arbitrary";
        case SignalClass::real_valued: return "real";
        case SignalClass::complex_valued: return "complex";
    }
    return "?";
}

} // namespace

std::string moment_report_kv(const MomentReport& r) {
    std::ostringstream out;
    const auto put = [&](const char* k, double v) {
        out << k << " = " << format_double(v) << "\n";
    };
    put("t_moment", r.t_moment);
    put("t_spread", r.t_spread);
    put("omega_moment", r.omega_moment);
    put("omega_spread", r.omega_spread);
    put("u_moment_a3", r.u_moment_a3);
    put("u_spread_a3", r.u_spread_a3);
    put("u_moment_a4", r.u_moment_a4);
    put("u_spread_a4", r.u_spread_a4);
    put("swdl_t_moment", r.swdl_t_moment);
    put("swdl_t_spread", r.swdl_t_spread);
    put("swdl_u_moment", r.swdl_u_moment);
    put("swdl_u_spread", r.swdl_u_spread);
    put("cov", r.cov);
    put("abscov", r.abscov);
    put("energy", r.energy);
    return out.str();
}

std::string bound_report_kv(const BoundReport& r) {
    std::ostringstream out;
    out << "class = " << class_name(r.signal_class) << "\n";
    out << "lower_bound = " << format_double(r.lower_bound) << "\n";
    if (r.secondary_bound) {
        out << "secondary_bound = " << format_double(*r.secondary_bound) << "\n";
    }
    out << "product = " << format_double(r.product) << "\n";
    out << "slack = " << format_double(r.slack) << "\n";
    out << "attained = " << (r.attained ? "true" : "false") << "\n";
    return out.str();
}

void write_reports_csv(const std::filesystem::path& path, const MomentReport& m,
                       const std::vector<BoundReport>& bounds) {
    std::string out =
        "record,class,lower_bound,secondary_bound,product,slack,attained,"
        "t_spread,u_spread_a3,u_spread_a4,swdl_t_spread,swdl_u_spread,cov,abscov,"
        "energy\n";
    for (const auto& b : bounds) {
        out += "bound,";
        out += class_name(b.signal_class);
        out += ',';
        out += format_double(b.lower_bound);
        out += ',';
        out += b.secondary_bound ? format_double(*b.secondary_bound) : std::string();
        out += ',';
        out += format_double(b.product);
        out += ',';
        out += format_double(b.slack);
        out += ',';
        out += b.attained ? "true" : "false";
        out += ',';
        out += format_double(m.t_spread);
        out += ',';
        out += format_double(m.u_spread_a3);
        out += ',';
        out += format_double(m.u_spread_a4);
        out += ',';
        out += format_double(m.swdl_t_spread);
        out += ',';
        out += format_double(m.swdl_u_spread);
        out += ',';
        out += format_double(m.cov);
        out += ',';
        out += format_double(m.abscov);
        out += ',';
        out += format_double(m.energy);
        out += '\n';
    }
    write_text_file(path, out);
}

} // namespace swdl::io
