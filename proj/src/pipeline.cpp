#include "swdl/pipeline.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <ostream>

#include <json.hpp>

#include "swdl/io.hpp"

namespace swdl::pipeline {

namespace {

using nlohmann::json;

json matrix_json(const SymplecticMatrix& m) {
    return json::array({m.a(), m.b(), m.c(), m.d()});
}

json axis_json(const AxisSpec& a) {
    return json{{"lo", a.lo}, {"hi", a.hi}, {"count", a.count}};
}

void write_manifest(const RunConfig& cfg, const std::string& command,
                    const Emitted& emitted) {
    json m;
    m["command"] = command;
    m["config_hash"] =
        "fnv1a:" + std::to_string(io::fnv1a(cfg.canonical_text));
    m["versions"] = {{"swdl", io::library_version}};
    m["matrices"] = {{"a1", matrix_json(cfg.a1)}, {"a2", matrix_json(cfg.a2)}};
    m["grids"] = {{"t", axis_json(cfg.t_axis)},
                  {"u", axis_json(cfg.u_axis)},
                  {"slope", axis_json(cfg.slope_axis)}};
    m["method"] = cfg.method;
    m["tolerances"] = {{"cross_method", cfg.cross_method_tolerance}};
    m["normalization"] = "pgm heatmaps are per-file peak normalized";
    m["files"] = emitted.files;
    io::write_text_file(cfg.out_dir / "manifest.json", m.dump(2) + "\n");
}

std::filesystem::path ensure_out_dir(const RunConfig& cfg) {
    std::filesystem::create_directories(cfg.out_dir);
    return cfg.out_dir;
}

void emit_grid(const std::filesystem::path& dir, const std::string& stem,
               const TFGrid& g, Emitted& emitted) {
    io::write_tfgrid_csv(dir / (stem + ".csv"), g);
    io::write_tfgrid_pgm(dir / (stem + ".pgm"), g);
    emitted.files.push_back(stem + ".csv");
    emitted.files.push_back(stem + ".pgm");
}

} // namespace

Emitted run_tfd(const RunConfig& cfg, std::ostream& log) {
    const auto dir = ensure_out_dir(cfg);
    Emitted emitted;
    std::optional<TFGrid> def, equiv;
    if (cfg.method == "definition" || cfg.method == "both") {
        def = swdl_definition(cfg.signal, cfg.a1, cfg.a2, cfg.t_axis, cfg.u_axis);
        emit_grid(dir, "tfd_definition", *def, emitted);
    }
    if (cfg.method == "equivalent" || cfg.method == "both") {
        equiv = swdl_equivalent(cfg.signal, cfg.a1, cfg.a2, cfg.t_axis, cfg.u_axis);
        emit_grid(dir, "tfd_equivalent", *equiv, emitted);
    }
    if (cfg.method == "both") {
        const double dev = grid_rel_l2_distance(*def, *equiv);
        std::string report = "relative_l2_deviation = " + io::format_double(dev) +
                             "\ntolerance = " +
                             io::format_double(cfg.cross_method_tolerance) + "\n";
        io::write_text_file(dir / "cross_method.txt", report);
        emitted.files.push_back("cross_method.txt");
        log << "cross-method deviation " << dev << "\n";
        write_manifest(cfg, "tfd", emitted);
        if (dev > cfg.cross_method_tolerance) {
            throw CrossMethodMismatch(
                "definition/equivalent deviation " + io::format_double(dev) +
                " exceeds tolerance " +
                io::format_double(cfg.cross_method_tolerance));
        }
        return emitted;
    }
    write_manifest(cfg, "tfd", emitted);
    return emitted;
}

Emitted run_bounds(const RunConfig& cfg, std::ostream& log) {
    const auto dir = ensure_out_dir(cfg);
    if (cfg.bound_class == SignalClass::real_valued) {
        // guard against misusing the real-signal bound on complex data
        const Interval supp = cfg.signal.support();
        double max_abs = 0.0, max_im = 0.0;
        for (int i = 0; i <= 1000; ++i) {
            const double t = supp.lo + supp.length() * i / 1000.0;
            const cplx v = cfg.signal(t);
            max_abs = std::max(max_abs, std::abs(v));
            max_im = std::max(max_im, std::abs(v.imag()));
        }
        if (max_im > 1e-12 * std::max(max_abs, 1e-300)) {
            throw DegenerateInput(
                "bounds class \"real\" declared for a non-real signal");
        }
    }
    const auto [tg, ug] = suggest_grids(cfg.signal, cfg.a1, cfg.a2);
    const MomentReport rep = moment_report(cfg.signal, cfg.a1, cfg.a2, tg, ug);
    const BoundReport bound = lower_bound(cfg.bound_class, cfg.a1, cfg.a2, rep);
    io::write_text_file(dir / "moments.txt", io::moment_report_kv(rep));
    io::write_text_file(dir / "bounds.txt", io::bound_report_kv(bound));
    io::write_reports_csv(dir / "bounds.csv", rep, {bound});
    Emitted emitted{{"moments.txt", "bounds.txt", "bounds.csv"}};
    write_manifest(cfg, "bounds", emitted);
    log << "attained = " << (bound.attained ? "true" : "false") << "\n";
    return emitted;
}

Emitted run_detect(const RunConfig& cfg, std::ostream& log) {
    const auto dir = ensure_out_dir(cfg);
    const Method method =
        cfg.method == "equivalent" ? Method::equivalent : Method::definition;
    const TFGrid g = swdl(cfg.signal, cfg.a1, cfg.a2, cfg.t_axis, cfg.u_axis,
                          method);
    const RadonMap rm = radon(g, cfg.slope_axis, cfg.u_axis);
    const RateAmplitude ra =
        rate_distribution(rm, cfg.a1, cfg.a2, cfg.lfm_alpha);
    Emitted emitted;
    emit_grid(dir, "tfd", g, emitted);
    io::write_radon_csv(dir / "radon.csv", rm);
    io::write_rate_amplitude_csv(dir / "rate_amplitude.csv", ra);
    emitted.files.push_back("radon.csv");
    emitted.files.push_back("rate_amplitude.csv");
    write_manifest(cfg, "detect", emitted);
    log << "peak_rate = " << ra.peak_rate
        << "  peak_to_mean = " << ra.peak_to_mean << "\n";
    return emitted;
}

MethodComparison experiment_comparison(const RunConfig& cfg) {
    return compare_methods(cfg.signal, cfg.a1, cfg.a2, cfg.t_axis, cfg.u_axis,
                           cfg.slope_axis, cfg.lfm_alpha);
}

Emitted run_experiment(const RunConfig& cfg, std::ostream& log) {
    const auto dir = ensure_out_dir(cfg);
    const MethodComparison cmp = experiment_comparison(cfg);
    Emitted emitted;
    std::string summary = "method,peak_rate,peak_to_mean,normalized_peak\n";
    for (const auto& m : cmp.methods) {
        std::string stem = m.name;
        for (auto& ch : stem) ch = static_cast<char>(std::tolower(ch));
        io::write_tfgrid_pgm(dir / (stem + ".pgm"), m.grid);
        io::write_rate_amplitude_csv(dir / (stem + "_rate.csv"), m.rates);
        emitted.files.push_back(stem + ".pgm");
        emitted.files.push_back(stem + "_rate.csv");
        summary += m.name + "," + io::format_double(m.peak_rate) + "," +
                   io::format_double(m.peak_to_mean) + "," +
                   io::format_double(m.normalized_peak) + "\n";
        log << m.name << ": peak_rate=" << m.peak_rate
            << " peak_to_mean=" << m.peak_to_mean << "\n";
    }
    io::write_text_file(dir / "comparison.csv", summary);
    emitted.files.push_back("comparison.csv");
    write_manifest(cfg, "experiment", emitted);
    return emitted;
}

} // namespace swdl::pipeline
