// Command-line front end: config-driven, file-emitting runs of the
// distribution engines, bound reports, detection and the four-method
// experiment. Exit codes: 0 success, 2 config error, 3 numeric precondition
// error, 4 tolerance/consistency failure.

#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "swdl/io.hpp"
#include "swdl/pipeline.hpp"

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_dir;
    std::string method;
    std::string preset;
    std::vector<std::string> overrides;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "configuration file (INI-style)");
    cmd->add_option("--out", opts.out_dir, "output directory");
    cmd->add_option("--method", opts.method,
                    "computation path: definition|equivalent|both");
    cmd->add_option("--preset", opts.preset, "built-in preset (fig1)");
    cmd->add_option("--set", opts.overrides,
                    "override a config entry, section.key=value (repeatable)");
}

swdl::RunConfig build_config(const CommonOpts& opts) {
    swdl::ConfigMap map;
    if (!opts.preset.empty()) {
        if (opts.preset != "fig1") {
            throw swdl::ConfigError("unknown preset \"" + opts.preset + "\"");
        }
        map = swdl::preset_fig1();
    }
    if (!opts.config_path.empty()) {
        std::string text;
        try {
            text = swdl::io::read_text_file(opts.config_path);
        } catch (const swdl::Error& e) {
            throw swdl::ConfigError(e.what());
        }
        swdl::ConfigMap file = swdl::ConfigMap::parse(text);
        file.merge_defaults(map);
        map = std::move(file);
    }
    for (const auto& kv : opts.overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) {
            throw swdl::ConfigError("--set expects section.key=value, got \"" + kv +
                                    "\"");
        }
        map.set(swdl::io::trim(kv.substr(0, eq)), swdl::io::trim(kv.substr(eq + 1)));
    }
    if (!opts.out_dir.empty()) map.set("output.dir", opts.out_dir);
    if (!opts.method.empty()) map.set("output.method", opts.method);
    return swdl::RunConfig::resolve(map);
}

int run_guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const swdl::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const swdl::pipeline::CrossMethodMismatch& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return 4;
    } catch (const swdl::DecompositionMismatch& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return 4;
    } catch (const swdl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symplectic Wigner distribution toolbox"};
    app.require_subcommand(1);

    CommonOpts tfd_opts, bounds_opts, detect_opts, exp_opts;
    auto* tfd_cmd =
        app.add_subcommand("tfd", "compute a distribution grid (CSV + PGM)");
    add_common(tfd_cmd, tfd_opts);
    auto* bounds_cmd =
        app.add_subcommand("bounds", "moment and uncertainty-bound reports");
    add_common(bounds_cmd, bounds_opts);
    bounds_cmd->add_option("--class", bounds_opts.overrides,
                           "signal class: arbitrary|real|complex")
        ->transform([](std::string s) { return "bounds.class=" + s; });
    auto* detect_cmd = app.add_subcommand(
        "detect", "Radon map and frequency-rate curve of the distribution");
    add_common(detect_cmd, detect_opts);
    auto* exp_cmd = app.add_subcommand(
        "experiment", "four-method comparison (grids, rate curves, summary)");
    add_common(exp_cmd, exp_opts);

    std::string opt_a1_params = "2,2";
    std::string opt_lfm_params;
    auto* optimize_cmd = app.add_subcommand(
        "optimize", "print the bound-minimizing A1 (and matched LFM A2)");
    optimize_cmd->add_option("--a1-params", opt_a1_params,
                             "free parameters \"a1,b1\"");
    optimize_cmd->add_option("--lfm-params", opt_lfm_params,
                             "optional \"beta,b2,d2\" for the matched A2");

    CLI11_PARSE(app, argc, argv);

    if (tfd_cmd->parsed()) {
        return run_guarded([&] {
            swdl::pipeline::run_tfd(build_config(tfd_opts), std::cout);
            return 0;
        });
    }
    if (bounds_cmd->parsed()) {
        return run_guarded([&] {
            swdl::pipeline::run_bounds(build_config(bounds_opts), std::cout);
            return 0;
        });
    }
    if (detect_cmd->parsed()) {
        return run_guarded([&] {
            swdl::pipeline::run_detect(build_config(detect_opts), std::cout);
            return 0;
        });
    }
    if (exp_cmd->parsed()) {
        return run_guarded([&] {
            swdl::pipeline::run_experiment(build_config(exp_opts), std::cout);
            return 0;
        });
    }
    if (optimize_cmd->parsed()) {
        return run_guarded([&] {
            const auto p = swdl::io::split_csv_line(opt_a1_params);
            if (p.size() != 2) {
                throw swdl::ConfigError("--a1-params expects \"a1,b1\"");
            }
            const auto a1 = swdl::optimal_a1(swdl::io::parse_double(p[0]),
                                             swdl::io::parse_double(p[1]));
            std::cout << "A1 = " << a1.to_csv() << "\n";
            std::cout << "resolution_bound(A1, b2=1) = "
                      << swdl::io::format_double(
                             swdl::resolution_bound(a1, swdl::matrices::l1()))
                      << "\n";
            if (!opt_lfm_params.empty()) {
                const auto q = swdl::io::split_csv_line(opt_lfm_params);
                if (q.size() != 3) {
                    throw swdl::ConfigError("--lfm-params expects \"beta,b2,d2\"");
                }
                const auto a2 = swdl::lfm_a2(
                    swdl::io::parse_double(q[0]), swdl::io::parse_double(q[1]),
                    swdl::io::parse_double(q[2]), a1.a(), a1.b());
                std::cout << "A2 = " << a2.to_csv() << "\n";
                const auto flags = swdl::superresolution_flags(a1, a2);
                std::cout << "beats_swd = " << (flags.beats_swd ? "true" : "false")
                          << "\nbeats_wdl = "
                          << (flags.beats_wdl ? "true" : "false") << "\n";
            }
            return 0;
        });
    }
    return 0;
}
