#pragma once

#include <iosfwd>
#include <vector>

#include "swdl/config.hpp"
#include "swdl/detect.hpp"

namespace swdl {

/// Command bodies shared by the CLI and the integration tests. Each writes
/// its artifacts plus one manifest into cfg.out_dir and reports the emitted
/// file names. Errors surface as exceptions; the CLI maps them to exit codes.
namespace pipeline {

struct Emitted {
    std::vector<std::string> files;
};

/// Distribution grid(s): CSV + PGM (+ cross-method deviation report for
/// method = both). Throws DecompositionMismatch-style consistency failure as
/// Error subclass when the two paths disagree beyond the configured tolerance.
Emitted run_tfd(const RunConfig& cfg, std::ostream& log);

/// Moment and bound reports for the declared signal class.
Emitted run_bounds(const RunConfig& cfg, std::ostream& log);

/// Radon map and rate-amplitude curve of the configured distribution.
Emitted run_detect(const RunConfig& cfg, std::ostream& log);

/// Four-method comparison (grids, rate curves, summary).
Emitted run_experiment(const RunConfig& cfg, std::ostream& log);

/// The comparison record of run_experiment without touching the filesystem.
MethodComparison experiment_comparison(const RunConfig& cfg);

/// Consistency failure for method = both (exit code 4 in the CLI).
struct CrossMethodMismatch : Error {
    using Error::Error;
};

} // namespace pipeline
} // namespace swdl
