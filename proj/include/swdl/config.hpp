#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "swdl/moments.hpp"
#include "swdl/signal.hpp"
#include "swdl/symplectic.hpp"

namespace swdl {

/// Sectioned key-value configuration (INI-style). Parsing keeps line numbers
/// so validation errors can point at the offending line or field.
class ConfigMap {
  public:
    static ConfigMap parse(const std::string& text);

    /// Override "section.key" with a value (CLI flags).
    void set(const std::string& dotted_key, const std::string& value);

    std::optional<std::string> get(const std::string& section,
                                   const std::string& key) const;
    std::string get_or(const std::string& section, const std::string& key,
                       const std::string& fallback) const;
    double get_double(const std::string& section, const std::string& key,
                      double fallback) const;
    std::size_t get_count(const std::string& section, const std::string& key,
                          std::size_t fallback) const;

    /// Sorted, normalized "section.key = value" text; hashed into manifests.
    std::string canonical() const;

    void merge_defaults(const ConfigMap& defaults);

  private:
    struct Entry {
        std::string value;
        int line = 0;
    };
    std::map<std::string, std::map<std::string, Entry>> data_;
};

/// Fully resolved run parameters.
struct RunConfig {
    Signal signal;
    std::string signal_kind;
    std::optional<double> lfm_alpha;
    std::optional<double> lfm_beta;
    SymplecticMatrix a1{1, 0, 0, 1};
    SymplecticMatrix a2{0, 1, -1, 0};
    AxisSpec t_axis{-5.0, 5.0, 201};
    AxisSpec u_axis{-5.0, 5.0, 201};
    AxisSpec slope_axis{0.0, 2.0, 101};
    std::filesystem::path out_dir = "out";
    std::string method = "definition"; ///< definition | equivalent | both
    SignalClass bound_class = SignalClass::arbitrary;
    double cross_method_tolerance = 1e-4;
    std::string canonical_text;

    static RunConfig resolve(const ConfigMap& map);
};

/// Built-in preset reproducing the synthesis experiment configuration
/// (LFM chirp over [-5,5] at 20 Hz with the matched matrices).
ConfigMap preset_fig1();

} // namespace swdl
