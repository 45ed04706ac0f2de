#pragma once
#include <stdexcept>
#include <string>
#include <vector>

#include "tcm3/cmat.hpp"
#include "tcm3/dynamics.hpp"

namespace tcm3 {

// Thrown when a run trips a numeric invariant (norm drift); the CLI maps it
// to exit code 2 rather than the generic validation failure.
struct numeric_abort : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Scenario {
    std::string name;                         // defaults to the atoms kind
    std::string atoms_kind = "eee";           // eee | ghz | w | custom
    AtomicInitState atoms{1.0, 0.0, 0.0, 0.0};
    cx alpha0 = 10.0;
    double tau_start = 0.0;
    double tau_end = -1.0;  // < tau_start means "default": 2*pi*sqrt(nbar) + 2
    double tau_step = 0.05;
    std::vector<std::string> products{"inversions", "entanglement", "negativity"};
    double q_re_min = -15.0, q_re_max = 15.0;
    double q_im_min = -15.0, q_im_max = 15.0;
    std::size_t q_nx = 201, q_ny = 201;
    std::string output_dir = ".";

    double nbar() const { return std::norm(alpha0); }
    double resolved_tau_end() const;
    bool wants(const std::string& product) const;
    std::string display_name() const { return name.empty() ? atoms_kind : name; }
};

// Line-oriented "key = value" config; '#' starts a comment; unknown keys,
// malformed values, and unnormalized custom atoms are rejected with the
// offending line number.
Scenario parse_config(const std::string& text);

struct RunResult {
    std::vector<std::string> files;  // paths written, in emission order
    std::size_t n_max = 0;
    double tail_mass = 0;
    double wall_seconds = 0;
};

// Evolves the scenario over its tau grid and emits series.csv, Q-grid CSVs,
// SVG renderings, and the run manifest into output_dir.
RunResult run_scenario(const Scenario& s, bool svg = true);

// Write-temp-then-rename so rerun output never appears half-written.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace tcm3
