#ifndef KERRSIM_SCENARIO_HPP
#define KERRSIM_SCENARIO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kerrsim/dynamics.hpp"
#include "kerrsim/model.hpp"

namespace kerrsim {

enum class EngineKind { Continuous, Kicked, KickedDissipative };

struct TargetSpec {
    enum class Kind { None, FdCoherent, FdSqueezed };
    Kind kind = Kind::None;
    Complex parameter = 0.0;  // alpha or xi
};

/// One declarative simulation scenario; loaded from a single JSON document.
struct ScenarioConfig {
    std::string name;
    EngineKind engine = EngineKind::Continuous;
    KerrModel model;
    double gamma = 0.0;
    double duration = 0.0;
    int n_pulses = 0;
    int sample_count = 2;
    TargetSpec target;

    static ScenarioConfig from_json(const nlohmann::json& j);
    static ScenarioConfig load(const std::string& path);
    void validate() const;

    std::string csv_filename() const { return name + ".csv"; }
    std::string report_filename() const { return name + "_report.json"; }
};

struct LevelStats {
    int level = 0;
    double peak = 0.0;
    double trough = 0.0;
};

struct FidelitySummary {
    double min = 0.0, mean = 0.0, max = 0.0;
};

struct RunReport {
    std::string scenario;
    std::string engine;
    std::vector<LevelStats> levels;
    double max_leakage = 0.0;  // max over time of the probability at levels >= order
    std::optional<FidelitySummary> fidelity;
    double wall_seconds = 0.0;
    int samples = 0;

    struct Check {
        int order = 0;
        double max_deviation = 0.0;
        double bound = 0.0;
        bool pass = false;
    };
    std::vector<Check> checks;  // populated by verify_closed_forms

    bool all_checks_pass() const;
    nlohmann::json to_json() const;
};

/// Execute the scenario, write "<name>.csv" and "<name>_report.json" into
/// out_dir.  The CSV is byte-identical across runs of the same config.
RunReport run_scenario(const ScenarioConfig& config, const std::string& out_dir);

/// Continuous evolution versus the closed-form manifold coefficients for each
/// N in [2, n_max]; a check fails when the worst probability deviation
/// exceeds `bound`.
RunReport verify_closed_forms(int n_max, double bound = 1e-2,
                              double eps = 0.06283185307179586, double chi = 1.0);

/// CSV with header t,P_0..P_{dim-1}[,fidelity]; 17 significant digits, LF.
void write_csv(const std::string& path, const SimulationResult& result);

std::string engine_name(EngineKind engine);

}  // namespace kerrsim

#endif
