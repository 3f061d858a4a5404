#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wlanlab/sim_engine.hpp"

namespace wlanlab {

// Flat sectioned key=value scenario files ("[sim]" / "[stations]" /
// "[experiment]").  Unknown keys are errors; there are no silent defaults
// for protocol-relevant parameters.
class IniFile {
  public:
    static IniFile parse(const std::string& text, const std::string& origin = "<string>");
    static IniFile parse_file(const std::string& path);

    bool has(const std::string& key) const;
    std::string get(const std::string& key) const; // throws ConfigError if missing
    std::string get_or(const std::string& key, const std::string& fallback) const;
    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
    std::vector<std::pair<std::string, std::string>> section(const std::string& name) const;

  private:
    std::vector<std::pair<std::string, std::string>> entries_; // "section.key" -> value
    std::string origin_;
};

SimConfig sim_config_from_ini(const IniFile& ini);

struct ExperimentSpec {
    std::string name;
    std::vector<Protocol> protocols;
    std::string sweep_param;
    std::vector<double> sweep_values;
    SimConfig base;
    std::vector<uint64_t> seeds;
};

ExperimentSpec experiment_from_ini(const IniFile& ini);

// Applies one sweep point to a config (w_min, slot_us, sub_channels, n, ...).
void apply_sweep(SimConfig& config, const std::string& param, double value);

struct ResultRow {
    std::string experiment;
    std::string protocol;
    uint64_t seed = 0;
    std::string param;
    double value = 0.0;
    double throughput_mbps = 0.0;
    double goodput_mbps = 0.0;
    double collision_prob = 0.0;
    int64_t retransmissions = 0;
    double jain = 0.0;
    double maxmin_f = 0.0;
    double sim_time_s = 0.0;
};

struct ExperimentResult {
    std::vector<ResultRow> rows;
    bool partial = false;   // at least one run failed; rows hold the survivors
    std::string error;      // first failure message
};

// Full sweep x seeds x protocols cross product, deterministic row order
// regardless of worker count.
ExperimentResult run_experiment(const ExperimentSpec& spec, int workers = 1);

std::string results_csv(const std::vector<ResultRow>& rows, bool timestamp_header = true);
// Per (protocol, sweep point) mean/stddev over seeds.
std::string summary_csv(const std::vector<ResultRow>& rows);

// Built-in 40 MHz scheduling scenario; prints the initial and revised zone
// split, the per-station SRU grants, migrations, and merges.
std::string prs_worked_example();

// Preset scenario texts shipped with the binary (mirrored under presets/):
// "htfa_eval", "dcf_compare", "prs_indoor", "era_load".
std::string preset_text(const std::string& name);

} // namespace wlanlab
