#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "wlanlab/channel.hpp"
#include "wlanlab/mac_primitives.hpp"
#include "wlanlab/ru_model.hpp"
#include "wlanlab/schedulers.hpp"

namespace wlanlab {

enum class Protocol { LegacyDCF, HTFA, ERA, PRS };
enum class Handshake { TwoWay, FourWay };

Protocol protocol_from_string(const std::string& s);
std::string protocol_name(Protocol p);

// dB thresholds -> per-SRU rate.  A station's path loss is looked up against
// the sorted thresholds; losses above the last threshold get the last rate.
// The default table is arbitrary (the source material maps no loss to rate)
// and fully overridable.
struct RateTable {
    struct Entry {
        double max_loss_db;
        double per_sru_mbps; // bits per microsecond per 26-tone unit
    };
    std::vector<Entry> entries;

    static RateTable flat(double per_sru_mbps);
    static RateTable default_table();
    double per_sru_rate(double loss_db) const;
};

struct SimConfig {
    Protocol protocol = Protocol::LegacyDCF;
    std::vector<Station> stations;
    Bandwidth bandwidth = Bandwidth::MHz40;
    LayoutKind layout_kind = LayoutKind::Standard;
    int sub_channels = 1; // M, for LegacyDCF/HTFA
    TimingParams timing;

    // Airtimes in microsecond ticks.
    int64_t data_airtime_us = 2500;
    int64_t rts_airtime_us = 50;
    int64_t cts_airtime_us = 40;
    int64_t tf_airtime_us = 50;
    int64_t header_airtime_us = 20;
    int64_t payload_airtime_us = 2000; // t_p inside a TF cycle
    int64_t propagation_delay_us = 1;

    // Total channel rate in bits per microsecond; a sub-channel carries
    // channel_rate_mbps / M.  SA cycles use the rate table per RU instead.
    double channel_rate_mbps = 100.0;
    RateTable rates = RateTable::default_table();
    PathLossParams path_loss;
    double radius_m = 15.0;
    int ap_antennas = 1;
    double antenna_exponent = 0.85;

    double fixed_payload_bits = 12000.0; // per data frame in DCF mode
    double era_ll_threshold = 2.0;

    double sim_duration_s = 1.0;
    uint64_t seed = 1;
    Handshake handshake = Handshake::FourWay;
    bool freeze_on_busy = true;
    // Pairs of station ids that cannot sense each other.
    std::vector<std::pair<std::string, std::string>> hidden_pairs;

    void validate() const;
};

struct StationMetrics {
    double offered_bits = 0.0;
    double delivered_bits = 0.0;
    double goodput_bits = 0.0;
    double dropped_bits = 0.0;
    double inflight_bits = 0.0;
    int64_t retransmissions = 0;
    int64_t collisions = 0;
    int64_t drops = 0;
};

struct SimMetrics {
    std::map<std::string, StationMetrics> per_station;
    int64_t simulated_us = 0;
    int64_t attempts = 0;
    int64_t colliding_attempts = 0;
    int64_t collision_events = 0;
    int64_t retransmissions = 0;
    int64_t successes = 0;
    int64_t idle_slots = 0;

    double throughput_mbps = 0.0;
    double goodput_mbps = 0.0;
    double collision_probability = 0.0; // conditional: colliding / attempts
    double jain = 0.0;
    double max_min_f = 0.0;
};

// TF cycle span: t_h + (t_tf + sifs + d) + (t_p + sifs + d) + (t_ack + sifs + d).
int64_t tf_cycle_duration(int64_t t_h, int64_t t_tf, int64_t t_p, int64_t t_ack, int64_t sifs,
                          int64_t delta);

// Deterministic run: identical (config, seed) yields identical metrics.
SimMetrics run(const SimConfig& config, std::ostream* trace = nullptr);

// One scheduled uplink cycle: every granted station transmits for the same
// airtime; per-station bits = rate(tones) * t_p; zero collisions.
std::map<std::string, double> run_sa_cycle(const std::vector<RuGrant>& grants,
                                           const SimConfig& config);

// Contention-state probe for unit tests: a standalone DCF sub-channel.
class DcfSubChannel {
  public:
    DcfSubChannel(std::vector<std::string> station_ids, const TimingParams& timing,
                  uint64_t seed);

    // Advances until at least `ticks` microseconds have elapsed; returns the
    // ids that transmitted in order of completion (collided ids grouped).
    struct Tx {
        std::vector<std::string> stations;
        bool collision = false;
        int64_t start_us = 0;
    };
    std::vector<Tx> advance(int64_t ticks, int64_t success_airtime_us,
                            int64_t collision_airtime_us);

    int counter_of(const std::string& id) const;
    int stage_of(const std::string& id) const;
    void set_counter(const std::string& id, int value);

  private:
    std::vector<std::string> ids_;
    std::vector<BackoffState> states_;
    TimingParams timing_;
    Rng rng_;
    int64_t now_ = 0;
};

// Metric assembly from raw counters.
void collect_metrics(SimMetrics& m, int64_t duration_us, const std::vector<Station>& stations);

// Airtime of one successful/collided exchange under the configured
// handshake, trailing inter-frame wait included.  The analytical RA model
// consumes the same values.
int64_t dcf_success_airtime(const SimConfig& c);
int64_t dcf_collision_airtime(const SimConfig& c);

} // namespace wlanlab
