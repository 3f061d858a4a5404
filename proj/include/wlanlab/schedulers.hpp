#pragma once

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wlanlab/errors.hpp"
#include "wlanlab/ru_model.hpp"

namespace wlanlab {

enum class AccessMode { SA, RA };

struct Station {
    std::string id;
    double load = 0.0; // bits or Mbps, unit fixed per scenario
    AccessMode mode = AccessMode::SA;
    int antennas = 1;
};

// ---------------------------------------------------------------------------
// HTFA: station-to-sub-channel distribution
// ---------------------------------------------------------------------------

// Invariants:
//  - N >= M: per-sub-channel station counts differ by at most 1, none empty,
//    each station sits on exactly one sub-channel.
//  - N <  M: every sub-channel has exactly one owner, per-station channel
//    counts differ by at most 1, every station owns at least one.
// Ties always break toward the lowest sub-channel index, then the lowest
// station id.
class HtfaState {
  public:
    explicit HtfaState(int m);

    int sub_channel_count() const { return static_cast<int>(channels_.size()); }
    int station_count() const;
    const std::vector<std::string>& stations_on(int channel) const;
    std::vector<int> channels_of(const std::string& id) const;
    std::vector<std::string> all_stations() const;
    bool contains(const std::string& id) const;

    bool invariants_hold() const;

  private:
    friend HtfaState htfa_distribute(const std::vector<Station>& stations, int m);
    friend HtfaState htfa_join(const HtfaState& state, const Station& sta);
    friend HtfaState htfa_leave(const HtfaState& state, const std::string& id);
    void rebalance();
    std::vector<std::vector<std::string>> channels_;
};

HtfaState htfa_distribute(const std::vector<Station>& stations, int m);
HtfaState htfa_join(const HtfaState& state, const Station& sta);
HtfaState htfa_leave(const HtfaState& state, const std::string& id);

// ---------------------------------------------------------------------------
// ERA: load classification and RU assignment
// ---------------------------------------------------------------------------

enum class LoadClass { LL, ML, HL };

// LL iff load <= 1.5*LL, ML iff load <= 3*LL, else HL; boundaries inclusive
// to the lighter class.  Nonpositive loads are rejected (InvalidLoad).
LoadClass era_classify_one(double load, double ll_threshold);
std::map<std::string, LoadClass> era_classify(const std::vector<Station>& stations,
                                              double ll_threshold);

// FCFS queues keyed by load class, arrival order = BSR order.
struct EraQueues {
    std::deque<std::string> hl;
    std::deque<std::string> ml;
    std::deque<std::string> ll;
    bool empty() const { return hl.empty() && ml.empty() && ll.empty(); }
};

struct RuGrant {
    std::string station;
    RuNode ru;
};

// One flow of the RU assignment algorithm on a Binary layout (levels 1-3;
// the whole-channel unit is never granted).  Served stations are popped,
// unserved ones stay queued for the next flow.  All queues empty ->
// ConfigError (EmptyFlow).
std::vector<RuGrant> era_assign(EraQueues& queues, const RuLayout& layout);

// ---------------------------------------------------------------------------
// PRS: proportional SA/RA zoning
// ---------------------------------------------------------------------------

struct PrsInitial {
    int s = 0; // SRUs for the SA-zone
    int t = 0; // SRUs for the RA-zone
    double l1 = 0.0;
    double l2 = 0.0;
};

// s = floor((L1/L3) m); t = ceil((L2/L3) m).  literal_floor switches t to
// the floor variant.  All-zero load -> ConfigError (NoLoad).
PrsInitial prs_initial(const std::vector<double>& sa_loads, const std::vector<double>& ra_loads,
                       int m, bool literal_floor = false);

struct PrsRevised {
    std::vector<int> r;                 // per-SA-station SRU counts, input order
    int u = 0;                          // SA-zone SRUs
    int v = 0;                          // RA-zone SRUs
    std::vector<std::size_t> migrated;  // indices of stations moved to the RA-zone
};

// r_i = floor((p_i/L1) s); stations with r_i = 0 migrate to the RA-zone.
// v >= 1 is enforced: if the grants fill the whole line, the last granted
// station gives one SRU back.
PrsRevised prs_revised(const std::vector<double>& sa_loads, int s, int m);

struct SruRange {
    int first = 0; // 1-based, inclusive
    int last = 0;
    int width() const { return last - first + 1; }
};

struct PrsPlacement {
    struct StationPlacement {
        std::string station;
        SruRange range;
        std::vector<RuNode> rus; // merged units covering the range, left to right
    };
    std::vector<StationPlacement> sa;
    SruRange ra_zone; // remaining right-side SRUs, one logical channel
};

// Contiguous left-to-right FCFS placement from SRU 1; within each station's
// run adjacent SRUs merge greedily into the widest valid unit.
PrsPlacement prs_place(const std::vector<std::pair<std::string, int>>& grants,
                       const RuLayout& layout);

} // namespace wlanlab
