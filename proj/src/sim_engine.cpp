#include "wlanlab/sim_engine.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "wlanlab/analytics.hpp"

namespace wlanlab {

Protocol protocol_from_string(const std::string& s)
{
    if (s == "LegacyDCF" || s == "dcf" || s == "legacy_dcf")
        return Protocol::LegacyDCF;
    if (s == "HTFA" || s == "htfa")
        return Protocol::HTFA;
    if (s == "ERA" || s == "era")
        return Protocol::ERA;
    if (s == "PRS" || s == "prs")
        return Protocol::PRS;
    throw ConfigError("unknown protocol: " + s);
}

std::string protocol_name(Protocol p)
{
    switch (p) {
    case Protocol::LegacyDCF:
        return "LegacyDCF";
    case Protocol::HTFA:
        return "HTFA";
    case Protocol::ERA:
        return "ERA";
    case Protocol::PRS:
        return "PRS";
    }
    return "?";
}

RateTable RateTable::flat(double per_sru_mbps)
{
    RateTable t;
    t.entries.push_back({1e9, per_sru_mbps});
    return t;
}

RateTable RateTable::default_table()
{
    // Arbitrary loss->rate steps; override per scenario.
    RateTable t;
    t.entries.push_back({70.0, 8.0});
    t.entries.push_back({85.0, 6.0});
    t.entries.push_back({100.0, 4.0});
    t.entries.push_back({1e9, 2.0});
    return t;
}

double RateTable::per_sru_rate(double loss_db) const
{
    if (entries.empty())
        throw ConfigError("empty rate table");
    for (const auto& e : entries)
        if (loss_db <= e.max_loss_db)
            return e.per_sru_mbps;
    return entries.back().per_sru_mbps;
}

void SimConfig::validate() const
{
    timing.validate();
    if (sim_duration_s <= 0.0)
        throw ConfigError("sim_duration must be positive");
    if (stations.empty())
        throw ConfigError("no stations configured");
    if (sub_channels < 1)
        throw ConfigError("sub_channels must be at least 1");
    if (fixed_payload_bits <= 0.0)
        throw ConfigError("payload bits must be positive");
    if (rates.entries.empty())
        throw ConfigError("empty rate table");
    std::set<std::string> ids;
    for (const auto& sta : stations)
        if (!ids.insert(sta.id).second)
            throw ConfigError("duplicate station id: " + sta.id);
    for (const auto& [a, b] : hidden_pairs) {
        if (!ids.count(a) || !ids.count(b))
            throw ConfigError("hidden pair references unknown station");
    }
}

int64_t tf_cycle_duration(int64_t t_h, int64_t t_tf, int64_t t_p, int64_t t_ack, int64_t sifs,
                          int64_t delta)
{
    return t_h + (t_tf + sifs + delta) + (t_p + sifs + delta) + (t_ack + sifs + delta);
}

namespace {

constexpr int kAckOctets = 14;
constexpr int kRtsOctets = 20;
constexpr int kCtsOctets = 14;

int64_t success_airtime(const SimConfig& c)
{
    int64_t t = c.data_airtime_us + c.timing.sifs_us + c.timing.ack_time_us + difs(c.timing);
    if (c.handshake == Handshake::FourWay)
        t += c.rts_airtime_us + c.timing.sifs_us + c.cts_airtime_us + c.timing.sifs_us;
    return t;
}

int64_t collision_airtime(const SimConfig& c)
{
    // With RTS/CTS only the RTS burns the medium; basic access loses the
    // whole data frame.  Both end with the EIFS wait.
    const int64_t lost =
        (c.handshake == Handshake::FourWay) ? c.rts_airtime_us : c.data_airtime_us;
    return lost + eifs(c.timing);
}

double overhead_bits(const SimConfig& c)
{
    double octets = kMacHeaderOctets + kMacCrcOctets + kAckOctets;
    if (c.handshake == Handshake::FourWay)
        octets += kRtsOctets + kCtsOctets;
    return 8.0 * octets;
}

double antenna_factor(const SimConfig& c, const Station& sta)
{
    const int streams = std::min(c.ap_antennas, sta.antennas);
    return std::pow(static_cast<double>(streams), c.antenna_exponent);
}

double station_loss_db(const SimConfig& c, std::size_t index)
{
    // Stations sit at deterministic distances spread over the radius.
    const double n = static_cast<double>(c.stations.size());
    const double d = std::max(0.5, c.radius_m * (static_cast<double>(index) + 1.0) / n);
    return overall_indoor_pl(d, c.path_loss);
}

struct StationRef {
    std::size_t index; // into config.stations
    const Station* sta;
};

// Slotted DCF contention on one sub-channel.
struct DcfGroup {
    const SimConfig& cfg;
    std::vector<StationRef> members;
    double bits_per_frame;
    Rng rng;
    std::ostream* trace = nullptr;
    int channel = 0;

    std::vector<BackoffState> states;
    int64_t now = 0;

    bool hidden(const std::string& a, const std::string& b) const
    {
        for (const auto& [x, y] : cfg.hidden_pairs)
            if ((x == a && y == b) || (x == b && y == a))
                return true;
        return false;
    }

    void new_frame(SimMetrics& m, std::size_t local)
    {
        m.per_station[members[local].sta->id].offered_bits += bits_per_frame;
    }

    void redraw(std::size_t local)
    {
        states[local].counter = backoff_draw(states[local], cfg.timing, rng);
    }

    void fail(SimMetrics& m, std::size_t local)
    {
        auto& sm = m.per_station[members[local].sta->id];
        sm.retransmissions += 1;
        sm.collisions += 1;
        m.retransmissions += 1;
        states[local] = next_stage(states[local], TxOutcome::Collision, cfg.timing);
        if (frame_dropped(states[local], cfg.timing)) {
            sm.drops += 1;
            sm.dropped_bits += bits_per_frame;
            states[local] = BackoffState{};
            new_frame(m, local);
        }
        redraw(local);
    }

    void succeed(SimMetrics& m, std::size_t local)
    {
        auto& sm = m.per_station[members[local].sta->id];
        sm.delivered_bits += bits_per_frame;
        sm.goodput_bits += std::max(0.0, bits_per_frame - overhead_bits(cfg));
        m.successes += 1;
        states[local] = next_stage(states[local], TxOutcome::Success, cfg.timing);
        new_frame(m, local);
        redraw(local);
    }

    void run(SimMetrics& m, int64_t end_us)
    {
        const int64_t t_s = success_airtime(cfg);
        const int64_t t_c = collision_airtime(cfg);
        const int64_t slot = cfg.timing.slot_us;

        states.assign(members.size(), BackoffState{});
        for (std::size_t i = 0; i < members.size(); ++i) {
            new_frame(m, i); // saturation: a frame is always pending
            redraw(i);
        }
        now = difs(cfg.timing);
        while (now < end_us) {
            int cmin = states[0].counter;
            for (const auto& s : states)
                cmin = std::min(cmin, s.counter);
            now += static_cast<int64_t>(cmin) * slot;
            m.idle_slots += cmin;
            if (now >= end_us)
                break;
            std::vector<std::size_t> txs;
            for (std::size_t i = 0; i < states.size(); ++i) {
                if (states[i].counter == cmin)
                    txs.push_back(i);
                else
                    states[i].counter -= cmin;
            }
            m.attempts += static_cast<int64_t>(txs.size());
            auto busy_decrement = [&](const std::vector<std::size_t>& transmitters, int64_t air) {
                // Figure-2.3 variant: counters keep running while the medium
                // is busy (freeze_on_busy = false).
                if (cfg.freeze_on_busy)
                    return;
                const int air_slots = static_cast<int>(air / slot);
                for (std::size_t i = 0; i < states.size(); ++i) {
                    if (std::find(transmitters.begin(), transmitters.end(), i) !=
                        transmitters.end())
                        continue;
                    states[i].counter = std::max(0, states[i].counter - air_slots);
                }
            };
            if (txs.size() == 1) {
                const std::size_t s = txs[0];
                // Stations hidden from the transmitter keep counting down
                // and may start an overlapping transmission.
                std::vector<std::size_t> overlap;
                const int64_t air_slots = t_s / slot;
                for (std::size_t i = 0; i < states.size(); ++i) {
                    if (i == s)
                        continue;
                    if (!hidden(members[s].sta->id, members[i].sta->id))
                        continue;
                    if (states[i].counter <= air_slots) {
                        overlap.push_back(i);
                        m.attempts += 1;
                    } else {
                        states[i].counter -= static_cast<int>(air_slots);
                    }
                }
                if (overlap.empty()) {
                    if (trace)
                        *trace << now << "\tTX_SUCCESS\t" << channel << "\t"
                               << members[s].sta->id << "\t-\n";
                    succeed(m, s);
                    busy_decrement({s}, t_s);
                    now += t_s;
                } else {
                    m.collision_events += 1;
                    m.colliding_attempts += 1 + static_cast<int64_t>(overlap.size());
                    if (trace)
                        *trace << now << "\tHIDDEN_COLLISION\t" << channel << "\t"
                               << members[s].sta->id << "\toverlap=" << overlap.size() << "\n";
                    fail(m, s);
                    for (std::size_t i : overlap)
                        fail(m, i);
                    auto all_tx = overlap;
                    all_tx.push_back(s);
                    busy_decrement(all_tx, t_c);
                    now += t_c;
                }
            } else {
                m.collision_events += 1;
                m.colliding_attempts += static_cast<int64_t>(txs.size());
                if (trace)
                    *trace << now << "\tCOLLISION\t" << channel << "\t-\tn=" << txs.size()
                           << "\n";
                for (std::size_t i : txs)
                    fail(m, i);
                busy_decrement(txs, t_c);
                now += t_c;
            }
        }
        // Whatever frame is pending at the end stays in flight.
        for (const auto& ref : members) {
            auto& sm = m.per_station[ref.sta->id];
            sm.inflight_bits = sm.offered_bits - sm.delivered_bits - sm.dropped_bits;
        }
    }

    // No contenders: two-way DATA/ACK loop without DIFS or backoff.
    void run_dedicated(SimMetrics& m, int64_t end_us)
    {
        const int64_t cycle = cfg.data_airtime_us + cfg.timing.sifs_us + cfg.timing.ack_time_us +
                              cfg.timing.sifs_us;
        const std::size_t s = 0;
        auto& sm = m.per_station[members[s].sta->id];
        now = 0;
        while (now + cycle <= end_us) {
            sm.offered_bits += bits_per_frame;
            sm.delivered_bits += bits_per_frame;
            sm.goodput_bits +=
                std::max(0.0, bits_per_frame - 8.0 * (kMacHeaderOctets + kMacCrcOctets + kAckOctets));
            m.successes += 1;
            m.attempts += 1;
            now += cycle;
            if (trace)
                *trace << now << "\tTX_SUCCESS\t" << channel << "\t" << members[s].sta->id
                       << "\tdedicated\n";
        }
    }
};

uint64_t group_seed(uint64_t base, int group)
{
    uint64_t x = base + 0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(group + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    return x;
}

} // namespace

std::map<std::string, double> run_sa_cycle(const std::vector<RuGrant>& grants,
                                           const SimConfig& config)
{
    std::map<std::string, double> out;
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < config.stations.size(); ++i)
        index[config.stations[i].id] = i;
    for (const auto& g : grants) {
        const auto it = index.find(g.station);
        if (it == index.end())
            throw ConfigError("grant for unknown station " + g.station);
        const Station& sta = config.stations[it->second];
        const double loss = station_loss_db(config, it->second);
        const double rate = config.rates.per_sru_rate(loss) * (g.ru.tones / 26.0) *
                            antenna_factor(config, sta);
        out[g.station] += rate * static_cast<double>(config.payload_airtime_us);
    }
    return out;
}

namespace {

// Scheduled-access loop shared by ERA and the PRS SA-zone.
void run_sa_loop(const SimConfig& cfg, SimMetrics& m, int64_t end_us,
                 const std::function<std::vector<RuGrant>()>& next_flow, std::ostream* trace)
{
    const int64_t cycle =
        tf_cycle_duration(cfg.header_airtime_us, cfg.tf_airtime_us, cfg.payload_airtime_us,
                          cfg.timing.ack_time_us, cfg.timing.sifs_us, cfg.propagation_delay_us);
    if (cycle <= 0)
        throw ConfigError("TF cycle duration must be positive");
    int64_t now = 0;
    while (now + cycle <= end_us) {
        const auto grants = next_flow();
        if (grants.empty())
            break;
        const auto bits = run_sa_cycle(grants, cfg);
        for (const auto& [id, b] : bits) {
            auto& sm = m.per_station[id];
            sm.offered_bits += b;
            sm.delivered_bits += b;
            sm.goodput_bits += std::max(0.0, b - 8.0 * (kMacHeaderOctets + kMacCrcOctets));
        }
        m.successes += static_cast<int64_t>(grants.size());
        now += cycle;
        if (trace)
            *trace << now << "\tSA_CYCLE\t-\t-\tgrants=" << grants.size() << "\n";
    }
}

void run_dcf_groups(const SimConfig& cfg, SimMetrics& m,
                    const std::vector<std::vector<StationRef>>& groups, double bits_per_frame,
                    int64_t end_us, std::ostream* trace)
{
    for (std::size_t g = 0; g < groups.size(); ++g) {
        if (groups[g].empty())
            continue;
        DcfGroup group{cfg, groups[g], bits_per_frame, Rng(group_seed(cfg.seed, (int)g)), trace,
                       static_cast<int>(g)};
        if (groups[g].size() == 1)
            group.run_dedicated(m, end_us);
        else
            group.run(m, end_us);
    }
}

} // namespace

void collect_metrics(SimMetrics& m, int64_t duration_us, const std::vector<Station>& stations)
{
    m.simulated_us = duration_us;
    double delivered = 0.0, goodput = 0.0;
    std::vector<double> per_sta, loads;
    bool loads_ok = true;
    for (const auto& sta : stations) {
        const auto& sm = m.per_station[sta.id];
        delivered += sm.delivered_bits;
        goodput += sm.goodput_bits;
        per_sta.push_back(sm.delivered_bits);
        if (sta.load > 0.0)
            loads.push_back(sta.load);
        else
            loads_ok = false;
    }
    const double dur = static_cast<double>(duration_us);
    m.throughput_mbps = delivered / dur; // bits per microsecond == Mbps
    m.goodput_mbps = goodput / dur;
    m.collision_probability =
        (m.attempts > 0) ? static_cast<double>(m.colliding_attempts) / m.attempts : 0.0;
    const bool any = std::any_of(per_sta.begin(), per_sta.end(), [](double v) { return v > 0.0; });
    m.jain = any ? jain_index(per_sta) : 0.0;
    if (loads_ok && loads.size() == per_sta.size()) {
        m.max_min_f = max_min_fairness(per_sta, loads);
    } else {
        // Saturation scenarios carry no offered-load figure; normalize by
        // offered bits instead.
        std::vector<double> offered;
        for (const auto& sta : stations)
            offered.push_back(std::max(1.0, m.per_station[sta.id].offered_bits));
        m.max_min_f = any ? max_min_fairness(per_sta, offered) : 0.0;
    }
}

SimMetrics run(const SimConfig& config, std::ostream* trace)
{
    config.validate();
    SimMetrics m;
    for (const auto& sta : config.stations)
        m.per_station[sta.id]; // stable row set
    const int64_t end_us = static_cast<int64_t>(config.sim_duration_s * 1e6);

    switch (config.protocol) {
    case Protocol::LegacyDCF: {
        std::vector<StationRef> all;
        for (std::size_t i = 0; i < config.stations.size(); ++i)
            all.push_back({i, &config.stations[i]});
        run_dcf_groups(config, m, {all}, config.fixed_payload_bits, end_us, trace);
        break;
    }
    case Protocol::HTFA: {
        const auto state = htfa_distribute(config.stations, config.sub_channels);
        std::map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < config.stations.size(); ++i)
            index[config.stations[i].id] = i;
        std::vector<std::vector<StationRef>> groups;
        std::set<std::string> placed;
        for (int c = 0; c < state.sub_channel_count(); ++c) {
            std::vector<StationRef> g;
            for (const auto& id : state.stations_on(c)) {
                if (!placed.insert(id).second)
                    continue; // N < M: a station's first channel carries its traffic
                g.push_back({index.at(id), &config.stations[index.at(id)]});
            }
            groups.push_back(std::move(g));
        }
        // Fixed total bandwidth: a frame on one of M sub-channels carries
        // 1/M of the whole-channel payload.
        const double bits = config.fixed_payload_bits / config.sub_channels;
        run_dcf_groups(config, m, groups, bits, end_us, trace);
        break;
    }
    case Protocol::ERA: {
        const auto layout = RuLayout::binary(config.bandwidth);
        const auto classes = era_classify(config.stations, config.era_ll_threshold);
        EraQueues queues;
        for (const auto& sta : config.stations) {
            switch (classes.at(sta.id)) {
            case LoadClass::HL:
                queues.hl.push_back(sta.id);
                break;
            case LoadClass::ML:
                queues.ml.push_back(sta.id);
                break;
            case LoadClass::LL:
                queues.ll.push_back(sta.id);
                break;
            }
        }
        auto next_flow = [&]() {
            auto grants = era_assign(queues, layout);
            // Saturation: served stations rejoin their class queue.
            for (const auto& g : grants) {
                switch (classes.at(g.station)) {
                case LoadClass::HL:
                    queues.hl.push_back(g.station);
                    break;
                case LoadClass::ML:
                    queues.ml.push_back(g.station);
                    break;
                case LoadClass::LL:
                    queues.ll.push_back(g.station);
                    break;
                }
            }
            return grants;
        };
        run_sa_loop(config, m, end_us, next_flow, trace);
        break;
    }
    case Protocol::PRS: {
        const auto layout = RuLayout::standard(config.bandwidth);
        std::vector<std::pair<std::string, double>> sa;
        std::vector<StationRef> ra_members;
        std::map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < config.stations.size(); ++i) {
            const auto& sta = config.stations[i];
            index[sta.id] = i;
            if (sta.mode == AccessMode::SA)
                sa.push_back({sta.id, sta.load});
            else
                ra_members.push_back({i, &sta});
        }
        std::vector<double> sa_loads, ra_loads;
        for (const auto& [id, l] : sa)
            sa_loads.push_back(l);
        for (const auto& ref : ra_members)
            ra_loads.push_back(ref.sta->load);

        int ra_srus = sru_count(config.bandwidth);
        std::vector<RuGrant> sa_grants;
        if (!sa.empty()) {
            const auto initial = prs_initial(sa_loads, ra_loads, sru_count(config.bandwidth));
            const auto revised = prs_revised(sa_loads, initial.s, sru_count(config.bandwidth));
            std::vector<std::pair<std::string, int>> counts;
            for (std::size_t i = 0; i < sa.size(); ++i)
                counts.push_back({sa[i].first, revised.r[i]});
            const auto placement = prs_place(counts, layout);
            for (const auto& sp : placement.sa)
                for (const auto& ru : sp.rus)
                    sa_grants.push_back({sp.station, ru});
            // Migrated SA stations fall back to random access.
            for (std::size_t i : revised.migrated)
                ra_members.push_back({index.at(sa[i].first), &config.stations[index.at(sa[i].first)]});
            ra_srus = revised.v;
        }
        if (!sa_grants.empty()) {
            auto next_flow = [&]() { return sa_grants; };
            run_sa_loop(config, m, end_us, next_flow, trace);
        }
        if (!ra_members.empty() && ra_srus > 0) {
            // The whole RA-zone works as one random-access channel whose
            // rate scales with its share of the SRU line.
            const double per_sru = config.rates.per_sru_rate(0.0);
            const double bits = per_sru * ra_srus * static_cast<double>(config.data_airtime_us);
            std::sort(ra_members.begin(), ra_members.end(),
                      [](const StationRef& a, const StationRef& b) { return a.index < b.index; });
            run_dcf_groups(config, m, {ra_members}, bits, end_us, trace);
        }
        break;
    }
    }
    collect_metrics(m, end_us, config.stations);
    return m;
}

int64_t dcf_success_airtime(const SimConfig& c)
{
    return success_airtime(c);
}

int64_t dcf_collision_airtime(const SimConfig& c)
{
    return collision_airtime(c);
}

// ---------------------------------------------------------------------------
// DcfSubChannel probe
// ---------------------------------------------------------------------------

DcfSubChannel::DcfSubChannel(std::vector<std::string> station_ids, const TimingParams& timing,
                             uint64_t seed)
    : ids_(std::move(station_ids)), timing_(timing), rng_(seed)
{
    states_.assign(ids_.size(), BackoffState{});
    for (std::size_t i = 0; i < states_.size(); ++i)
        states_[i].counter = backoff_draw(states_[i], timing_, rng_);
    now_ = difs(timing_);
}

int DcfSubChannel::counter_of(const std::string& id) const
{
    for (std::size_t i = 0; i < ids_.size(); ++i)
        if (ids_[i] == id)
            return states_[i].counter;
    throw DomainError("unknown station " + id);
}

void DcfSubChannel::set_counter(const std::string& id, int value)
{
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        if (ids_[i] == id) {
            states_[i].counter = value;
            return;
        }
    }
    throw DomainError("unknown station " + id);
}

int DcfSubChannel::stage_of(const std::string& id) const
{
    for (std::size_t i = 0; i < ids_.size(); ++i)
        if (ids_[i] == id)
            return states_[i].stage;
    throw DomainError("unknown station " + id);
}

std::vector<DcfSubChannel::Tx> DcfSubChannel::advance(int64_t ticks, int64_t success_airtime_us,
                                                      int64_t collision_airtime_us)
{
    std::vector<Tx> out;
    const int64_t end = now_ + ticks;
    const int64_t slot = timing_.slot_us;
    while (now_ < end) {
        int cmin = states_[0].counter;
        for (const auto& s : states_)
            cmin = std::min(cmin, s.counter);
        now_ += static_cast<int64_t>(cmin) * slot;
        if (now_ >= end)
            break;
        Tx tx;
        tx.start_us = now_;
        std::vector<std::size_t> txs;
        for (std::size_t i = 0; i < states_.size(); ++i) {
            if (states_[i].counter == cmin)
                txs.push_back(i);
            else
                states_[i].counter -= cmin; // frozen while the medium is busy
        }
        tx.collision = txs.size() > 1;
        for (std::size_t i : txs) {
            tx.stations.push_back(ids_[i]);
            states_[i] = next_stage(states_[i],
                                    tx.collision ? TxOutcome::Collision : TxOutcome::Success,
                                    timing_);
            states_[i].counter = backoff_draw(states_[i], timing_, rng_);
        }
        now_ += tx.collision ? collision_airtime_us : success_airtime_us;
        out.push_back(std::move(tx));
    }
    return out;
}

} // namespace wlanlab
