#include "wlanlab/schedulers.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace wlanlab {

// ---------------------------------------------------------------------------
// HTFA
// ---------------------------------------------------------------------------

HtfaState::HtfaState(int m)
{
    if (m < 1)
        throw ConfigError("HTFA requires at least one sub-channel");
    channels_.resize(static_cast<std::size_t>(m));
}

int HtfaState::station_count() const
{
    return static_cast<int>(all_stations().size());
}

const std::vector<std::string>& HtfaState::stations_on(int channel) const
{
    if (channel < 0 || channel >= sub_channel_count())
        throw DomainError("sub-channel index out of range");
    return channels_[static_cast<std::size_t>(channel)];
}

std::vector<int> HtfaState::channels_of(const std::string& id) const
{
    std::vector<int> out;
    for (int c = 0; c < sub_channel_count(); ++c) {
        const auto& v = channels_[static_cast<std::size_t>(c)];
        if (std::find(v.begin(), v.end(), id) != v.end())
            out.push_back(c);
    }
    return out;
}

std::vector<std::string> HtfaState::all_stations() const
{
    std::set<std::string> s;
    for (const auto& v : channels_)
        s.insert(v.begin(), v.end());
    return {s.begin(), s.end()};
}

bool HtfaState::contains(const std::string& id) const
{
    return !channels_of(id).empty();
}

bool HtfaState::invariants_hold() const
{
    const int m = sub_channel_count();
    const auto stations = all_stations();
    const int n = static_cast<int>(stations.size());
    if (n == 0) {
        for (const auto& v : channels_)
            if (!v.empty())
                return false;
        return true;
    }
    if (n >= m) {
        // Station counts per sub-channel differ by at most one, none empty,
        // each station sits on exactly one sub-channel.
        std::size_t lo = channels_[0].size(), hi = channels_[0].size();
        for (const auto& v : channels_) {
            lo = std::min(lo, v.size());
            hi = std::max(hi, v.size());
        }
        if (lo == 0 || hi - lo > 1)
            return false;
        for (const auto& id : stations)
            if (channels_of(id).size() != 1)
                return false;
        return true;
    }
    // n < m: one owner per sub-channel, per-station counts differ by at most
    // one, everyone owns at least one.
    for (const auto& v : channels_)
        if (v.size() != 1)
            return false;
    std::size_t lo = channels_of(stations[0]).size(), hi = lo;
    for (const auto& id : stations) {
        const auto cnt = channels_of(id).size();
        lo = std::min(lo, cnt);
        hi = std::max(hi, cnt);
    }
    return lo >= 1 && hi - lo <= 1;
}

void HtfaState::rebalance()
{
    const int m = sub_channel_count();
    auto stations = all_stations();
    const int n = static_cast<int>(stations.size());
    if (n == 0)
        return;

    if (n >= m) {
        // Keep each station's first (lowest-index) appearance only.
        std::set<std::string> seen;
        for (auto& v : channels_) {
            std::vector<std::string> kept;
            for (auto& id : v) {
                if (seen.insert(id).second)
                    kept.push_back(id);
            }
            v = std::move(kept);
        }
        // Move lowest-id stations out of the fullest sub-channel until the
        // counts differ by at most one.
        for (;;) {
            int cmin = 0, cmax = 0;
            for (int c = 1; c < m; ++c) {
                if (channels_[c].size() < channels_[cmin].size())
                    cmin = c;
                if (channels_[c].size() > channels_[cmax].size())
                    cmax = c;
            }
            if (channels_[cmax].size() - channels_[cmin].size() <= 1)
                break;
            auto& from = channels_[static_cast<std::size_t>(cmax)];
            auto it = std::min_element(from.begin(), from.end());
            channels_[static_cast<std::size_t>(cmin)].push_back(*it);
            from.erase(it);
        }
        for (auto& v : channels_)
            std::sort(v.begin(), v.end());
        return;
    }

    // n < m: normalize to one owner per sub-channel.  Extra residents go to
    // a pool and get the unowned sub-channels first.
    std::vector<std::string> pool;
    std::set<std::string> owning;
    for (auto& v : channels_) {
        if (v.empty())
            continue;
        std::sort(v.begin(), v.end());
        const std::string owner = v.front();
        for (const auto& id : v)
            if (id != owner && !owning.count(id) &&
                std::find(pool.begin(), pool.end(), id) == pool.end())
                pool.push_back(id);
        v = {owner};
        owning.insert(owner);
    }
    pool.erase(std::remove_if(pool.begin(), pool.end(),
                              [&](const std::string& id) { return owning.count(id) > 0; }),
               pool.end());
    std::sort(pool.begin(), pool.end());

    auto count_of = [&](const std::string& id) { return channels_of(id).size(); };

    for (int c = 0; c < m; ++c) {
        auto& v = channels_[static_cast<std::size_t>(c)];
        if (!v.empty())
            continue;
        if (!pool.empty()) {
            v = {pool.front()};
            pool.erase(pool.begin());
            continue;
        }
        // Assign to the station owning the fewest sub-channels.
        std::string best;
        std::size_t best_cnt = 0;
        for (const auto& id : stations) {
            const auto cnt = count_of(id);
            if (best.empty() || cnt < best_cnt) {
                best = id;
                best_cnt = cnt;
            }
        }
        v = {best};
    }

    // Even out ownership counts.
    for (;;) {
        std::string rich, poor;
        std::size_t rich_cnt = 0, poor_cnt = 0;
        for (const auto& id : stations) {
            const auto cnt = count_of(id);
            if (rich.empty() || cnt > rich_cnt) {
                rich = id;
                rich_cnt = cnt;
            }
            if (poor.empty() || cnt < poor_cnt) {
                poor = id;
                poor_cnt = cnt;
            }
        }
        if (rich_cnt - poor_cnt <= 1)
            break;
        const auto rich_channels = channels_of(rich);
        channels_[static_cast<std::size_t>(rich_channels.front())] = {poor};
    }
}

HtfaState htfa_distribute(const std::vector<Station>& stations, int m)
{
    HtfaState state(m);
    const int n = static_cast<int>(stations.size());
    if (n >= m) {
        for (int j = 0; j < n; ++j)
            state.channels_[static_cast<std::size_t>(j % m)].push_back(stations[j].id);
        for (auto& v : state.channels_)
            std::sort(v.begin(), v.end());
    } else if (n > 0) {
        for (int c = 0; c < m; ++c)
            state.channels_[static_cast<std::size_t>(c)] = {stations[c % n].id};
    }
    if (!state.invariants_hold())
        state.rebalance();
    return state;
}

HtfaState htfa_join(const HtfaState& state, const Station& sta)
{
    if (state.contains(sta.id))
        throw ConfigError("DuplicateStation: " + sta.id);
    HtfaState next = state;
    const int m = next.sub_channel_count();
    const int n = next.station_count();

    if (n == 0) {
        for (auto& v : next.channels_)
            v = {sta.id};
        return next;
    }
    if (n < m) {
        // The newcomer takes sub-channels from the richest owners, finishing
        // any in-flight packet first (the engine's concern, not the state's).
        for (;;) {
            const auto mine = next.channels_of(sta.id).size();
            std::string donor;
            std::size_t donor_cnt = 0;
            for (const auto& id : next.all_stations()) {
                if (id == sta.id)
                    continue;
                const auto cnt = next.channels_of(id).size();
                if (donor.empty() || cnt > donor_cnt) {
                    donor = id;
                    donor_cnt = cnt;
                }
            }
            if (donor_cnt <= mine + 1)
                break;
            const auto donated = next.channels_of(donor).front();
            next.channels_[static_cast<std::size_t>(donated)] = {sta.id};
        }
        return next;
    }
    // n >= m: join the least-populated sub-channel.
    int cmin = 0;
    for (int c = 1; c < m; ++c)
        if (next.channels_[static_cast<std::size_t>(c)].size() <
            next.channels_[static_cast<std::size_t>(cmin)].size())
            cmin = c;
    auto& v = next.channels_[static_cast<std::size_t>(cmin)];
    v.push_back(sta.id);
    std::sort(v.begin(), v.end());
    return next;
}

HtfaState htfa_leave(const HtfaState& state, const std::string& id)
{
    if (!state.contains(id))
        throw ConfigError("UnknownStation: " + id);
    HtfaState next = state;
    for (auto& v : next.channels_)
        v.erase(std::remove(v.begin(), v.end(), id), v.end());
    if (!next.invariants_hold())
        next.rebalance();
    return next;
}

// ---------------------------------------------------------------------------
// ERA
// ---------------------------------------------------------------------------

LoadClass era_classify_one(double load, double ll_threshold)
{
    if (ll_threshold <= 0.0)
        throw ConfigError("LL threshold must be positive");
    if (load <= 0.0)
        throw DomainError("InvalidLoad: station load must be positive");
    if (load <= 1.5 * ll_threshold)
        return LoadClass::LL;
    if (load <= 3.0 * ll_threshold)
        return LoadClass::ML;
    return LoadClass::HL;
}

std::map<std::string, LoadClass> era_classify(const std::vector<Station>& stations,
                                              double ll_threshold)
{
    std::map<std::string, LoadClass> out;
    for (const auto& sta : stations)
        out[sta.id] = era_classify_one(sta.load, ll_threshold);
    return out;
}

std::vector<RuGrant> era_assign(EraQueues& queues, const RuLayout& layout)
{
    if (layout.kind() != LayoutKind::Binary || layout.level_count() < 4)
        throw ConfigError("ERA assignment requires a Binary layout with levels 1-3");
    if (queues.empty())
        throw ConfigError("EmptyFlow: all BSR queues are empty");

    std::vector<RuGrant> grants;
    auto grant = [&](std::deque<std::string>& q, const RuNode& ru) {
        if (!q.empty()) {
            grants.push_back({q.front(), ru});
            q.pop_front();
        }
    };

    if (!queues.hl.empty()) {
        grant(queues.hl, layout.node(1, 0));
    } else {
        const auto [r20, r21] = layout.split(layout.node(1, 0));
        const auto [r32, r33] = layout.split(r21);
        grant(queues.ll, r32);
        grant(queues.ll, r33);
        if (!queues.ml.empty()) {
            grant(queues.ml, r20);
        } else {
            const auto [r30, r31] = layout.split(r20);
            grant(queues.ll, r30);
            grant(queues.ll, r31);
        }
    }
    if (!queues.ml.empty()) {
        grant(queues.ml, layout.node(2, 2));
    } else {
        const auto [r34, r35] = layout.split(layout.node(2, 2));
        grant(queues.ll, r34);
        grant(queues.ll, r35);
    }
    grant(queues.ll, layout.node(3, 6));
    grant(queues.ll, layout.node(3, 7));
    return grants;
}

// ---------------------------------------------------------------------------
// PRS
// ---------------------------------------------------------------------------

namespace {
// Floors/ceilings on ratios of human-scale loads; the epsilon absorbs
// binary-representation noise only.
constexpr double kRatioEps = 1e-9;
} // namespace

PrsInitial prs_initial(const std::vector<double>& sa_loads, const std::vector<double>& ra_loads,
                       int m, bool literal_floor)
{
    if (m < 1)
        throw ConfigError("SRU count must be at least 1");
    PrsInitial out;
    for (double p : sa_loads) {
        if (p < 0.0)
            throw DomainError("InvalidLoad: negative SA load");
        out.l1 += p;
    }
    for (double q : ra_loads) {
        if (q < 0.0)
            throw DomainError("InvalidLoad: negative RA load");
        out.l2 += q;
    }
    const double l3 = out.l1 + out.l2;
    if (l3 <= 0.0)
        throw ConfigError("NoLoad: total load is zero");
    out.s = static_cast<int>(std::floor(out.l1 * m / l3 + kRatioEps));
    const double t_exact = out.l2 * m / l3;
    out.t = literal_floor ? static_cast<int>(std::floor(t_exact + kRatioEps))
                          : static_cast<int>(std::ceil(t_exact - kRatioEps));
    return out;
}

PrsRevised prs_revised(const std::vector<double>& sa_loads, int s, int m)
{
    if (s > m)
        throw ConfigError("SA-zone cannot exceed the SRU line");
    PrsRevised out;
    out.v = m;
    if (sa_loads.empty())
        return out;
    double l1 = 0.0;
    for (double p : sa_loads) {
        if (p < 0.0)
            throw DomainError("InvalidLoad: negative SA load");
        l1 += p;
    }
    if (l1 <= 0.0)
        throw ConfigError("NoLoad: total SA load is zero");
    for (std::size_t i = 0; i < sa_loads.size(); ++i) {
        const int ri = static_cast<int>(std::floor(sa_loads[i] * s / l1 + kRatioEps));
        out.r.push_back(ri);
        out.u += ri;
    }
    // The BSR-zone keeps at least one SRU on the right.
    if (out.u >= m) {
        for (auto it = out.r.rbegin(); it != out.r.rend(); ++it) {
            if (*it > 0) {
                *it -= out.u - (m - 1);
                break;
            }
        }
        out.u = m - 1;
    }
    out.v = m - out.u;
    for (std::size_t i = 0; i < out.r.size(); ++i)
        if (out.r[i] == 0)
            out.migrated.push_back(i);
    return out;
}

PrsPlacement prs_place(const std::vector<std::pair<std::string, int>>& grants,
                       const RuLayout& layout)
{
    const int line = layout.sru_line_length();
    int total = 0;
    for (const auto& [id, r] : grants) {
        if (r < 0)
            throw DomainError("negative SRU grant for " + id);
        total += r;
    }
    if (total > line)
        throw ConfigError("AssignmentOverflow: " + std::to_string(total) + " SRUs granted on a " +
                          std::to_string(line) + "-SRU line");

    PrsPlacement out;
    int cursor = 1;
    for (const auto& [id, r] : grants) {
        if (r == 0)
            continue;
        PrsPlacement::StationPlacement sp;
        sp.station = id;
        sp.range = {cursor, cursor + r - 1};
        // Greedy largest-first merging inside the contiguous run.
        int pos = sp.range.first;
        while (pos <= sp.range.last) {
            const RuNode* widest = nullptr;
            for (const auto& row : layout.rows()) {
                for (const auto& n : row) {
                    if (n.sru_first == pos && n.sru_last <= sp.range.last) {
                        widest = &n;
                        break;
                    }
                }
                if (widest)
                    break;
            }
            if (widest == nullptr)
                throw ConfigError("no valid RU starts at SRU " + std::to_string(pos));
            sp.rus.push_back(*widest);
            pos = widest->sru_last + 1;
        }
        cursor += r;
        out.sa.push_back(std::move(sp));
    }
    out.ra_zone = {cursor, line};
    return out;
}

} // namespace wlanlab
