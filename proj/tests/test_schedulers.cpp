#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wlanlab/errors.hpp"
#include "wlanlab/schedulers.hpp"

using namespace wlanlab;

namespace {

std::vector<Station> make_stations(int n, double load = 1.0)
{
    std::vector<Station> out;
    for (int i = 0; i < n; ++i)
        out.push_back(Station{"S" + std::to_string(i), load, AccessMode::SA, 1});
    return out;
}

// Independent balance checker: recomputes the invariants from the public
// accessors without trusting HtfaState::invariants_hold.
bool balanced(const HtfaState& state)
{
    const int m = state.sub_channel_count();
    const auto ids = state.all_stations();
    const int n = static_cast<int>(ids.size());
    if (n == 0)
        return true;

    if (n >= m) {
        int lo = 1 << 30, hi = 0;
        std::map<std::string, int> membership;
        for (int c = 0; c < m; ++c) {
            const int count = static_cast<int>(state.stations_on(c).size());
            lo = std::min(lo, count);
            hi = std::max(hi, count);
            for (const std::string& id : state.stations_on(c))
                membership[id] += 1;
        }
        if (lo == 0 || hi - lo > 1)
            return false;
        for (const std::string& id : ids)
            if (membership[id] != 1)
                return false;
        return true;
    }

    // n < m: one owner per channel, per-station channel counts differ <= 1.
    std::map<std::string, int> owned;
    for (int c = 0; c < m; ++c) {
        if (state.stations_on(c).size() != 1)
            return false;
        owned[state.stations_on(c)[0]] += 1;
    }
    int lo = 1 << 30, hi = 0;
    for (const std::string& id : ids) {
        if (!owned.count(id))
            return false;
        lo = std::min(lo, owned[id]);
        hi = std::max(hi, owned[id]);
    }
    return hi - lo <= 1;
}

// Brute-force oracle: the only achievable balanced count multiset for (n, m).
std::multiset<int> expected_counts(int n, int m)
{
    std::multiset<int> out;
    if (n >= m) {
        for (int c = 0; c < m; ++c)
            out.insert(n / m + (c < n % m ? 1 : 0));
    } else {
        for (int c = 0; c < m; ++c)
            out.insert(1); // one owner each
    }
    return out;
}

std::multiset<int> actual_counts(const HtfaState& state)
{
    std::multiset<int> out;
    for (int c = 0; c < state.sub_channel_count(); ++c)
        out.insert(static_cast<int>(state.stations_on(c).size()));
    return out;
}

} // namespace

TEST_CASE("htfa_distribute basic shapes")
{
    SUBCASE("3 stations, 3 sub-channels: one each")
    {
        const HtfaState s = htfa_distribute(make_stations(3), 3);
        for (int c = 0; c < 3; ++c)
            CHECK(s.stations_on(c).size() == 1);
    }
    SUBCASE("2 stations, 3 sub-channels: channel counts per station {2,1}")
    {
        const HtfaState s = htfa_distribute(make_stations(2), 3);
        std::multiset<int> per_station;
        for (const std::string& id : s.all_stations())
            per_station.insert(static_cast<int>(s.channels_of(id).size()));
        CHECK(per_station == std::multiset<int>{1, 2});
    }
    SUBCASE("7 stations, 2 sub-channels: station counts {4,3}")
    {
        const HtfaState s = htfa_distribute(make_stations(7), 2);
        CHECK(actual_counts(s) == std::multiset<int>{3, 4});
    }
    CHECK_THROWS_AS(htfa_distribute(make_stations(3), 0), ConfigError);
}

TEST_CASE("htfa_join follows the case rules")
{
    HtfaState s = htfa_distribute({}, 3);
    CHECK(s.station_count() == 0);

    s = htfa_join(s, Station{"A", 1.0, AccessMode::SA, 1});
    CHECK(s.channels_of("A").size() == 3); // first arrival owns everything

    s = htfa_join(s, Station{"B", 1.0, AccessMode::SA, 1});
    std::multiset<int> per_station = {static_cast<int>(s.channels_of("A").size()),
                                      static_cast<int>(s.channels_of("B").size())};
    CHECK(per_station == std::multiset<int>{1, 2});

    s = htfa_join(s, Station{"C", 1.0, AccessMode::SA, 1});
    for (const char* id : {"A", "B", "C"})
        CHECK(s.channels_of(id).size() == 1);

    // Fourth joiner shares a channel with an existing owner.
    s = htfa_join(s, Station{"D", 1.0, AccessMode::SA, 1});
    CHECK(actual_counts(s) == std::multiset<int>{1, 1, 2});
    CHECK(s.channels_of("D").size() == 1);

    CHECK_THROWS_AS(htfa_join(s, Station{"A", 1.0, AccessMode::SA, 1}), ConfigError);
}

TEST_CASE("htfa_leave rebalances")
{
    // Five stations on three channels: counts {2,2,1}.
    HtfaState s = htfa_distribute(make_stations(5), 3);
    CHECK(actual_counts(s) == std::multiset<int>{1, 2, 2});

    // A station leaving a 2-channel does not force a migration.
    std::string on_double;
    for (int c = 0; c < 3; ++c)
        if (s.stations_on(c).size() == 2)
            on_double = s.stations_on(c)[0];
    HtfaState after = htfa_leave(s, on_double);
    CHECK(balanced(after));
    CHECK(actual_counts(after) == std::multiset<int>{1, 1, 2});

    // A station leaving the singleton channel forces one migration.
    std::string alone;
    for (int c = 0; c < 3; ++c)
        if (after.stations_on(c).size() == 1)
            alone = after.stations_on(c)[0];
    HtfaState migrated = htfa_leave(after, alone);
    CHECK(balanced(migrated));
    CHECK(actual_counts(migrated) == std::multiset<int>{1, 1, 1});

    CHECK_THROWS_AS(htfa_leave(s, "nope"), ConfigError);

    // Sole station leaves: everything empties.
    HtfaState one = htfa_distribute(make_stations(1), 3);
    HtfaState empty = htfa_leave(one, "S0");
    CHECK(empty.station_count() == 0);
    for (int c = 0; c < 3; ++c)
        CHECK(empty.stations_on(c).empty());
}

TEST_CASE("htfa join/leave property test against the balance oracle")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 10);
        HtfaState state = htfa_distribute({}, m);
        std::vector<std::string> present;
        int next_id = 0;
        for (int ev = 0; ev < 50; ++ev) {
            const bool join = present.empty() || (present.size() < 30 && rng() % 2 == 0);
            if (join) {
                const std::string id = "T" + std::to_string(next_id++);
                state = htfa_join(state, Station{id, 1.0, AccessMode::SA, 1});
                present.push_back(id);
            } else {
                const std::size_t k = rng() % present.size();
                state = htfa_leave(state, present[k]);
                present.erase(present.begin() + k);
            }
            REQUIRE(balanced(state));
            REQUIRE(state.invariants_hold());
            if (!present.empty())
                REQUIRE(actual_counts(state) ==
                        expected_counts(static_cast<int>(present.size()), m));
        }
    }
}

TEST_CASE("htfa_distribute is deterministic")
{
    const auto stations = make_stations(9);
    const HtfaState a = htfa_distribute(stations, 4);
    const HtfaState b = htfa_distribute(stations, 4);
    for (int c = 0; c < 4; ++c)
        CHECK(a.stations_on(c) == b.stations_on(c));
}

TEST_CASE("era load classification")
{
    CHECK(era_classify_one(1.5, 2.0) == LoadClass::LL);
    CHECK(era_classify_one(3.0, 2.0) == LoadClass::LL);  // boundary -> lighter class
    CHECK(era_classify_one(3.0001, 2.0) == LoadClass::ML);
    CHECK(era_classify_one(6.0, 2.0) == LoadClass::ML);  // boundary -> lighter class
    CHECK(era_classify_one(6.0001, 2.0) == LoadClass::HL);
    CHECK_THROWS_AS(era_classify_one(0.0, 2.0), DomainError);
    CHECK_THROWS_AS(era_classify_one(1.0, 0.0), ConfigError);

    const std::vector<Station> stations = {
        {"A", 4.0, AccessMode::SA, 1},  {"B", 1.5, AccessMode::SA, 1},
        {"C", 2.7, AccessMode::SA, 1},  {"D", 30.0, AccessMode::SA, 1},
        {"E", 3.0, AccessMode::SA, 1},
    };
    const auto classes = era_classify(stations, 2.0);
    CHECK(classes.at("A") == LoadClass::ML);
    CHECK(classes.at("B") == LoadClass::LL);
    CHECK(classes.at("C") == LoadClass::LL);
    CHECK(classes.at("D") == LoadClass::HL);
    CHECK(classes.at("E") == LoadClass::LL);
}

TEST_CASE("era_assign hand trace")
{
    const RuLayout layout = RuLayout::binary(Bandwidth::MHz20);
    EraQueues queues;
    queues.hl = {"D"};
    queues.ml = {"A"};
    queues.ll = {"B", "C", "E"};

    const auto grants = era_assign(queues, layout);
    REQUIRE(grants.size() == 4);
    CHECK(grants[0].station == "D");
    CHECK(grants[0].ru.level == 1);
    CHECK(grants[0].ru.index == 0);
    CHECK(grants[1].station == "A");
    CHECK(grants[1].ru.level == 2);
    CHECK(grants[1].ru.index == 2);
    CHECK(grants[2].station == "B");
    CHECK(grants[2].ru.level == 3);
    CHECK(grants[2].ru.index == 6);
    CHECK(grants[3].station == "C");
    CHECK(grants[3].ru.level == 3);
    CHECK(grants[3].ru.index == 7);

    // E was not served and waits for the next flow.
    CHECK(queues.ll == std::deque<std::string>{"E"});
    CHECK(queues.hl.empty());
    CHECK(queues.ml.empty());

    EraQueues none;
    CHECK_THROWS_AS(era_assign(none, layout), ConfigError);
}

namespace {

// Independent line-by-line interpreter of the RU-assignment pseudocode.
// Grants are (queue-tag, level, index) tuples; stations pop FCFS.
struct OracleGrant {
    char queue;
    int level;
    int index;
};

std::vector<OracleGrant> era_oracle(int hl, int ml, int ll)
{
    std::vector<OracleGrant> out;
    auto take = [&](char q, int& count, int level, int index) {
        if (count > 0) {
            out.push_back({q, level, index});
            --count;
        }
    };
    if (hl > 0) {
        take('H', hl, 1, 0);
    } else {
        take('L', ll, 3, 2);
        take('L', ll, 3, 3);
        if (ml > 0)
            take('M', ml, 2, 0);
        else {
            take('L', ll, 3, 0);
            take('L', ll, 3, 1);
        }
    }
    if (ml > 0)
        take('M', ml, 2, 2);
    else {
        take('L', ll, 3, 4);
        take('L', ll, 3, 5);
    }
    take('L', ll, 3, 6);
    take('L', ll, 3, 7);
    return out;
}

} // namespace

TEST_CASE("era_assign matches the pseudocode interpreter on random queues")
{
    const RuLayout layout = RuLayout::binary(Bandwidth::MHz20);
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 1000; ++trial) {
        // Bias toward the no-HL branch, which has the deeper structure.
        const int hl = (rng() % 4 == 0) ? static_cast<int>(rng() % 3) : 0;
        const int ml = static_cast<int>(rng() % 4);
        const int ll = static_cast<int>(rng() % 8);
        if (hl + ml + ll == 0)
            continue;

        EraQueues queues;
        for (int i = 0; i < hl; ++i)
            queues.hl.push_back("H" + std::to_string(i));
        for (int i = 0; i < ml; ++i)
            queues.ml.push_back("M" + std::to_string(i));
        for (int i = 0; i < ll; ++i)
            queues.ll.push_back("L" + std::to_string(i));

        const auto grants = era_assign(queues, layout);
        const auto expected = era_oracle(hl, ml, ll);
        REQUIRE(grants.size() == expected.size());
        for (std::size_t i = 0; i < grants.size(); ++i) {
            CHECK(grants[i].ru.level == expected[i].level);
            CHECK(grants[i].ru.index == expected[i].index);
            CHECK(grants[i].station[0] == expected[i].queue);
        }
        // FCFS: queue order preserved within each class.
        std::map<char, int> next;
        for (const RuGrant& g : grants) {
            const int serial = std::stoi(g.station.substr(1));
            CHECK(serial == next[g.station[0]]);
            next[g.station[0]] = serial + 1;
        }
    }
}

TEST_CASE("era_assign never grants one RU twice")
{
    const RuLayout layout = RuLayout::binary(Bandwidth::MHz40);
    EraQueues queues;
    for (int i = 0; i < 6; ++i)
        queues.ll.push_back("L" + std::to_string(i));
    const auto grants = era_assign(queues, layout);
    std::set<std::pair<int, int>> rus;
    std::set<int> srus;
    for (const RuGrant& g : grants) {
        CHECK(rus.insert({g.ru.level, g.ru.index}).second);
        for (int s = g.ru.sru_first; s <= g.ru.sru_last; ++s)
            CHECK(srus.insert(s).second);
    }
}

TEST_CASE("prs_initial zone split")
{
    const std::vector<double> sa = {3.1, 2.2, 2.9, 1.3, 0.7};
    const std::vector<double> ra = {3.4, 1.2, 2.1};

    const PrsInitial w = prs_initial(sa, ra, 18);
    CHECK(w.s == 10);
    CHECK(w.t == 8);

    const PrsInitial literal = prs_initial(sa, ra, 18, /*literal_floor=*/true);
    CHECK(literal.s == 10);
    CHECK(literal.t == 7);

    const PrsInitial even = prs_initial({1.0, 1.0}, {2.0}, 18);
    CHECK(even.s == 9);
    CHECK(even.t == 9);

    const PrsInitial no_ra = prs_initial({1.0}, {}, 18);
    CHECK(no_ra.s == 18);
    CHECK(no_ra.t == 0);

    CHECK_THROWS_AS(prs_initial({0.0}, {0.0}, 18), ConfigError);
}

TEST_CASE("prs_revised per-station grants")
{
    const std::vector<double> sa = {3.1, 2.2, 2.9, 1.3, 0.7};
    const PrsRevised r = prs_revised(sa, 10, 18);
    CHECK(r.r == std::vector<int>{3, 2, 2, 1, 0});
    CHECK(r.u == 8);
    CHECK(r.v == 10);
    REQUIRE(r.migrated.size() == 1);
    CHECK(r.migrated[0] == 4); // the 0.7-load station

    const PrsRevised single = prs_revised({5.0}, 7, 18);
    CHECK(single.r == std::vector<int>{7});
    CHECK(single.u == 7);
    CHECK(single.v == 11);

    const PrsRevised equal = prs_revised({2.0, 2.0, 2.0}, 9, 18);
    CHECK(equal.r == std::vector<int>{3, 3, 3});

    // v >= 1 enforcement: grants would fill the whole line.
    const PrsRevised full = prs_revised({1.0}, 18, 18);
    CHECK(full.r == std::vector<int>{17});
    CHECK(full.v == 1);
    CHECK(full.u + full.v == 18);

    const PrsRevised none = prs_revised({}, 10, 18);
    CHECK(none.u == 0);
    CHECK(none.v == 18);
}

TEST_CASE("prs_place contiguous placement with greedy merging")
{
    const RuLayout layout = RuLayout::standard(Bandwidth::MHz40);
    const std::vector<std::pair<std::string, int>> grants = {
        {"A", 3}, {"B", 2}, {"C", 2}, {"D", 1}};
    const PrsPlacement p = prs_place(grants, layout);

    REQUIRE(p.sa.size() == 4);
    CHECK(p.sa[0].range.first == 1);
    CHECK(p.sa[0].range.last == 3);
    REQUIRE(p.sa[0].rus.size() == 2); // {1,2} merged + {3}
    CHECK(p.sa[0].rus[0].tones == 52);
    CHECK(p.sa[0].rus[1].tones == 26);

    CHECK(p.sa[1].range.first == 4);
    CHECK(p.sa[1].range.last == 5);
    REQUIRE(p.sa[1].rus.size() == 2); // {4,5} is not a valid unit
    CHECK(p.sa[1].rus[0].tones == 26);

    CHECK(p.sa[2].range.first == 6);
    CHECK(p.sa[2].range.last == 7);
    REQUIRE(p.sa[2].rus.size() == 1); // {6,7} merged
    CHECK(p.sa[2].rus[0].tones == 52);

    CHECK(p.sa[3].range.first == 8);
    CHECK(p.sa[3].range.last == 8);

    CHECK(p.ra_zone.first == 9);
    CHECK(p.ra_zone.last == 18);
    CHECK(p.ra_zone.width() == 10);
}

TEST_CASE("prs_place whole-line grant and overflow")
{
    const RuLayout layout20 = RuLayout::standard(Bandwidth::MHz20);
    const PrsPlacement whole = prs_place({{"A", 9}}, layout20);
    REQUIRE(whole.sa.size() == 1);
    REQUIRE(whole.sa[0].rus.size() == 1);
    CHECK(whole.sa[0].rus[0].tones == 242);

    CHECK_THROWS_AS(prs_place({{"A", 7}, {"B", 4}}, layout20), ConfigError);
}
