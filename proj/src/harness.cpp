#include "wlanlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "wlanlab/analytics.hpp"
#include "wlanlab/errors.hpp"

namespace wlanlab {

namespace {

std::string trim(const std::string& s)
{
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
        --b;
    return s.substr(a, b - a);
}

std::string lower(std::string s)
{
    for (char& c : s)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) {
        cur = trim(cur);
        if (!cur.empty())
            out.push_back(cur);
    }
    return out;
}

double parse_double(const std::string& key, const std::string& value)
{
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size())
            throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': cannot parse '" + value + "' as a number");
    }
}

int64_t parse_int(const std::string& key, const std::string& value)
{
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(value, &pos);
        if (pos != value.size())
            throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': cannot parse '" + value + "' as an integer");
    }
}

bool parse_bool(const std::string& key, const std::string& value)
{
    const std::string v = lower(value);
    if (v == "true" || v == "yes" || v == "1")
        return true;
    if (v == "false" || v == "no" || v == "0")
        return false;
    throw ConfigError("key '" + key + "': cannot parse '" + value + "' as a boolean");
}

std::string format_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace

// ---------------------------------------------------------------------------
// IniFile
// ---------------------------------------------------------------------------

IniFile IniFile::parse(const std::string& text, const std::string& origin)
{
    IniFile out;
    out.origin_ = origin;
    std::istringstream is(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#' || stripped[0] == ';')
            continue;
        if (stripped.front() == '[') {
            if (stripped.back() != ']')
                throw ConfigError(origin + ":" + std::to_string(lineno) +
                                  ": malformed section header '" + stripped + "'");
            section = lower(trim(stripped.substr(1, stripped.size() - 2)));
            if (section.empty())
                throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty section name");
            continue;
        }
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty())
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
        if (section.empty())
            throw ConfigError(origin + ":" + std::to_string(lineno) +
                              ": key '" + key + "' outside any [section]");
        const std::string full = section + "." + key;
        for (const auto& [k, v] : out.entries_)
            if (k == full)
                throw ConfigError(origin + ":" + std::to_string(lineno) + ": duplicate key '" +
                                  full + "'");
        out.entries_.emplace_back(full, value);
    }
    return out;
}

IniFile IniFile::parse_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse(ss.str(), path);
}

bool IniFile::has(const std::string& key) const
{
    for (const auto& [k, v] : entries_)
        if (k == key)
            return true;
    return false;
}

std::string IniFile::get(const std::string& key) const
{
    for (const auto& [k, v] : entries_)
        if (k == key)
            return v;
    throw ConfigError(origin_ + ": missing required key '" + key + "'");
}

std::string IniFile::get_or(const std::string& key, const std::string& fallback) const
{
    return has(key) ? get(key) : fallback;
}

std::vector<std::pair<std::string, std::string>> IniFile::section(const std::string& name) const
{
    std::vector<std::pair<std::string, std::string>> out;
    const std::string prefix = name + ".";
    for (const auto& [k, v] : entries_)
        if (k.rfind(prefix, 0) == 0)
            out.emplace_back(k.substr(prefix.size()), v);
    return out;
}

// ---------------------------------------------------------------------------
// SimConfig loading
// ---------------------------------------------------------------------------

namespace {

const std::set<std::string>& sim_keys()
{
    static const std::set<std::string> keys = {
        "protocol",        "bandwidth_mhz",    "layout",           "sub_channels",
        "sifs_us",         "slot_us",          "ack_us",           "w_min",
        "alpha",           "retry_limit",      "data_airtime_us",  "rts_airtime_us",
        "cts_airtime_us",  "tf_airtime_us",    "header_airtime_us","payload_airtime_us",
        "delta_us",        "channel_rate_mbps","payload_bits",     "era_ll_threshold",
        "duration_s",      "seed",             "handshake",        "freeze_on_busy",
        "hidden_pairs",    "radius_m",         "ap_antennas",      "antenna_exponent",
        "per_sru_rate_mbps", "pl_a", "pl_b", "pl_c", "pl_x", "carrier_ghz",
        "breakpoint_m",
    };
    return keys;
}

void parse_station_entry(SimConfig& config, const std::string& key, const std::string& value)
{
    // Bulk forms first: `count = 10` / `count_ra = 4` with optional `load`.
    if (key == "count" || key == "count_ra" || key == "load")
        return; // handled by the caller in a second pass
    const std::vector<std::string> fields = split(value, ' ');
    if (fields.empty() || fields.size() > 3)
        throw ConfigError("station '" + key + "': expected '<load> [sa|ra] [antennas]'");
    Station sta;
    sta.id = key;
    sta.load = parse_double("stations." + key, fields[0]);
    if (fields.size() >= 2) {
        const std::string mode = lower(fields[1]);
        if (mode == "sa")
            sta.mode = AccessMode::SA;
        else if (mode == "ra")
            sta.mode = AccessMode::RA;
        else
            throw ConfigError("station '" + key + "': mode must be 'sa' or 'ra'");
    }
    if (fields.size() == 3)
        sta.antennas = static_cast<int>(parse_int("stations." + key, fields[2]));
    config.stations.push_back(sta);
}

std::vector<Station> auto_stations(int count, double load, AccessMode mode, const char* prefix)
{
    std::vector<Station> out;
    for (int i = 1; i <= count; ++i) {
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%s%02d", prefix, i);
        out.push_back(Station{buf, load, mode, 1});
    }
    return out;
}

} // namespace

SimConfig sim_config_from_ini(const IniFile& ini)
{
    SimConfig config;
    for (const auto& [key, value] : ini.section("sim"))
        if (!sim_keys().count(key))
            throw ConfigError("unknown key 'sim." + key + "'");

    config.protocol = protocol_from_string(ini.get_or("sim.protocol", "legacy_dcf"));
    config.bandwidth =
        bandwidth_from_mhz(static_cast<int>(parse_int("bandwidth_mhz",
                                                      ini.get_or("sim.bandwidth_mhz", "40"))));
    const std::string layout = lower(ini.get_or("sim.layout", "standard"));
    if (layout == "standard")
        config.layout_kind = LayoutKind::Standard;
    else if (layout == "binary")
        config.layout_kind = LayoutKind::Binary;
    else
        throw ConfigError("layout must be 'standard' or 'binary'");

    config.sub_channels = static_cast<int>(parse_int("sub_channels",
                                                     ini.get_or("sim.sub_channels", "1")));
    config.timing.sifs_us = parse_int("sifs_us", ini.get_or("sim.sifs_us", "16"));
    config.timing.slot_us = parse_int("slot_us", ini.get_or("sim.slot_us", "9"));
    config.timing.ack_time_us = parse_int("ack_us", ini.get_or("sim.ack_us", "44"));
    config.timing.w_min = static_cast<int>(parse_int("w_min", ini.get_or("sim.w_min", "32")));
    config.timing.alpha = static_cast<int>(parse_int("alpha", ini.get_or("sim.alpha", "5")));
    config.timing.retry_limit =
        static_cast<int>(parse_int("retry_limit", ini.get_or("sim.retry_limit", "7")));

    config.data_airtime_us = parse_int("data_airtime_us", ini.get_or("sim.data_airtime_us", "2500"));
    config.rts_airtime_us = parse_int("rts_airtime_us", ini.get_or("sim.rts_airtime_us", "50"));
    config.cts_airtime_us = parse_int("cts_airtime_us", ini.get_or("sim.cts_airtime_us", "40"));
    config.tf_airtime_us = parse_int("tf_airtime_us", ini.get_or("sim.tf_airtime_us", "50"));
    config.header_airtime_us =
        parse_int("header_airtime_us", ini.get_or("sim.header_airtime_us", "20"));
    config.payload_airtime_us =
        parse_int("payload_airtime_us", ini.get_or("sim.payload_airtime_us", "2000"));
    config.propagation_delay_us = parse_int("delta_us", ini.get_or("sim.delta_us", "1"));

    config.channel_rate_mbps =
        parse_double("channel_rate_mbps", ini.get_or("sim.channel_rate_mbps", "100"));
    if (ini.has("sim.per_sru_rate_mbps"))
        config.rates = RateTable::flat(parse_double("per_sru_rate_mbps",
                                                    ini.get("sim.per_sru_rate_mbps")));
    config.fixed_payload_bits =
        parse_double("payload_bits", ini.get_or("sim.payload_bits", "12000"));
    config.era_ll_threshold =
        parse_double("era_ll_threshold", ini.get_or("sim.era_ll_threshold", "2"));
    config.sim_duration_s = parse_double("duration_s", ini.get_or("sim.duration_s", "1"));
    config.seed = static_cast<uint64_t>(parse_int("seed", ini.get("sim.seed")));

    const std::string hs = lower(ini.get_or("sim.handshake", "four_way"));
    if (hs == "two_way")
        config.handshake = Handshake::TwoWay;
    else if (hs == "four_way")
        config.handshake = Handshake::FourWay;
    else
        throw ConfigError("handshake must be 'two_way' or 'four_way'");
    config.freeze_on_busy = parse_bool("freeze_on_busy", ini.get_or("sim.freeze_on_busy", "true"));

    for (const std::string& pair : split(ini.get_or("sim.hidden_pairs", ""), ',')) {
        const std::vector<std::string> ids = split(pair, ':');
        if (ids.size() != 2)
            throw ConfigError("hidden_pairs entries must look like 'A:B'");
        config.hidden_pairs.emplace_back(ids[0], ids[1]);
    }

    config.radius_m = parse_double("radius_m", ini.get_or("sim.radius_m", "15"));
    config.ap_antennas = static_cast<int>(parse_int("ap_antennas",
                                                    ini.get_or("sim.ap_antennas", "1")));
    config.antenna_exponent =
        parse_double("antenna_exponent", ini.get_or("sim.antenna_exponent", "0.85"));
    config.path_loss.a_coef = parse_double("pl_a", ini.get_or("sim.pl_a", "18.7"));
    config.path_loss.b_coef = parse_double("pl_b", ini.get_or("sim.pl_b", "46.8"));
    config.path_loss.c_coef = parse_double("pl_c", ini.get_or("sim.pl_c", "20"));
    config.path_loss.x_coef = parse_double("pl_x", ini.get_or("sim.pl_x", "0"));
    config.path_loss.carrier_ghz =
        parse_double("carrier_ghz", ini.get_or("sim.carrier_ghz", "5"));
    config.path_loss.breakpoint_m =
        parse_double("breakpoint_m", ini.get_or("sim.breakpoint_m", "5"));

    // [stations]: either explicit per-station lines or the bulk count form.
    const auto station_entries = ini.section("stations");
    for (const auto& [key, value] : station_entries)
        parse_station_entry(config, key, value);
    const double bulk_load = parse_double("load", ini.get_or("stations.load", "1"));
    if (ini.has("stations.count")) {
        for (Station& s :
             auto_stations(static_cast<int>(parse_int("count", ini.get("stations.count"))),
                           bulk_load, AccessMode::SA, "S"))
            config.stations.push_back(s);
    }
    if (ini.has("stations.count_ra")) {
        for (Station& s :
             auto_stations(static_cast<int>(parse_int("count_ra", ini.get("stations.count_ra"))),
                           bulk_load, AccessMode::RA, "R"))
            config.stations.push_back(s);
    }
    if (config.stations.empty())
        throw ConfigError("no stations defined (use [stations] with explicit ids or 'count')");

    config.validate();
    return config;
}

// ---------------------------------------------------------------------------
// Experiments
// ---------------------------------------------------------------------------

ExperimentSpec experiment_from_ini(const IniFile& ini)
{
    static const std::set<std::string> keys = {"name", "protocols", "sweep", "values", "seeds"};
    for (const auto& [key, value] : ini.section("experiment"))
        if (!keys.count(key))
            throw ConfigError("unknown key 'experiment." + key + "'");

    ExperimentSpec spec;
    spec.base = sim_config_from_ini(ini);
    spec.name = ini.get("experiment.name");
    for (const std::string& p : split(ini.get("experiment.protocols"), ','))
        spec.protocols.push_back(protocol_from_string(p));
    if (spec.protocols.empty())
        throw ConfigError("experiment.protocols must name at least one protocol");

    spec.sweep_param = ini.get("experiment.sweep");
    for (const std::string& v : split(ini.get("experiment.values"), ','))
        spec.sweep_values.push_back(parse_double("experiment.values", v));
    if (spec.sweep_values.empty())
        throw ConfigError("experiment.values must list at least one sweep point");

    std::set<uint64_t> seen;
    for (const std::string& s : split(ini.get("experiment.seeds"), ',')) {
        const uint64_t seed = static_cast<uint64_t>(parse_int("experiment.seeds", s));
        if (!seen.insert(seed).second)
            throw ConfigError("experiment.seeds contains duplicate seed " + s);
        spec.seeds.push_back(seed);
    }
    if (spec.seeds.empty())
        throw ConfigError("experiment.seeds must list at least one seed");

    // Reject unknown sweep parameters up front rather than per run.
    SimConfig probe = spec.base;
    apply_sweep(probe, spec.sweep_param, spec.sweep_values.front());
    return spec;
}

void apply_sweep(SimConfig& config, const std::string& param, double value)
{
    if (param == "w_min") {
        config.timing.w_min = static_cast<int>(value);
    } else if (param == "alpha") {
        config.timing.alpha = static_cast<int>(value);
    } else if (param == "sub_channels") {
        config.sub_channels = static_cast<int>(value);
    } else if (param == "slot_us") {
        config.timing.slot_us = static_cast<int64_t>(value);
    } else if (param == "payload_bits") {
        config.fixed_payload_bits = value;
    } else if (param == "data_airtime_us") {
        config.data_airtime_us = static_cast<int64_t>(value);
    } else if (param == "duration_s") {
        config.sim_duration_s = value;
    } else if (param == "n") {
        const int n = static_cast<int>(value);
        if (n < 1)
            throw ConfigError("sweep over n requires n >= 1");
        const Station model = config.stations.empty() ? Station{"S", 1.0, AccessMode::SA, 1}
                                                      : config.stations.front();
        config.stations.clear();
        for (Station& s : auto_stations(n, model.load, model.mode, "S"))
            config.stations.push_back(s);
    } else {
        throw ConfigError("unknown sweep parameter '" + param + "'");
    }
}

ExperimentResult run_experiment(const ExperimentSpec& spec, int workers)
{
    if (workers < 1)
        throw ConfigError("worker count must be at least 1");
    struct Task {
        Protocol protocol;
        double value;
        uint64_t seed;
    };
    std::vector<Task> tasks;
    for (Protocol p : spec.protocols)
        for (double v : spec.sweep_values)
            for (uint64_t seed : spec.seeds)
                tasks.push_back({p, v, seed});

    ExperimentResult result;
    result.rows.resize(tasks.size());
    std::vector<char> ok(tasks.size(), 0);
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;

    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size())
                return;
            const Task& t = tasks[i];
            try {
                SimConfig config = spec.base;
                config.protocol = t.protocol;
                apply_sweep(config, spec.sweep_param, t.value);
                config.seed = t.seed;
                const SimMetrics m = run(config);
                ResultRow row;
                row.experiment = spec.name;
                row.protocol = protocol_name(t.protocol);
                row.seed = t.seed;
                row.param = spec.sweep_param;
                row.value = t.value;
                row.throughput_mbps = m.throughput_mbps;
                row.goodput_mbps = m.goodput_mbps;
                row.collision_prob = m.collision_probability;
                row.retransmissions = m.retransmissions;
                row.jain = m.jain;
                row.maxmin_f = m.max_min_f;
                row.sim_time_s = config.sim_duration_s;
                result.rows[i] = row;
                ok[i] = 1;
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                result.partial = true;
                if (result.error.empty())
                    result.error = protocol_name(t.protocol) + " " + spec.sweep_param + "=" +
                                   format_double(t.value) + " seed=" + std::to_string(t.seed) +
                                   ": " + e.what();
            }
        }
    };

    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(worker);
        for (std::thread& t : pool)
            t.join();
    }

    if (result.partial) {
        std::vector<ResultRow> survivors;
        for (std::size_t i = 0; i < tasks.size(); ++i)
            if (ok[i])
                survivors.push_back(result.rows[i]);
        result.rows = std::move(survivors);
    }
    return result;
}

// ---------------------------------------------------------------------------
// CSV export
// ---------------------------------------------------------------------------

std::string results_csv(const std::vector<ResultRow>& rows, bool timestamp_header)
{
    std::ostringstream os;
    if (timestamp_header) {
        std::time_t now = std::time(nullptr);
        char buf[64];
        std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        os << "# generated " << buf << "\n";
    }
    os << "experiment,protocol,seed,param,value,throughput_mbps,goodput_mbps,"
          "collision_prob,retransmissions,jain,maxmin_f,sim_time_s\n";
    for (const ResultRow& r : rows) {
        os << r.experiment << ',' << r.protocol << ',' << r.seed << ',' << r.param << ','
           << format_double(r.value) << ',' << format_double(r.throughput_mbps) << ','
           << format_double(r.goodput_mbps) << ',' << format_double(r.collision_prob) << ','
           << r.retransmissions << ',' << format_double(r.jain) << ','
           << format_double(r.maxmin_f) << ',' << format_double(r.sim_time_s) << "\n";
    }
    return os.str();
}

std::string summary_csv(const std::vector<ResultRow>& rows)
{
    struct Acc {
        std::string experiment, protocol, param;
        double value = 0.0;
        std::vector<double> throughput, collision;
    };
    std::vector<Acc> groups;
    for (const ResultRow& r : rows) {
        Acc* acc = nullptr;
        for (Acc& g : groups)
            if (g.protocol == r.protocol && g.param == r.param && g.value == r.value) {
                acc = &g;
                break;
            }
        if (!acc) {
            groups.push_back(Acc{r.experiment, r.protocol, r.param, r.value, {}, {}});
            acc = &groups.back();
        }
        acc->throughput.push_back(r.throughput_mbps);
        acc->collision.push_back(r.collision_prob);
    }

    auto mean_of = [](const std::vector<double>& v) {
        double s = 0.0;
        for (double x : v)
            s += x;
        return v.empty() ? 0.0 : s / v.size();
    };
    auto stddev_of = [&](const std::vector<double>& v) {
        if (v.size() < 2)
            return 0.0;
        const double mu = mean_of(v);
        double s = 0.0;
        for (double x : v)
            s += (x - mu) * (x - mu);
        return std::sqrt(s / (v.size() - 1));
    };

    std::ostringstream os;
    os << "experiment,protocol,param,value,seeds,mean_throughput_mbps,stddev_throughput_mbps,"
          "mean_collision_prob,stddev_collision_prob\n";
    for (const Acc& g : groups) {
        os << g.experiment << ',' << g.protocol << ',' << g.param << ','
           << format_double(g.value) << ',' << g.throughput.size() << ','
           << format_double(mean_of(g.throughput)) << ','
           << format_double(stddev_of(g.throughput)) << ','
           << format_double(mean_of(g.collision)) << ','
           << format_double(stddev_of(g.collision)) << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Built-in scheduling walkthrough
// ---------------------------------------------------------------------------

std::string prs_worked_example()
{
    const std::vector<std::string> sa_ids = {"A", "B", "C", "D", "E"};
    const std::vector<double> sa_loads = {3.1, 2.2, 2.9, 1.3, 0.7};
    const std::vector<double> ra_loads = {3.4, 1.2, 2.1};
    const RuLayout layout = RuLayout::standard(Bandwidth::MHz40);
    const int m = sru_count(Bandwidth::MHz40);

    const PrsInitial initial = prs_initial(sa_loads, ra_loads, m);
    const PrsRevised revised = prs_revised(sa_loads, initial.s, m);

    std::vector<std::pair<std::string, int>> grants;
    for (std::size_t i = 0; i < sa_ids.size(); ++i)
        if (revised.r[i] > 0)
            grants.emplace_back(sa_ids[i], revised.r[i]);
    const PrsPlacement placement = prs_place(grants, layout);

    std::ostringstream os;
    os << "Scheduling walkthrough: 5 SA stations, 3 RA stations, 40 MHz (" << m << " SRUs)\n";
    os << "Initial split:  S=" << initial.s << ", T=" << initial.t << "\n";
    os << "Revised split:  r=[";
    for (std::size_t i = 0; i < revised.r.size(); ++i)
        os << (i ? "," : "") << revised.r[i];
    os << "], U=" << revised.u << ", V=" << revised.v << "\n";
    os << "Migrated to RA-zone:";
    if (revised.migrated.empty())
        os << " none";
    for (std::size_t idx : revised.migrated)
        os << " " << sa_ids[idx];
    os << "\n";

    os << "Placement:\n";
    std::vector<std::string> merges;
    for (const auto& sp : placement.sa) {
        os << "  " << sp.station << ": SRU " << sp.range.first << "-" << sp.range.last << " as";
        for (const RuNode& ru : sp.rus) {
            os << " [" << ru.sru_first;
            if (ru.sru_last != ru.sru_first)
                os << "-" << ru.sru_last;
            os << "]" << ru.tones << "t";
            if (ru.sru_last != ru.sru_first)
                merges.push_back("{" + std::to_string(ru.sru_first) + "," +
                                 std::to_string(ru.sru_last) + "}");
        }
        os << "\n";
    }
    os << "Merges:";
    if (merges.empty())
        os << " none";
    for (const std::string& mg : merges)
        os << " " << mg;
    os << "\n";
    os << "SA-zone SRUs = " << revised.u << "\n";
    os << "RA-zone SRUs = " << revised.v << " (SRU " << placement.ra_zone.first << "-"
       << placement.ra_zone.last << ", one logical channel)\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Presets
// ---------------------------------------------------------------------------

std::string preset_text(const std::string& name)
{
    if (name == "htfa_eval") {
        return "# Multi-channel contention evaluation, 10 stations.\n"
               "[sim]\n"
               "protocol = htfa\n"
               "sub_channels = 3\n"
               "slot_us = 50\n"
               "sifs_us = 10\n"
               "ack_us = 50\n"
               "w_min = 32\n"
               "alpha = 6\n"
               "data_airtime_us = 2500\n"
               "payload_bits = 12000\n"
               "handshake = two_way\n"
               "duration_s = 10\n"
               "seed = 1\n"
               "[stations]\n"
               "count = 10\n"
               "[experiment]\n"
               "name = htfa_wmin_sweep\n"
               "protocols = htfa\n"
               "sweep = w_min\n"
               "values = 8, 16, 32, 64, 128\n"
               "seeds = 1, 2, 3, 4, 5, 6, 7, 8, 9, 10\n";
    }
    if (name == "dcf_compare") {
        return "# Legacy single-channel contention, 3 stations on 3 sub-channels.\n"
               "[sim]\n"
               "protocol = legacy_dcf\n"
               "sub_channels = 3\n"
               "slot_us = 10\n"
               "sifs_us = 16\n"
               "ack_us = 44\n"
               "w_min = 32\n"
               "alpha = 5\n"
               "channel_rate_mbps = 54\n"
               "payload_bits = 12000\n"
               "duration_s = 10\n"
               "seed = 1\n"
               "[stations]\n"
               "count = 3\n"
               "[experiment]\n"
               "name = dcf_compare\n"
               "protocols = legacy_dcf, htfa\n"
               "sweep = w_min\n"
               "values = 32\n"
               "seeds = 1, 2, 3, 4, 5, 6, 7, 8, 9, 10\n";
    }
    if (name == "prs_indoor") {
        return "# Indoor uplink zoning scenario, 25 stations, 15 m cell.\n"
               "[sim]\n"
               "protocol = prs\n"
               "bandwidth_mhz = 40\n"
               "layout = standard\n"
               "radius_m = 15\n"
               "ap_antennas = 4\n"
               "carrier_ghz = 5\n"
               "pl_a = 18.7\n"
               "pl_b = 46.8\n"
               "pl_c = 20\n"
               "duration_s = 10\n"
               "seed = 1\n"
               "[stations]\n"
               "count = 20\n"
               "count_ra = 5\n"
               "[experiment]\n"
               "name = prs_indoor\n"
               "protocols = prs\n"
               "sweep = duration_s\n"
               "values = 10\n"
               "seeds = 1, 2, 3, 4, 5, 6, 7, 8, 9, 10\n";
    }
    if (name == "era_load") {
        return "# Mixed-load RU assignment scenario (light/medium/heavy classes).\n"
               "[sim]\n"
               "protocol = era\n"
               "bandwidth_mhz = 40\n"
               "layout = binary\n"
               "era_ll_threshold = 2\n"
               "duration_s = 10\n"
               "seed = 1\n"
               "[stations]\n"
               "L01 = 1\nL02 = 1\nL03 = 1\nL04 = 1\nL05 = 1\nL06 = 1\n"
               "L07 = 1\nL08 = 1\nL09 = 1\nL10 = 1\nL11 = 1\nL12 = 1\n"
               "M01 = 4\nM02 = 4\nM03 = 4\nM04 = 4\nM05 = 4\nM06 = 4\nM07 = 4\n"
               "H01 = 30\nH02 = 30\n"
               "[experiment]\n"
               "name = era_load\n"
               "protocols = era\n"
               "sweep = duration_s\n"
               "values = 10\n"
               "seeds = 1, 2, 3, 4, 5, 6, 7, 8, 9, 10\n";
    }
    throw ConfigError("unknown preset '" + name + "'");
}

} // namespace wlanlab
