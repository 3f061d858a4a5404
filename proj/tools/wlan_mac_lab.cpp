// wlan-mac-lab: scheduling, analytical models, and simulation experiments
// from INI-style scenario files.
//
// Exit codes: 0 success, 2 configuration error, 3 runtime error,
// 4 partial results (a sweep finished with failed runs).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wlanlab/analytics.hpp"
#include "wlanlab/errors.hpp"
#include "wlanlab/harness.hpp"
#include "wlanlab/sim_engine.hpp"

namespace {

using namespace wlanlab;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;
constexpr int kExitPartial = 4;

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw ConfigError("cannot write '" + path + "'");
    f << content;
}

// ---------------------------------------------------------------------------
// schedule <file>
// ---------------------------------------------------------------------------

int cmd_schedule(const std::string& file, const std::string& format)
{
    const SimConfig config = sim_config_from_ini(IniFile::parse_file(file));
    std::ostringstream os;
    if (config.protocol == Protocol::HTFA || config.protocol == Protocol::LegacyDCF) {
        const HtfaState state = htfa_distribute(config.stations, config.sub_channels);
        if (format == "csv") {
            os << "channel,station\n";
            for (int c = 0; c < state.sub_channel_count(); ++c)
                for (const std::string& id : state.stations_on(c))
                    os << c << ',' << id << "\n";
        } else {
            for (int c = 0; c < state.sub_channel_count(); ++c) {
                os << "sub-channel " << c << ":";
                for (const std::string& id : state.stations_on(c))
                    os << " " << id;
                os << "\n";
            }
        }
    } else if (config.protocol == Protocol::ERA) {
        const RuLayout layout = RuLayout::binary(config.bandwidth);
        const auto classes = era_classify(config.stations, config.era_ll_threshold);
        EraQueues queues;
        for (const Station& s : config.stations) {
            switch (classes.at(s.id)) {
            case LoadClass::HL: queues.hl.push_back(s.id); break;
            case LoadClass::ML: queues.ml.push_back(s.id); break;
            case LoadClass::LL: queues.ll.push_back(s.id); break;
            }
        }
        const std::vector<RuGrant> grants = era_assign(queues, layout);
        if (format == "csv")
            os << "station,level,index,tones,sru_first,sru_last\n";
        for (const RuGrant& g : grants) {
            if (format == "csv")
                os << g.station << ',' << g.ru.level << ',' << g.ru.index << ',' << g.ru.tones
                   << ',' << g.ru.sru_first << ',' << g.ru.sru_last << "\n";
            else
                os << g.station << ": RU(" << g.ru.level << "," << g.ru.index << ") "
                   << g.ru.tones << " tones, SRU " << g.ru.sru_first << "-" << g.ru.sru_last
                   << "\n";
        }
    } else { // PRS
        std::vector<double> sa_loads, ra_loads;
        std::vector<std::string> sa_ids;
        for (const Station& s : config.stations) {
            if (s.mode == AccessMode::SA) {
                sa_ids.push_back(s.id);
                sa_loads.push_back(s.load);
            } else {
                ra_loads.push_back(s.load);
            }
        }
        const RuLayout layout = RuLayout::standard(config.bandwidth);
        const int m = sru_count(config.bandwidth);
        const PrsInitial initial = prs_initial(sa_loads, ra_loads, m);
        const PrsRevised revised = prs_revised(sa_loads, initial.s, m);
        std::vector<std::pair<std::string, int>> grants;
        for (std::size_t i = 0; i < sa_ids.size(); ++i)
            if (revised.r[i] > 0)
                grants.emplace_back(sa_ids[i], revised.r[i]);
        const PrsPlacement placement = prs_place(grants, layout);
        if (format == "csv") {
            os << "station,zone,sru_first,sru_last\n";
            for (const auto& sp : placement.sa)
                os << sp.station << ",SA," << sp.range.first << ',' << sp.range.last << "\n";
            for (std::size_t idx : revised.migrated)
                os << sa_ids[idx] << ",RA," << placement.ra_zone.first << ','
                   << placement.ra_zone.last << "\n";
            os << "*,RA," << placement.ra_zone.first << ',' << placement.ra_zone.last << "\n";
        } else {
            os << "SA-zone (U=" << revised.u << "):\n";
            for (const auto& sp : placement.sa)
                os << "  " << sp.station << ": SRU " << sp.range.first << "-" << sp.range.last
                   << "\n";
            os << "RA-zone (V=" << revised.v << "): SRU " << placement.ra_zone.first << "-"
               << placement.ra_zone.last << "\n";
            for (std::size_t idx : revised.migrated)
                os << "  migrated: " << sa_ids[idx] << "\n";
        }
    }
    std::cout << os.str();
    return kExitOk;
}

// ---------------------------------------------------------------------------
// analytic <model>
// ---------------------------------------------------------------------------

struct AnalyticOptions {
    std::string model;
    int n = 10;
    int m = 3;
    int w_min = 32;
    int alpha = 5;
    double payload_bits = 12000.0;
    double t_slot_us = 50.0;
    double sigma_us = 9.0;
    double t_s_us = 0.0;
    double t_c_us = 0.0;
    std::string sweep;
    std::vector<double> values;
};

int cmd_analytic(const AnalyticOptions& opt)
{
    std::vector<double> points = opt.values;
    if (points.empty())
        points.push_back(0.0); // single evaluation at the fixed settings

    std::cout << "parameter,value,model_output\n";
    for (double v : points) {
        AnalyticOptions cur = opt;
        if (!opt.sweep.empty()) {
            if (opt.sweep == "w_min")
                cur.w_min = static_cast<int>(v);
            else if (opt.sweep == "n")
                cur.n = static_cast<int>(v);
            else if (opt.sweep == "m")
                cur.m = static_cast<int>(v);
            else if (opt.sweep == "alpha")
                cur.alpha = static_cast<int>(v);
            else if (opt.sweep == "payload_bits")
                cur.payload_bits = v;
            else
                throw ConfigError("unknown sweep parameter '" + opt.sweep + "'");
        }
        double out = 0.0;
        if (opt.model == "htfa") {
            HtfaModelInput in;
            in.n = cur.n;
            in.m = cur.m;
            in.mean_payload_bits = cur.payload_bits;
            in.t_slot_us = cur.t_slot_us;
            in.w_min = cur.w_min;
            in.alpha = cur.alpha;
            out = htfa_saturation(in) / 1e6; // Mbps
        } else if (opt.model == "ra") {
            RaModelInput in;
            in.n = cur.n;
            in.w_min = cur.w_min;
            in.alpha = cur.alpha;
            in.sigma_us = cur.sigma_us;
            in.t_s_us = cur.t_s_us > 0 ? cur.t_s_us : 1000.0;
            in.t_c_us = cur.t_c_us > 0 ? cur.t_c_us : in.t_s_us;
            in.mean_payload_bits = cur.payload_bits;
            out = ra_throughput(ra_markov_solve(in).tau, in); // bits per microsecond = Mbps
        } else if (opt.model == "tau") {
            RaModelInput in;
            in.n = cur.n;
            in.w_min = cur.w_min;
            in.alpha = cur.alpha;
            out = ra_markov_solve(in).tau;
        } else if (opt.model == "sa") {
            out = sa_saturation(cur.m, cur.payload_bits, cur.t_slot_us) / 1e6;
        } else {
            throw ConfigError("unknown model '" + opt.model +
                              "' (expected htfa, ra, tau, or sa)");
        }
        std::cout << (opt.sweep.empty() ? opt.model : opt.sweep) << ',' << fmt(v) << ','
                  << fmt(out) << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// simulate / sweep
// ---------------------------------------------------------------------------

int cmd_simulate(const std::string& file, int64_t seed_override, bool trace,
                 const std::string& format)
{
    SimConfig config = sim_config_from_ini(IniFile::parse_file(file));
    if (seed_override >= 0)
        config.seed = static_cast<uint64_t>(seed_override);
    const SimMetrics m = run(config, trace ? &std::cerr : nullptr);
    if (format == "csv") {
        std::cout << "metric,value\n"
                  << "throughput_mbps," << fmt(m.throughput_mbps) << "\n"
                  << "goodput_mbps," << fmt(m.goodput_mbps) << "\n"
                  << "collision_prob," << fmt(m.collision_probability) << "\n"
                  << "retransmissions," << m.retransmissions << "\n"
                  << "jain," << fmt(m.jain) << "\n"
                  << "maxmin_f," << fmt(m.max_min_f) << "\n";
    } else {
        std::cout << "protocol:         " << protocol_name(config.protocol) << "\n"
                  << "simulated:        " << fmt(m.simulated_us / 1e6) << " s\n"
                  << "throughput:       " << fmt(m.throughput_mbps) << " Mbps\n"
                  << "goodput:          " << fmt(m.goodput_mbps) << " Mbps\n"
                  << "collision prob:   " << fmt(m.collision_probability) << "\n"
                  << "retransmissions:  " << m.retransmissions << "\n"
                  << "jain index:       " << fmt(m.jain) << "\n"
                  << "max-min F:        " << fmt(m.max_min_f) << "\n";
    }
    return kExitOk;
}

int cmd_sweep(const std::string& file, const std::string& out_dir, int workers)
{
    const ExperimentSpec spec = experiment_from_ini(IniFile::parse_file(file));
    const ExperimentResult result = run_experiment(spec, workers);

    std::filesystem::create_directories(out_dir);
    const std::string base = out_dir + "/" + spec.name;
    const std::string suffix = result.partial ? ".partial" : "";
    write_file(base + "_results.csv" + suffix, results_csv(result.rows));
    write_file(base + "_summary.csv" + suffix, summary_csv(result.rows));

    if (result.partial) {
        std::cerr << "sweep finished with failures; first error: " << result.error << "\n";
        return kExitPartial;
    }
    std::cout << "wrote " << result.rows.size() << " rows to " << base << "_results.csv\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// frames
// ---------------------------------------------------------------------------

int cmd_frames_encode(const std::string& name)
{
    for (const FrameKindRow& row : frame_kind_table()) {
        if (name == row.name) {
            const auto [type_bits, subtype_bits] = encode_type_subtype(row.kind);
            char type_s[3], sub_s[5];
            for (int b = 0; b < 2; ++b)
                type_s[b] = ((type_bits >> (1 - b)) & 1) ? '1' : '0';
            type_s[2] = 0;
            for (int b = 0; b < 4; ++b)
                sub_s[b] = ((subtype_bits >> (3 - b)) & 1) ? '1' : '0';
            sub_s[4] = 0;
            std::cout << type_s << " " << sub_s << "\n";
            return kExitOk;
        }
    }
    throw ConfigError("unknown frame name '" + name + "' (see 'frames table')");
}

uint8_t parse_bits(const std::string& s, int width)
{
    if (static_cast<int>(s.size()) != width)
        throw ConfigError("expected " + std::to_string(width) + " bits, got '" + s + "'");
    uint8_t v = 0;
    for (char c : s) {
        if (c != '0' && c != '1')
            throw ConfigError("expected binary digits, got '" + s + "'");
        v = static_cast<uint8_t>((v << 1) | (c - '0'));
    }
    return v;
}

int cmd_frames_decode(const std::string& type_s, const std::string& subtype_s)
{
    const FrameKind kind = decode_type_subtype(parse_bits(type_s, 2), parse_bits(subtype_s, 4));
    for (const FrameKindRow& row : frame_kind_table())
        if (row.kind == kind) {
            std::cout << row.name << "\n";
            return kExitOk;
        }
    return kExitRuntime; // unreachable: decode succeeded, so the row exists
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"OFDMA Wi-Fi MAC scheduling and simulation lab"};
    app.require_subcommand(1);

    std::string file, out_dir = "out", format = "text", model, frame_name, bits2, bits4;
    std::string example_name;
    int workers = 1;
    int64_t seed = -1;
    bool trace = false;
    AnalyticOptions aopt;

    auto* schedule = app.add_subcommand("schedule", "Print the schedule for a scenario file");
    schedule->add_option("file", file)->required();
    schedule->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));

    auto* analytic = app.add_subcommand("analytic", "Evaluate an analytical model");
    analytic->add_option("model", aopt.model)->required();
    analytic->add_option("--n", aopt.n);
    analytic->add_option("--m", aopt.m);
    analytic->add_option("--w-min", aopt.w_min);
    analytic->add_option("--alpha", aopt.alpha);
    analytic->add_option("--payload-bits", aopt.payload_bits);
    analytic->add_option("--t-slot", aopt.t_slot_us);
    analytic->add_option("--sigma", aopt.sigma_us);
    analytic->add_option("--t-s", aopt.t_s_us);
    analytic->add_option("--t-c", aopt.t_c_us);
    analytic->add_option("--sweep", aopt.sweep);
    analytic->add_option("--values", aopt.values)->delimiter(',');

    auto* simulate = app.add_subcommand("simulate", "Run one simulation from a scenario file");
    simulate->add_option("file", file)->required();
    simulate->add_option("--seed", seed);
    simulate->add_flag("--trace", trace);
    simulate->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));

    auto* sweep = app.add_subcommand("sweep", "Run a sweep experiment and export CSV");
    sweep->add_option("file", file)->required();
    sweep->add_option("--out", out_dir);
    sweep->add_option("--workers", workers)->check(CLI::PositiveNumber);

    auto* frames = app.add_subcommand("frames", "Frame type/subtype codec");
    frames->require_subcommand(1);
    auto* fr_encode = frames->add_subcommand("encode", "Name -> bits");
    fr_encode->add_option("name", frame_name)->required();
    auto* fr_decode = frames->add_subcommand("decode", "Bits -> name");
    fr_decode->add_option("type_bits", bits2)->required();
    fr_decode->add_option("subtype_bits", bits4)->required();
    auto* fr_table = frames->add_subcommand("table", "Dump the full table as CSV");

    auto* example = app.add_subcommand("example", "Built-in walkthroughs");
    example->add_option("name", example_name)->required()->check(CLI::IsMember({"prs"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (schedule->parsed())
            return cmd_schedule(file, format);
        if (analytic->parsed())
            return cmd_analytic(aopt);
        if (simulate->parsed())
            return cmd_simulate(file, seed, trace, format);
        if (sweep->parsed())
            return cmd_sweep(file, out_dir, workers);
        if (frames->parsed()) {
            if (fr_encode->parsed())
                return cmd_frames_encode(frame_name);
            if (fr_decode->parsed())
                return cmd_frames_decode(bits2, bits4);
            if (fr_table->parsed()) {
                std::cout << frame_table_csv();
                return kExitOk;
            }
        }
        if (example->parsed()) {
            std::cout << prs_worked_example();
            return kExitOk;
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitConfig;
}
