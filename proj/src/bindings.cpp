#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "wlanlab/analytics.hpp"
#include "wlanlab/channel.hpp"
#include "wlanlab/harness.hpp"
#include "wlanlab/mac_primitives.hpp"
#include "wlanlab/ru_model.hpp"
#include "wlanlab/schedulers.hpp"
#include "wlanlab/sim_engine.hpp"

namespace py = pybind11;
using namespace wlanlab;

namespace {

TimingParams timing_of(int slot_us, int sifs_us, int ack_us, int w_min, int alpha)
{
    TimingParams t;
    t.slot_us = slot_us;
    t.sifs_us = sifs_us;
    t.ack_time_us = ack_us;
    t.w_min = w_min;
    t.alpha = alpha;
    return t;
}

py::dict ru_dict(const RuNode& n)
{
    py::dict d;
    d["level"] = n.level;
    d["index"] = n.index;
    d["tones"] = n.tones;
    d["sru_first"] = n.sru_first;
    d["sru_last"] = n.sru_last;
    return d;
}

py::dict metrics_dict(const SimMetrics& m)
{
    py::dict d;
    d["simulated_us"] = m.simulated_us;
    d["attempts"] = m.attempts;
    d["colliding_attempts"] = m.colliding_attempts;
    d["retransmissions"] = m.retransmissions;
    d["successes"] = m.successes;
    d["throughput_mbps"] = m.throughput_mbps;
    d["goodput_mbps"] = m.goodput_mbps;
    d["collision_probability"] = m.collision_probability;
    d["jain"] = m.jain;
    d["max_min_fairness"] = m.max_min_f;
    py::dict per;
    for (const auto& [id, sm] : m.per_station) {
        py::dict s;
        s["offered_bits"] = sm.offered_bits;
        s["delivered_bits"] = sm.delivered_bits;
        s["goodput_bits"] = sm.goodput_bits;
        s["dropped_bits"] = sm.dropped_bits;
        s["retransmissions"] = sm.retransmissions;
        s["collisions"] = sm.collisions;
        s["drops"] = sm.drops;
        per[py::str(id)] = s;
    }
    d["per_station"] = per;
    return d;
}

} // namespace

PYBIND11_MODULE(_wlanlab, m)
{
    m.doc() = "OFDMA Wi-Fi MAC simulation and analytical-model toolkit";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);

    // -- Resource-unit layout ------------------------------------------------
    m.def("sru_count", [](int mhz) { return sru_count(bandwidth_from_mhz(mhz)); },
          py::arg("bandwidth_mhz"), "Number of 26-tone units across the channel.");
    m.def(
        "layout_rows",
        [](int mhz, const std::string& kind) {
            const RuLayout layout = (kind == "binary")
                                        ? RuLayout::binary(bandwidth_from_mhz(mhz))
                                        : RuLayout::standard(bandwidth_from_mhz(mhz));
            py::list rows;
            for (const auto& row : layout.rows()) {
                py::list out;
                for (const RuNode& n : row)
                    out.append(ru_dict(n));
                rows.append(out);
            }
            return rows;
        },
        py::arg("bandwidth_mhz"), py::arg("kind") = "standard",
        "All resource units by row, widest first.");
    m.def(
        "can_merge",
        [](int mhz, const std::vector<int>& srus) {
            return RuLayout::standard(bandwidth_from_mhz(mhz))
                .can_merge(std::set<int>(srus.begin(), srus.end()));
        },
        py::arg("bandwidth_mhz"), py::arg("srus"),
        "Whether the SRU set forms one valid larger unit.");

    // -- MAC primitives ------------------------------------------------------
    m.def("pifs", [](int slot, int sifs) { return pifs(timing_of(slot, sifs, 0, 1, 0)); },
          py::arg("slot_us"), py::arg("sifs_us"));
    m.def("difs", [](int slot, int sifs) { return difs(timing_of(slot, sifs, 0, 1, 0)); },
          py::arg("slot_us"), py::arg("sifs_us"));
    m.def("eifs",
          [](int slot, int sifs, int ack) { return eifs(timing_of(slot, sifs, ack, 1, 0)); },
          py::arg("slot_us"), py::arg("sifs_us"), py::arg("ack_us"));
    m.def(
        "contention_window",
        [](int stage, int w_min, int alpha) {
            return window(stage, timing_of(9, 16, 44, w_min, alpha));
        },
        py::arg("stage"), py::arg("w_min"), py::arg("alpha"),
        "Backoff window at the given stage, capped at 2^alpha * w_min.");
    m.def("frame_table_csv", &frame_table_csv);
    m.def(
        "decode_frame",
        [](int type_bits, int subtype_bits) {
            const FrameKind kind = decode_type_subtype(static_cast<uint8_t>(type_bits),
                                                       static_cast<uint8_t>(subtype_bits));
            for (const auto& row : frame_kind_table())
                if (row.kind == kind)
                    return std::string(row.name);
            throw DomainError("UnknownFrameKind");
        },
        py::arg("type_bits"), py::arg("subtype_bits"),
        "Frame name for a (type, subtype) bit pair.");
    m.def(
        "encode_frame",
        [](const std::string& name) {
            for (const auto& row : frame_kind_table())
                if (row.name == name)
                    return py::make_tuple(int(row.type_bits), int(row.subtype_bits));
            throw DomainError("UnknownFrameKind: " + name);
        },
        py::arg("name"), "(type, subtype) bits for a frame name.");

    // -- Channel models ------------------------------------------------------
    m.def("free_space_pl", &free_space_pl, py::arg("distance_m"), py::arg("frequency_hz"));
    m.def(
        "indoor_pl",
        [](double d, double carrier_ghz, double breakpoint_m, double floor_db, double wall_db) {
            PathLossParams p;
            p.carrier_ghz = carrier_ghz;
            p.breakpoint_m = breakpoint_m;
            p.floor_penetration_db = floor_db;
            p.wall_penetration_db = wall_db;
            return overall_indoor_pl(d, p);
        },
        py::arg("distance_m"), py::arg("carrier_ghz") = 5.0, py::arg("breakpoint_m") = 5.0,
        py::arg("floor_db") = 0.0, py::arg("wall_db") = 0.0,
        "Breakpoint path loss plus penetration losses, in dB.");
    m.def(
        "winner_pl",
        [](double d, double a, double b, double c, double x, double carrier_ghz) {
            PathLossParams p;
            p.a_coef = a;
            p.b_coef = b;
            p.c_coef = c;
            p.x_coef = x;
            p.carrier_ghz = carrier_ghz;
            return winner_pl(d, p);
        },
        py::arg("distance_m"), py::arg("a"), py::arg("b"), py::arg("c") = 20.0,
        py::arg("x") = 0.0, py::arg("carrier_ghz") = 5.0);
    m.def(
        "mean_payload_bits",
        [](const std::string& preset) { return mean_payload(payload_preset(preset)); },
        py::arg("preset"), "Mean payload of a named distribution preset.");

    // -- Schedulers ----------------------------------------------------------
    m.def(
        "htfa_distribute",
        [](const std::vector<std::string>& ids, int m_channels) {
            std::vector<Station> stations;
            for (const auto& id : ids)
                stations.push_back({id, 1.0, AccessMode::RA, 1});
            const HtfaState state = htfa_distribute(stations, m_channels);
            std::vector<std::vector<std::string>> out;
            for (int c = 0; c < state.sub_channel_count(); ++c)
                out.push_back(state.stations_on(c));
            return out;
        },
        py::arg("station_ids"), py::arg("sub_channels"),
        "Balanced station-to-sub-channel distribution.");
    m.def(
        "era_classify",
        [](const std::vector<double>& loads, double ll_threshold) {
            std::vector<std::string> out;
            for (double l : loads) {
                switch (era_classify_one(l, ll_threshold)) {
                case LoadClass::LL:
                    out.push_back("LL");
                    break;
                case LoadClass::ML:
                    out.push_back("ML");
                    break;
                case LoadClass::HL:
                    out.push_back("HL");
                    break;
                }
            }
            return out;
        },
        py::arg("loads"), py::arg("ll_threshold"));
    m.def(
        "era_schedule",
        [](const std::vector<std::string>& hl, const std::vector<std::string>& ml,
           const std::vector<std::string>& ll, int mhz) {
            EraQueues q;
            q.hl.assign(hl.begin(), hl.end());
            q.ml.assign(ml.begin(), ml.end());
            q.ll.assign(ll.begin(), ll.end());
            const auto grants = era_assign(q, RuLayout::binary(bandwidth_from_mhz(mhz)));
            py::list out;
            for (const RuGrant& g : grants) {
                py::dict d = ru_dict(g.ru);
                d["station"] = g.station;
                out.append(d);
            }
            return out;
        },
        py::arg("hl"), py::arg("ml"), py::arg("ll"), py::arg("bandwidth_mhz") = 40,
        "One scheduling flow over the class queues; unserved stations wait.");
    m.def(
        "prs_split",
        [](const std::vector<double>& sa_loads, const std::vector<double>& ra_loads, int line) {
            const PrsInitial initial = prs_initial(sa_loads, ra_loads, line);
            const PrsRevised revised = prs_revised(sa_loads, initial.s, line);
            py::dict d;
            d["s"] = initial.s;
            d["t"] = initial.t;
            d["r"] = revised.r;
            d["u"] = revised.u;
            d["v"] = revised.v;
            d["migrated"] = revised.migrated;
            return d;
        },
        py::arg("sa_loads"), py::arg("ra_loads"), py::arg("sru_line") = 18,
        "Proportional SA/RA zone split with the per-station revision.");

    // -- Analytical models ---------------------------------------------------
    m.def(
        "ra_fixed_point",
        [](int n, int w_min, int alpha) {
            RaModelInput in;
            in.n = n;
            in.w_min = w_min;
            in.alpha = alpha;
            const FixedPointResult r = ra_markov_solve(in);
            py::dict d;
            d["tau"] = r.tau;
            d["p"] = r.p;
            d["iterations"] = r.iterations;
            d["residual"] = r.residual;
            return d;
        },
        py::arg("n"), py::arg("w_min") = 32, py::arg("alpha") = 5,
        "Transmission/collision probabilities of the saturated backoff chain.");
    m.def(
        "ra_saturation_throughput",
        [](int n, int w_min, int alpha, double sigma_us, double t_s_us, double t_c_us,
           double payload_bits) {
            RaModelInput in;
            in.n = n;
            in.w_min = w_min;
            in.alpha = alpha;
            in.sigma_us = sigma_us;
            in.t_s_us = t_s_us;
            in.t_c_us = t_c_us;
            in.mean_payload_bits = payload_bits;
            return ra_throughput(ra_markov_solve(in).tau, in);
        },
        py::arg("n"), py::arg("w_min"), py::arg("alpha"), py::arg("sigma_us"),
        py::arg("t_s_us"), py::arg("t_c_us"), py::arg("payload_bits"),
        "Saturation throughput in bits per microsecond.");
    m.def(
        "htfa_saturation",
        [](int n, int m_channels, double payload_bits, double t_slot_us, int w_min, int alpha) {
            HtfaModelInput in;
            in.n = n;
            in.m = m_channels;
            in.mean_payload_bits = payload_bits;
            in.t_slot_us = t_slot_us;
            in.w_min = w_min;
            in.alpha = alpha;
            return htfa_saturation(in);
        },
        py::arg("n"), py::arg("sub_channels"), py::arg("payload_bits"), py::arg("t_slot_us"),
        py::arg("w_min") = 32, py::arg("alpha") = 5,
        "Multi-channel saturation throughput in bits per second.");
    m.def("sa_saturation", &sa_saturation, py::arg("rus"), py::arg("payload_bits"),
          py::arg("t_cycle_us"), "Scheduled-access throughput in bits per second.");
    m.def("tf_cycle_duration", &tf_cycle_duration, py::arg("t_header_us"), py::arg("t_tf_us"),
          py::arg("t_payload_us"), py::arg("t_ack_us"), py::arg("sifs_us"), py::arg("delta_us"));
    m.def("jain_index", &jain_index, py::arg("values"));
    m.def("max_min_fairness", &max_min_fairness, py::arg("throughput"), py::arg("load"));
    m.def("system_throughput", &system_throughput, py::arg("per_station"));

    // -- Simulation and experiments ------------------------------------------
    m.def(
        "simulate",
        [](const std::string& scenario, std::optional<uint64_t> seed) {
            SimConfig config = sim_config_from_ini(IniFile::parse(scenario, "<python>"));
            if (seed)
                config.seed = *seed;
            config.validate();
            return metrics_dict(run(config));
        },
        py::arg("scenario"), py::arg("seed") = py::none(),
        "Run one simulation from a scenario text; returns the metrics.");
    m.def(
        "run_sweep",
        [](const std::string& scenario, int workers, bool timestamp_header) {
            const ExperimentSpec spec = experiment_from_ini(IniFile::parse(scenario, "<python>"));
            const ExperimentResult result = run_experiment(spec, workers);
            py::dict d;
            d["csv"] = results_csv(result.rows, timestamp_header);
            d["summary_csv"] = summary_csv(result.rows);
            d["partial"] = result.partial;
            d["error"] = result.error;
            return d;
        },
        py::arg("scenario"), py::arg("workers") = 1, py::arg("timestamp_header") = false,
        "Run a sweep experiment; returns the CSV tables.");
    m.def("preset_text", &preset_text, py::arg("name"),
          "Scenario text of a shipped preset (htfa_eval, dcf_compare, prs_indoor, era_load).");
    m.def("prs_worked_example", &prs_worked_example,
          "Reference output of the built-in zoning example.");
}
