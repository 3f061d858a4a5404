"""OFDMA Wi-Fi MAC simulation lab: schedulers, analytical models, and a
deterministic discrete-event contention simulator."""

try:
    # Wheel layout: the extension lives inside the package.
    from . import _wlanlab as _core
except ImportError:
    # Build-tree layout: the extension sits on sys.path next to the package.
    import _wlanlab as _core

__all__ = [
    "ConfigError",
    "DomainError",
    "SolverError",
    "can_merge",
    "contention_window",
    "decode_frame",
    "difs",
    "eifs",
    "encode_frame",
    "era_classify",
    "era_schedule",
    "frame_table_csv",
    "free_space_pl",
    "htfa_distribute",
    "htfa_saturation",
    "indoor_pl",
    "jain_index",
    "layout_rows",
    "max_min_fairness",
    "mean_payload_bits",
    "pifs",
    "preset_text",
    "prs_split",
    "prs_worked_example",
    "ra_fixed_point",
    "ra_saturation_throughput",
    "run_sweep",
    "sa_saturation",
    "simulate",
    "sru_count",
    "system_throughput",
    "tf_cycle_duration",
    "winner_pl",
]

for _name in __all__:
    globals()[_name] = getattr(_core, _name)
del _name, _core
