#pragma once

#include <functional>
#include <string>

#include "wlanlab/errors.hpp"

namespace wlanlab {

struct PathLossParams {
    // WINNER-II style coefficients; no defaults are endorsed here, the
    // caller supplies them.
    double a_coef = 0.0;
    double b_coef = 0.0;
    double c_coef = 0.0;
    double x_coef = 0.0;
    double carrier_ghz = 5.0;
    double breakpoint_m = 5.0;
    double floor_penetration_db = 0.0;
    double wall_penetration_db = 0.0;

    void validate() const;
};

// 20 log10(d) + 20 log10(f) - 147.55, with d in meters and f in Hz.
double free_space_pl(double d_m, double f_hz);

// Free space up to the breakpoint distance, slope 3.5 beyond it.
double indoor_pl(double d_m, const PathLossParams& p);

// indoor_pl plus floor and wall penetration losses.
double overall_indoor_pl(double d_m, const PathLossParams& p);

// A log10(d) + B + C log10(fc/5.0) + X.
double winner_pl(double d_m, const PathLossParams& p);

struct PayloadDistribution {
    std::string name;
    double p_min = 0.0;
    double p_max = 0.0;
    std::function<double(double)> density;
};

// Mean of the named function over [p_min, p_max], by adaptive quadrature to
// relative tolerance 1e-9.
double mean_payload(const PayloadDistribution& dist);

// Named presets.
PayloadDistribution constant_payload(double bits);
PayloadDistribution linear_payload(double p_min, double p_max);
// Flow sizes: truncated lognormal with min 1 KB, mean 500 KB, max 5 MB
// (sizes in bits).  The lognormal sigma is fitted so the truncated mean hits
// the stated value.
PayloadDistribution lognormal_flow_sizes();
PayloadDistribution payload_preset(const std::string& name);

} // namespace wlanlab
