#pragma once

#include <vector>

#include "wlanlab/errors.hpp"

namespace wlanlab {

// ---------------------------------------------------------------------------
// HTFA multi-channel saturation model
// ---------------------------------------------------------------------------

// Per-sub-channel success probability: n tau (1-tau)^(n-1).  The uniform
// slot weights p_k = 1/r sum out of the expression.
double htfa_p1suc(int n, double tau, int r = 1);

// P_s(i) = C(m,i) p1suc^i (1-p1suc)^(m-i).
double htfa_ps(int i, int m, double p1suc);

// Expected number of sub-channels carrying a success per slot.  The model's
// printed sum stops at m-1 (Literal), which zeroes out m = 1; the Full mode
// includes the i = m term and equals m*p1suc.
enum class EsUpperBound { Literal_Mminus1, Full_M };
double htfa_es(int m, double p1suc, EsUpperBound upper = EsUpperBound::Full_M);

struct HtfaModelInput {
    int n = 0;         // total stations, split approximately evenly over m
    int m = 1;
    double tau = -1.0; // < 0 means: derive via the RA fixed point per channel
    double mean_payload_bits = 0.0; // per frame
    double t_slot_us = 0.0;
    // Used only when tau is derived:
    int w_min = 32;
    int alpha = 5;
};

// Saturation throughput in bits per second: E[p] * E_s / T_slot, where E_s
// sums the per-channel success probabilities under the even station split
// (channels left empty when m > n contribute nothing).
double htfa_saturation(const HtfaModelInput& input, EsUpperBound upper = EsUpperBound::Full_M);

// ---------------------------------------------------------------------------
// Scheduled-access throughput
// ---------------------------------------------------------------------------

// m * E[P] / T, bits per second with E[P] in bits and T in microseconds.
double sa_saturation(int m_rus, double mean_payload_bits, double t_cycle_us);

// ---------------------------------------------------------------------------
// RA Markov-chain fixed point
// ---------------------------------------------------------------------------

struct RaModelInput {
    int n = 1;
    int w_min = 32;
    int alpha = 5;
    double sigma_us = 9.0;  // empty slot
    double t_s_us = 0.0;    // success airtime
    double t_c_us = 0.0;    // collision airtime
    double mean_payload_bits = 0.0;
};

struct FixedPointResult {
    double tau = 0.0;
    double p = 0.0;
    int iterations = 0;
    double residual = 0.0;
};

// tau(p) in the singularity-free series form
//   tau = 2 / (W + 1 + p W sum_{i=0}^{alpha-1} (2p)^i)
// coupled with p = 1 - (1-tau)^(n-1), solved by damped fixed-point
// iteration (damping 0.5) to residual < 1e-10.
double ra_tau_of_p(double p, int w_min, int alpha);
FixedPointResult ra_markov_solve(const RaModelInput& input);

// Normalized throughput P_S E(P) / ((1-P_b) sigma + P_S T_S + (P_b-P_S) T_C).
double ra_throughput(double tau, const RaModelInput& input);

// ---------------------------------------------------------------------------
// Fairness metrics
// ---------------------------------------------------------------------------

double system_throughput(const std::vector<double>& per_station);

// max(t_i/l_i) - min(t_i/l_i); lower is fairer.
double max_min_fairness(const std::vector<double>& throughput, const std::vector<double>& load);

// (sum x)^2 / (n sum x^2), in (0, 1].
double jain_index(const std::vector<double>& x);

} // namespace wlanlab
