#include "wlanlab/analytics.hpp"

#include <cmath>

namespace wlanlab {

namespace {

void check_probability(double p, const char* name)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw DomainError(std::string(name) + " must lie in [0, 1]");
}

double binomial(int m, int i)
{
    double c = 1.0;
    for (int k = 1; k <= i; ++k)
        c *= static_cast<double>(m - i + k) / k;
    return c;
}

} // namespace

double htfa_p1suc(int n, double tau, int r)
{
    check_probability(tau, "tau");
    if (n < 1 || r < 1)
        throw DomainError("htfa_p1suc requires n >= 1 and r >= 1");
    // sum_{k=0}^{r-1} (1/r) n tau (1-tau)^(n-1) = n tau (1-tau)^(n-1)
    return n * tau * std::pow(1.0 - tau, n - 1);
}

double htfa_ps(int i, int m, double p1suc)
{
    check_probability(p1suc, "p1suc");
    if (i < 0 || i > m)
        throw DomainError("htfa_ps requires 0 <= i <= m");
    return binomial(m, i) * std::pow(p1suc, i) * std::pow(1.0 - p1suc, m - i);
}

double htfa_es(int m, double p1suc, EsUpperBound upper)
{
    check_probability(p1suc, "p1suc");
    const int top = (upper == EsUpperBound::Full_M) ? m : m - 1;
    double es = 0.0;
    for (int i = 0; i <= top; ++i)
        es += i * htfa_ps(i, m, p1suc);
    return es;
}

double htfa_saturation(const HtfaModelInput& input, EsUpperBound upper)
{
    if (input.t_slot_us <= 0.0)
        throw DomainError("slot duration must be positive");
    if (input.n < 1 || input.m < 1)
        throw DomainError("htfa_saturation requires n >= 1 and m >= 1");

    auto tau_for = [&](int k) {
        if (input.tau >= 0.0)
            return input.tau;
        RaModelInput ra;
        ra.n = k;
        ra.w_min = input.w_min;
        ra.alpha = input.alpha;
        return ra_markov_solve(ra).tau;
    };

    // Even split: n % m channels carry one extra station.
    const int base = input.n / input.m;
    const int extra = input.n % input.m;
    double es_full = 0.0;
    if (base >= 1)
        es_full += (input.m - extra) * htfa_p1suc(base, tau_for(base));
    if (extra > 0)
        es_full += extra * htfa_p1suc(base + 1, tau_for(base + 1));

    double es = es_full;
    if (upper == EsUpperBound::Literal_Mminus1) {
        // The truncated-sum variant needs a homogeneous per-channel success
        // probability; the channel-averaged value is used.
        es = htfa_es(input.m, es_full / input.m, upper);
    }
    return input.mean_payload_bits * es / (input.t_slot_us * 1e-6);
}

double sa_saturation(int m_rus, double mean_payload_bits, double t_cycle_us)
{
    if (m_rus < 1 || mean_payload_bits <= 0.0 || t_cycle_us <= 0.0)
        throw DomainError("sa_saturation requires positive inputs");
    return m_rus * mean_payload_bits / (t_cycle_us * 1e-6);
}

double ra_tau_of_p(double p, int w_min, int alpha)
{
    check_probability(p, "p");
    // 2(1-2p) / ((1-2p)(W+1) + p W (1-(2p)^alpha)) rewritten with the
    // geometric sum so p = 1/2 needs no special case.
    double geo = 0.0;
    double term = 1.0;
    for (int i = 0; i < alpha; ++i) {
        geo += term;
        term *= 2.0 * p;
    }
    return 2.0 / (w_min + 1.0 + p * w_min * geo);
}

FixedPointResult ra_markov_solve(const RaModelInput& input)
{
    if (input.n < 1)
        throw DomainError("station count must be at least 1");
    FixedPointResult out;
    double p = 0.0;
    const double damping = 0.5;
    const double tol = 1e-10;
    const int max_iter = 100000;
    for (out.iterations = 0; out.iterations < max_iter; ++out.iterations) {
        const double tau = ra_tau_of_p(p, input.w_min, input.alpha);
        const double p_next = 1.0 - std::pow(1.0 - tau, input.n - 1);
        out.residual = std::fabs(p_next - p);
        out.tau = tau;
        out.p = p;
        if (out.residual < tol) {
            return out;
        }
        p = (1.0 - damping) * p + damping * p_next;
    }
    throw SolverError("fixed point did not converge; residual " + std::to_string(out.residual));
}

double ra_throughput(double tau, const RaModelInput& input)
{
    check_probability(tau, "tau");
    if (input.sigma_us <= 0.0 || input.t_s_us <= 0.0 || input.t_c_us <= 0.0)
        throw DomainError("slot and airtime durations must be positive");
    const int n = input.n;
    const double p_b = 1.0 - std::pow(1.0 - tau, n);
    const double p_s = n * tau * std::pow(1.0 - tau, n - 1);
    const double denom =
        (1.0 - p_b) * input.sigma_us + p_s * input.t_s_us + (p_b - p_s) * input.t_c_us;
    if (denom <= 0.0)
        throw DomainError("degenerate slot-time denominator");
    return p_s * input.mean_payload_bits / denom;
}

double system_throughput(const std::vector<double>& per_station)
{
    double sum = 0.0;
    for (double t : per_station)
        sum += t;
    return sum;
}

double max_min_fairness(const std::vector<double>& throughput, const std::vector<double>& load)
{
    if (throughput.size() != load.size() || throughput.empty())
        throw DomainError("throughput and load vectors must be nonempty and equal length");
    double lo = 0.0, hi = 0.0;
    for (std::size_t i = 0; i < throughput.size(); ++i) {
        if (load[i] <= 0.0)
            throw DomainError("InvalidLoad: loads must be positive");
        const double ratio = throughput[i] / load[i];
        if (i == 0) {
            lo = hi = ratio;
        } else {
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
    }
    return hi - lo;
}

double jain_index(const std::vector<double>& x)
{
    if (x.empty())
        throw DomainError("jain_index requires a nonempty vector");
    double sum = 0.0, sum_sq = 0.0;
    for (double v : x) {
        if (v < 0.0)
            throw DomainError("jain_index requires nonnegative values");
        sum += v;
        sum_sq += v * v;
    }
    if (sum_sq == 0.0)
        throw DomainError("jain_index is undefined for the all-zero vector");
    return sum * sum / (x.size() * sum_sq);
}

} // namespace wlanlab
