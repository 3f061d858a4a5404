#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "wlanlab/analytics.hpp"

using namespace wlanlab;

TEST_CASE("per-channel success probability")
{
    CHECK(htfa_p1suc(5, 0.0) == doctest::Approx(0.0));
    CHECK(htfa_p1suc(1, 1.0) == doctest::Approx(1.0));
    CHECK(htfa_p1suc(10, 0.05) == doctest::Approx(10 * 0.05 * std::pow(0.95, 9)).epsilon(1e-12));
    CHECK(htfa_p1suc(10, 0.05) == doctest::Approx(0.3151).epsilon(1e-3));
    // The uniform slot weights cancel: any r gives the same value.
    CHECK(htfa_p1suc(10, 0.05, 1) == doctest::Approx(htfa_p1suc(10, 0.05, 50)).epsilon(1e-12));
    CHECK_THROWS_AS(htfa_p1suc(10, 1.5), DomainError);
}

TEST_CASE("success-count distribution")
{
    CHECK(htfa_ps(2, 3, 0.5) == doctest::Approx(0.375).epsilon(1e-12));
    CHECK(htfa_ps(3, 3, 1.0) == doctest::Approx(1.0));
    CHECK(htfa_ps(0, 3, 1.0) == doctest::Approx(0.0));

    for (int m : {1, 3, 7, 12}) {
        for (double p : {0.0, 0.2, 0.5, 0.9}) {
            double sum = 0.0;
            for (int i = 0; i <= m; ++i)
                sum += htfa_ps(i, m, p);
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(htfa_ps(4, 3, 0.5), DomainError);
}

TEST_CASE("expected successful channel count")
{
    CHECK(htfa_es(3, 0.5, EsUpperBound::Full_M) == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(htfa_es(3, 0.0, EsUpperBound::Full_M) == doctest::Approx(0.0));
    CHECK(htfa_es(3, 0.0, EsUpperBound::Literal_Mminus1) == doctest::Approx(0.0));
    // The truncated sum has only the i = 0 term at m = 1.
    CHECK(htfa_es(1, 0.7, EsUpperBound::Literal_Mminus1) == doctest::Approx(0.0));
    // Full mode equals the binomial-mean identity m*p for any p.
    for (int m : {1, 2, 5, 11})
        for (double p : {0.1, 0.33, 0.8})
            CHECK(htfa_es(m, p, EsUpperBound::Full_M) == doctest::Approx(m * p).epsilon(1e-12));
}

TEST_CASE("multi-channel saturation throughput")
{
    // Unit identity: one channel, one station, tau such that p1suc = tau.
    HtfaModelInput in;
    in.n = 1;
    in.m = 1;
    in.tau = 0.5;
    in.mean_payload_bits = 100.0;
    in.t_slot_us = 50.0;
    CHECK(htfa_saturation(in) == doctest::Approx(100.0 * 0.5 / 50e-6).epsilon(1e-12));

    // E[p]=12000 bits, E_s=1.5, T_slot=50us -> 360 Mbps.  Three stations on
    // three channels at tau=0.5 give exactly E_s = 3 * 1*0.5 = 1.5.
    in.n = 3;
    in.m = 3;
    in.tau = 0.5;
    in.mean_payload_bits = 12000.0;
    CHECK(htfa_saturation(in) == doctest::Approx(360e6).epsilon(1e-12));
}

TEST_CASE("saturation throughput vs channel count rises then plateaus")
{
    HtfaModelInput in;
    in.n = 10;
    in.mean_payload_bits = 12000.0;
    in.t_slot_us = 50.0;
    in.w_min = 32;
    in.alpha = 6;

    std::vector<double> s;
    for (int m = 1; m <= 15; ++m) {
        in.m = m;
        s.push_back(htfa_saturation(in));
    }
    // Nondecreasing to m = n, constant beyond (empty channels add nothing).
    int argmax = 0;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] > s[argmax])
            argmax = static_cast<int>(i);
    CHECK(argmax + 1 <= in.n);
    for (std::size_t i = 10; i < s.size(); ++i)
        CHECK(s[i] == doctest::Approx(s[9]).epsilon(1e-12));
}

TEST_CASE("scheduled-access throughput arithmetic")
{
    CHECK(sa_saturation(1, 400.0, 400.0) == doctest::Approx(1e6).epsilon(1e-12)); // 1 Mbps
    CHECK(sa_saturation(8, 12000.0, 400.0) == doctest::Approx(240e6).epsilon(1e-12));
    CHECK(sa_saturation(6, 500.0, 100.0) ==
          doctest::Approx(2 * sa_saturation(3, 500.0, 100.0)).epsilon(1e-12));
    CHECK_THROWS_AS(sa_saturation(0, 1.0, 1.0), DomainError);
}

TEST_CASE("tau(p) closed form")
{
    // p = 0: tau = 2/(W+1).
    CHECK(ra_tau_of_p(0.0, 32, 5) == doctest::Approx(2.0 / 33.0).epsilon(1e-12));
    // p = 1/2 is a removable point for the series form: finite and smooth.
    const double at_half = ra_tau_of_p(0.5, 32, 5);
    CHECK(std::isfinite(at_half));
    CHECK(ra_tau_of_p(0.5 - 1e-9, 32, 5) == doctest::Approx(at_half).epsilon(1e-6));
    CHECK(ra_tau_of_p(0.5 + 1e-9, 32, 5) == doctest::Approx(at_half).epsilon(1e-6));
    // Against the textbook rational form away from the singular point.
    for (double p : {0.1, 0.3, 0.7, 0.9}) {
        const int w = 32, a = 5;
        const double expected = 2.0 * (1 - 2 * p) /
                                ((1 - 2 * p) * (w + 1) + p * w * (1 - std::pow(2 * p, a)));
        CHECK(ra_tau_of_p(p, w, a) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("fixed point solves the coupled system")
{
    RaModelInput in;
    in.w_min = 32;
    in.alpha = 5;

    in.n = 1;
    const FixedPointResult one = ra_markov_solve(in);
    CHECK(one.p == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(one.tau == doctest::Approx(2.0 / 33.0).epsilon(1e-9));

    double prev_tau = 1.0;
    for (int n = 1; n <= 20; ++n) {
        in.n = n;
        const FixedPointResult r = ra_markov_solve(in);
        CHECK(r.residual < 1e-10);
        CHECK(r.tau > 0.0);
        CHECK(r.tau < prev_tau); // tau strictly decreases with n
        CHECK(r.p == doctest::Approx(1.0 - std::pow(1.0 - r.tau, n - 1)).epsilon(1e-8));
        prev_tau = r.tau;
    }
}

namespace {

// Direct Monte-Carlo simulation of the backoff chain: stage s picks a
// uniform counter in [0, W_s-1]; each attempt collides with probability p;
// tau is measured as attempts per chain step.
double chain_tau(double p, int w_min, int alpha, int64_t steps, uint64_t seed)
{
    std::mt19937_64 rng(seed);
    auto uniform = [&](int w) { return static_cast<int>(rng() % w); };
    auto bernoulli = [&](double q) {
        return (rng() >> 11) * (1.0 / 9007199254740992.0) < q;
    };

    int stage = 0;
    int counter = uniform(w_min);
    int64_t attempts = 0;
    for (int64_t t = 0; t < steps; ++t) {
        if (counter > 0) {
            --counter;
            continue;
        }
        ++attempts;
        if (bernoulli(p))
            stage = std::min(stage + 1, alpha);
        else
            stage = 0;
        counter = uniform(std::min(1 << stage, 1 << alpha) * w_min);
    }
    return static_cast<double>(attempts) / static_cast<double>(steps);
}

} // namespace

TEST_CASE("fixed point agrees with a direct chain simulation (smoke scale)")
{
    RaModelInput in;
    in.n = 5;
    in.w_min = 32;
    in.alpha = 5;
    const FixedPointResult r = ra_markov_solve(in);
    const double measured = chain_tau(r.p, in.w_min, in.alpha, 2000000, 11);
    CHECK(measured == doctest::Approx(r.tau).epsilon(0.02));
}

TEST_CASE("normalized throughput formula")
{
    RaModelInput in;
    in.n = 2;
    in.sigma_us = 9.0;
    in.t_s_us = 1000.0;
    in.t_c_us = 800.0;
    in.mean_payload_bits = 12000.0;

    // tau = 0.5: P_b = 0.75, P_S = 0.5 by hand.
    const double tau = 0.5;
    const double expected =
        0.5 * 12000.0 / (0.25 * 9.0 + 0.5 * 1000.0 + (0.75 - 0.5) * 800.0);
    CHECK(ra_throughput(tau, in) == doctest::Approx(expected).epsilon(1e-12));

    CHECK(ra_throughput(0.0, in) == doctest::Approx(0.0));

    // Airtime bound: throughput never exceeds E(P)/T_S.
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        in.n = 1 + static_cast<int>(rng() % 20);
        const double t = (rng() % 1000 + 1) / 1000.0;
        CHECK(ra_throughput(t, in) <= in.mean_payload_bits / in.t_s_us + 1e-12);
    }
    CHECK_THROWS_AS(ra_throughput(1.5, in), DomainError);
}

TEST_CASE("system throughput and max-min spread")
{
    CHECK(system_throughput({1.0, 2.0, 3.5}) == doctest::Approx(6.5));
    CHECK(system_throughput({}) == doctest::Approx(0.0));

    CHECK(max_min_fairness({2.0, 4.0}, {4.0, 8.0}) == doctest::Approx(0.0));
    CHECK(max_min_fairness({1.0, 2.0}, {2.0, 2.0}) == doctest::Approx(0.5));
    CHECK_THROWS_AS(max_min_fairness({1.0}, {0.0}), DomainError);
    CHECK_THROWS_AS(max_min_fairness({1.0}, {1.0, 2.0}), DomainError);
}

TEST_CASE("jain index identities")
{
    CHECK(jain_index({3.0, 1.0}) == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(jain_index({5.0, 5.0, 5.0}) == doctest::Approx(1.0).epsilon(1e-12));

    // k equal sharers of n: index = k/n.
    for (int n : {4, 10, 25}) {
        for (int k = 1; k <= n; ++k) {
            std::vector<double> x(n, 0.0);
            for (int i = 0; i < k; ++i)
                x[i] = 7.5;
            CHECK(jain_index(x) == doctest::Approx(double(k) / n).epsilon(1e-12));
        }
    }

    // Scale invariance.
    const std::vector<double> x = {0.3, 1.2, 8.8, 4.0};
    CHECK(jain_index(x) == doctest::Approx(jain_index({3.0, 12.0, 88.0, 40.0})).epsilon(1e-12));

    CHECK_THROWS_AS(jain_index({}), DomainError);
    CHECK_THROWS_AS(jain_index({0.0, 0.0}), DomainError);
    CHECK_THROWS_AS(jain_index({1.0, -1.0}), DomainError);
}
