#include "wlanlab/channel.hpp"

#include <cmath>

namespace wlanlab {

void PathLossParams::validate() const
{
    if (carrier_ghz <= 0.0)
        throw DomainError("carrier frequency must be positive");
    if (breakpoint_m <= 0.0)
        throw DomainError("breakpoint distance must be positive");
    if (floor_penetration_db < 0.0 || wall_penetration_db < 0.0)
        throw DomainError("penetration losses must be nonnegative");
}

double free_space_pl(double d_m, double f_hz)
{
    if (d_m <= 0.0 || f_hz <= 0.0)
        throw DomainError("free_space_pl requires positive distance and frequency");
    return 20.0 * std::log10(d_m) + 20.0 * std::log10(f_hz) - 147.55;
}

double indoor_pl(double d_m, const PathLossParams& p)
{
    p.validate();
    const double f_hz = p.carrier_ghz * 1e9;
    const double fs = free_space_pl(d_m, f_hz);
    if (d_m <= p.breakpoint_m)
        return fs;
    return fs + 35.0 * std::log10(d_m / p.breakpoint_m);
}

double overall_indoor_pl(double d_m, const PathLossParams& p)
{
    return indoor_pl(d_m, p) + p.floor_penetration_db + p.wall_penetration_db;
}

double winner_pl(double d_m, const PathLossParams& p)
{
    p.validate();
    if (d_m <= 0.0)
        throw DomainError("winner_pl requires positive distance");
    return p.a_coef * std::log10(d_m) + p.b_coef + p.c_coef * std::log10(p.carrier_ghz / 5.0) +
           p.x_coef;
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa, double m, double fm,
               double b, double fb)
{
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(const std::function<double(double)>& f, double a, double fa, double m, double fm,
                double b, double fb, double whole, double eps, int depth)
{
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    if (!std::isfinite(flm) || !std::isfinite(frm))
        throw DomainError("IntegrationError: non-finite density value");
    const double left = simpson(f, a, fa, lm, flm, m, fm);
    const double right = simpson(f, m, fm, rm, frm, b, fb);
    const double delta = left + right - whole;
    if (depth <= 0)
        throw DomainError("IntegrationError: quadrature failed to converge");
    if (std::fabs(delta) <= 15.0 * eps)
        return left + right + delta / 15.0;
    return adaptive(f, a, fa, lm, flm, m, fm, left, 0.5 * eps, depth - 1) +
           adaptive(f, m, fm, rm, frm, b, fb, right, 0.5 * eps, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol)
{
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    if (!std::isfinite(fa) || !std::isfinite(fm) || !std::isfinite(fb))
        throw DomainError("IntegrationError: non-finite density value");
    const double whole = simpson(f, a, fa, m, fm, b, fb);
    // Scale the tolerance by a coarse magnitude estimate.
    const double scale = std::max({std::fabs(whole), std::fabs(fa * (b - a)), 1e-300});
    return adaptive(f, a, fa, m, fm, b, fb, whole, rel_tol * scale, 60);
}

} // namespace

double mean_payload(const PayloadDistribution& dist)
{
    if (!(dist.p_min < dist.p_max))
        throw DomainError("payload distribution requires p_min < p_max");
    if (!dist.density)
        throw DomainError("payload distribution has no density function");
    const double integral = integrate(dist.density, dist.p_min, dist.p_max, 1e-9);
    return integral / (dist.p_max - dist.p_min);
}

PayloadDistribution constant_payload(double bits)
{
    PayloadDistribution d;
    d.name = "constant";
    d.p_min = 0.0;
    d.p_max = 2.0 * bits > 0.0 ? 2.0 * bits : 1.0;
    d.density = [bits](double) { return bits; };
    return d;
}

PayloadDistribution linear_payload(double p_min, double p_max)
{
    PayloadDistribution d;
    d.name = "linear";
    d.p_min = p_min;
    d.p_max = p_max;
    d.density = [](double x) { return x; };
    return d;
}

namespace {

double lognormal_cdf(double x, double mu, double sigma)
{
    return 0.5 * std::erfc(-(std::log(x) - mu) / (sigma * std::sqrt(2.0)));
}

double lognormal_pdf(double x, double mu, double sigma)
{
    const double z = (std::log(x) - mu) / sigma;
    return std::exp(-0.5 * z * z) / (x * sigma * std::sqrt(2.0 * M_PI));
}

// Mean of a lognormal truncated to [a, b].
double truncated_mean(double mu, double sigma, double a, double b)
{
    // E[X; a<X<b] = e^{mu+sigma^2/2} (Phi((ln b - mu - sigma^2)/sigma)
    //                               - Phi((ln a - mu - sigma^2)/sigma))
    auto phi = [](double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); };
    const double m2 = mu + sigma * sigma;
    const double num = std::exp(mu + 0.5 * sigma * sigma) *
                       (phi((std::log(b) - m2) / sigma) - phi((std::log(a) - m2) / sigma));
    const double den = lognormal_cdf(b, mu, sigma) - lognormal_cdf(a, mu, sigma);
    return num / den;
}

} // namespace

PayloadDistribution lognormal_flow_sizes()
{
    // Stated moments: min 1 KB, mean 500 KB, max 5 MB (here in bits).
    const double a = 1e3 * 8.0;
    const double b = 5e6 * 8.0;
    const double target_mean = 500e3 * 8.0;

    // The stated moments under-determine the distribution; the shape is
    // fixed at sigma = 1 and the location is bisected so the truncated mean
    // hits the target.  Truncated mean is increasing in mu.
    const double sigma = 1.0;
    double lo = std::log(a), hi = std::log(b);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (truncated_mean(mid, sigma, a, b) < target_mean)
            lo = mid;
        else
            hi = mid;
    }
    const double mu = 0.5 * (lo + hi);
    const double norm = lognormal_cdf(b, mu, sigma) - lognormal_cdf(a, mu, sigma);

    PayloadDistribution d;
    d.name = "lognormal_flows";
    d.p_min = a;
    d.p_max = b;
    // Density shaped so that the interval mean of this function equals the
    // truncated-lognormal flow-size mean.
    d.density = [mu, sigma, norm, a, b](double x) {
        return x * lognormal_pdf(x, mu, sigma) / norm * (b - a);
    };
    return d;
}

PayloadDistribution payload_preset(const std::string& name)
{
    if (name == "lognormal_flows")
        return lognormal_flow_sizes();
    if (name == "linear")
        return linear_payload(0.0, 12000.0);
    throw ConfigError("unknown payload preset: " + name);
}

} // namespace wlanlab
