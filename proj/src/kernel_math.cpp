#include "ffd/kernel_math.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace ffd {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kMuLowerBound = 1.0 + 1e-12;

void check_sigma(double sigma)
{
    if (!(sigma > 0.0))
        throw std::domain_error("kernel width sigma must be positive");
}

void check_mu(double mu)
{
    if (!(mu > kMuLowerBound))
        throw std::domain_error("blurring ratio mu must exceed 1");
}

}  // namespace

KernelSpec::KernelSpec(double sigma_, double mu_)
    : sigma(sigma_), mu(mu_)
{
    check_sigma(sigma);
    check_mu(mu);
}

double gaussian2d(double x, double y, double sigma)
{
    check_sigma(sigma);
    double s2 = sigma * sigma;
    return std::exp(-(x * x + y * y) / (2.0 * s2)) / (2.0 * kPi * s2);
}

double log_normalized(double x, double y, double sigma)
{
    check_sigma(sigma);
    double s2 = sigma * sigma;
    double r2 = x * x + y * y;
    return (r2 / (2.0 * s2) - 1.0) * std::exp(-r2 / (2.0 * s2)) / (kPi * s2);
}

double dog(double x, double y, const KernelSpec& spec)
{
    return gaussian2d(x, y, spec.mu * spec.sigma) - gaussian2d(x, y, spec.sigma);
}

double excitatory_width_log(double sigma_l)
{
    check_sigma(sigma_l);
    return 2.0 * std::sqrt(2.0) * sigma_l;
}

double excitatory_width_dog(const KernelSpec& spec)
{
    double mu = spec.mu;
    return 4.0 * mu * spec.sigma * std::sqrt(std::log(mu) / (mu * mu - 1.0));
}

double sigma_log_equivalent(const KernelSpec& spec)
{
    double mu = spec.mu;
    return mu * spec.sigma * std::sqrt(2.0 * std::log(mu) / (mu * mu - 1.0));
}

double eta(double mu)
{
    check_mu(mu);
    return 1.0 / std::log(mu);
}

double zero_crossing_error(double omega_d, double d)
{
    if (d >= omega_d)
        return 0.0;  // edges resolved, no displacement regime
    return (omega_d - d) / 2.0;
}

ConstraintResult superimposition_check(double lambda, double mu)
{
    if (!(lambda > 0.0))
        throw std::domain_error("lambda must be positive");
    check_mu(mu);
    KernelSpec spec(lambda * mu, mu);
    double omega = excitatory_width_dog(spec);
    double margin = (omega - 1.0) / 2.0 - 1.0 / std::sqrt(2.0);
    return ConstraintResult{margin, margin <= 0.0, omega};
}

double solve_golden_lambda(double mu)
{
    check_mu(mu);
    // The constraint left side is linear (hence monotone) in lambda, so
    // bisection on the bracket cannot fail.
    double lo = 1e-6;
    double hi = 10.0;
    if (superimposition_check(lo, mu).margin > 0.0
        || superimposition_check(hi, mu).margin < 0.0)
        throw std::runtime_error("solve_golden_lambda: bracket does not straddle the root");
    for (int i = 0; i < 200; ++i)
    {
        double mid = 0.5 * (lo + hi);
        double m = superimposition_check(mid, mu).margin;
        if (std::abs(m) < 1e-10)
            return mid;
        (m < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double dog_halfpower_bandwidth(const KernelSpec& spec)
{
    // 1D DoG profile from unit-mass 1D Gaussians; its spectrum is band-pass
    // (zero at DC), so both -3 dB crossings exist.
    const int n = 4096;
    const double half = 16.0 * spec.mu * spec.sigma;
    const double dt = 2.0 * half / n;
    const double sa = spec.mu * spec.sigma;
    const double sb = spec.sigma;

    std::vector<double> f(n);
    for (int i = 0; i < n; ++i)
    {
        double t = -half + i * dt;
        double a = std::exp(-t * t / (2.0 * sa * sa)) / (std::sqrt(2.0 * kPi) * sa);
        double b = std::exp(-t * t / (2.0 * sb * sb)) / (std::sqrt(2.0 * kPi) * sb);
        f[i] = a - b;
    }

    // DFT magnitude on the non-negative half of the spectrum.
    const int m = n / 2 + 1;
    std::vector<double> mag(m);
    for (int k = 0; k < m; ++k)
    {
        std::complex<double> acc(0.0, 0.0);
        double w = -2.0 * kPi * k / n;
        // Exploit even symmetry of the profile: f[i] pairs with f[n-i].
        acc += f[0];
        for (int i = 1; i < n / 2; ++i)
            acc += (f[i] + f[n - i]) * std::cos(w * i)
                 + std::complex<double>(0.0, (f[n - i] - f[i]) * std::sin(w * i));
        acc += f[n / 2] * std::cos(w * (n / 2));
        mag[k] = std::abs(acc) * dt;
    }

    int peak = 0;
    for (int k = 1; k < m; ++k)
        if (mag[k] > mag[peak])
            peak = k;
    double level = mag[peak] / std::sqrt(2.0);
    double bin = 2.0 * kPi / (n * dt);

    auto interpolate = [&](int i, int j) {
        // crossing between bins i (below level) and j (above level)
        double frac = (level - mag[i]) / (mag[j] - mag[i]);
        return (i + frac * (j - i)) * bin;
    };

    int i = peak;
    while (i > 0 && mag[i - 1] >= level)
        --i;
    double lo = (i == 0) ? 0.0 : interpolate(i - 1, i);

    i = peak;
    while (i < m - 1 && mag[i + 1] >= level)
        ++i;
    if (i == m - 1)
        throw std::runtime_error("dog_halfpower_bandwidth: upper crossing beyond Nyquist");
    double frac = (mag[i] - level) / (mag[i] - mag[i + 1]);
    double hi = (i + frac) * bin;

    return hi - lo;
}

}  // namespace ffd
