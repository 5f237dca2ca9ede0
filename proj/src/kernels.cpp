#include "ffd/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace ffd {

Kernel1D presmooth_kernel()
{
    // Published taps sum to 0.999932; renormalize so constant images are
    // preserved exactly.
    Kernel1D k;
    k.taps = {0.002566, 0.1655, 0.6638, 0.1655, 0.002566};
    double sum = 0.0;
    for (double t : k.taps)
        sum += t;
    for (double& t : k.taps)
        t /= sum;
    k.stride_origin = 0;
    return k;
}

Kernel1D gaussian_kernel(double sigma)
{
    if (!(sigma > 0.0))
        throw std::domain_error("gaussian_kernel: sigma must be positive");
    int radius = std::max(2, static_cast<int>(std::ceil(3.0 * sigma)));
    Kernel1D k;
    k.taps.resize(2 * radius + 1);
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i)
    {
        double v = std::exp(-0.5 * i * i / (sigma * sigma));
        k.taps[i + radius] = v;
        sum += v;
    }
    for (double& t : k.taps)
        t /= sum;
    k.stride_origin = 0;
    return k;
}

Kernel1D atrous_kernel(int j)
{
    if (j < 1)
        throw std::domain_error("atrous_kernel: level must be >= 1");
    static const double base[5] = {1.0 / 16, 4.0 / 16, 6.0 / 16, 4.0 / 16, 1.0 / 16};
    int zeros = (1 << (j - 1)) - 1;
    Kernel1D k;
    k.taps.assign(4 * (static_cast<std::size_t>(zeros) + 1) + 1, 0.0);
    for (int i = 0; i < 5; ++i)
        k.taps[static_cast<std::size_t>(i) * (zeros + 1)] = base[i];
    k.stride_origin = j;
    return k;
}

double cubic_spline(double v)
{
    auto cube = [](double x) { return std::abs(x) * std::abs(x) * std::abs(x); };
    return (cube(v - 2.0) - 4.0 * cube(v - 1.0) + 6.0 * cube(v)
            - 4.0 * cube(v + 1.0) + cube(v + 2.0)) / 12.0;
}

double wavelet_fn(double v)
{
    return 2.0 * cubic_spline(2.0 * v) - cubic_spline(v);
}

}  // namespace ffd
