#include "ffd/scale_space.hpp"

#include <cmath>
#include <stdexcept>

#include "ffd/convolve.hpp"
#include "ffd/kernels.hpp"

namespace ffd {

double bank_sigma(int j)
{
    if (j < 1)
        throw std::domain_error("bank_sigma: level must be >= 1");
    static const double table[4] = {1.05, 2.32, 4.75, 9.5};
    if (j <= 4)
        return table[j - 1];
    return table[3] * static_cast<double>(1 << (j - 4));
}

std::vector<double> bank_sigmas(int count)
{
    std::vector<double> out;
    out.reserve(count);
    for (int j = 1; j <= count; ++j)
        out.push_back(bank_sigma(j));
    return out;
}

ScaleSpace build_scale_space(const GrayImage& image, int n, double sigma0)
{
    if (n < 1)
        throw std::invalid_argument("build_scale_space: n must be >= 1");
    if (image.empty())
        throw std::invalid_argument("build_scale_space: empty image");
    if (!(sigma0 > 0.0))
        throw std::invalid_argument("build_scale_space: sigma0 must be positive");
    for (double v : image.pixels)
        if (!std::isfinite(v))
            throw std::invalid_argument("build_scale_space: non-finite pixel");

    // The widest kernel must fit the mirrored-border policy.
    Kernel1D widest = atrous_kernel(n + 2);
    if (static_cast<int>(widest.taps.size()) > 2 * std::min(image.width, image.height))
        throw std::invalid_argument("build_scale_space: image smaller than widest kernel");

    ScaleSpace space;
    space.n = n;
    space.sigma0 = sigma0;
    space.coarse.reserve(n + 3);
    space.fine.reserve(n + 2);
    space.sigmas.reserve(n + 3);

    Kernel1D h0 = (sigma0 == 0.6) ? presmooth_kernel() : gaussian_kernel(sigma0);
    space.coarse.push_back(separable_convolve(image, h0));
    space.sigmas.push_back(sigma0);
    for (int j = 1; j <= n + 2; ++j)
    {
        space.coarse.push_back(separable_convolve(space.coarse.back(), atrous_kernel(j)));
        double sj = bank_sigma(j);
        space.sigmas.push_back(std::sqrt(sigma0 * sigma0 + sj * sj));
    }

    for (int j = 0; j <= n + 1; ++j)
    {
        GrayImage diff(image.width, image.height);
        const GrayImage& a = space.coarse[j];
        const GrayImage& b = space.coarse[j + 1];
        for (std::size_t i = 0; i < diff.size(); ++i)
            diff.pixels[i] = a.pixels[i] - b.pixels[i];
        space.fine.push_back(std::move(diff));
    }
    return space;
}

std::vector<double> scale_ratio_vector(double sigma0, const std::vector<double>& sigmas)
{
    if (!(sigma0 > 0.0))
        throw std::invalid_argument("scale_ratio_vector: sigma0 must be positive");
    if (sigmas.size() < 2)
        throw std::invalid_argument("scale_ratio_vector: need at least two sigmas");
    for (std::size_t i = 1; i < sigmas.size(); ++i)
        if (!(sigmas[i] > sigmas[i - 1]))
            throw std::invalid_argument("scale_ratio_vector: sigmas must be ascending");

    std::vector<double> ratios;
    ratios.reserve(sigmas.size());
    double prev = sigma0 * sigma0;
    for (double s : sigmas)
    {
        double cur = sigma0 * sigma0 + s * s;
        ratios.push_back(std::sqrt(cur / prev));
        prev = cur;
    }
    return ratios;
}

}  // namespace ffd
