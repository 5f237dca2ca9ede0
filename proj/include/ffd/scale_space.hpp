#ifndef FFD_SCALE_SPACE_HPP
#define FFD_SCALE_SPACE_HPP

#include <vector>

#include "ffd/image.hpp"

namespace ffd {

/// Undecimated stack of n+3 coarse levels and their n+2 adjacent differences.
/// Every level keeps the input dimensions. fine[j] = coarse[j] - coarse[j+1].
struct ScaleSpace
{
    int n = 0;
    double sigma0 = 0.0;
    std::vector<GrayImage> coarse;  // size n+3, index 0 = presmoothed input
    std::vector<GrayImage> fine;    // size n+2
    std::vector<double> sigmas;     // effective sigma per coarse level, size n+3

    int width() const
    {
        const GrayImage* level = !coarse.empty() ? &coarse.front()
                               : !fine.empty() ? &fine.front() : nullptr;
        return level ? level->width : 0;
    }
    int height() const
    {
        const GrayImage* level = !coarse.empty() ? &coarse.front()
                               : !fine.empty() ? &fine.front() : nullptr;
        return level ? level->height : 0;
    }
};

/// Cumulative width of the spline bank through level j: 1.05, 2.32, 4.75,
/// 9.5, doubling afterwards.
double bank_sigma(int j);

/// First `count` values of bank_sigma.
std::vector<double> bank_sigmas(int count);

/// Presmooth with the sigma0 filter, then run the upscaled spline bank to
/// produce n+3 coarse levels and n+2 fine levels.
ScaleSpace build_scale_space(const GrayImage& image, int n, double sigma0 = 0.6);

/// Ratios of effective widths between consecutive levels, with sigma0 as the
/// level-0 width: element 0 is sqrt((s0^2+s1^2)/s0^2), element i>0 is
/// sqrt((s0^2+s_{i+1}^2)/(s0^2+s_i^2)). sigmas must be ascending.
std::vector<double> scale_ratio_vector(double sigma0, const std::vector<double>& sigmas);

}  // namespace ffd

#endif
