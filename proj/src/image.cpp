#include "ffd/image.hpp"

#include <algorithm>
#include <cmath>

namespace ffd {

GrayImage to_grayscale(const RgbImage8& rgb)
{
    if (rgb.width <= 0 || rgb.height <= 0)
        throw std::invalid_argument("to_grayscale: zero-dimension image");
    if (rgb.samples.size() != static_cast<std::size_t>(rgb.width) * rgb.height * 3)
        throw std::invalid_argument("to_grayscale: sample count does not match dimensions");

    GrayImage out(rgb.width, rgb.height);
    const std::uint8_t* s = rgb.samples.data();
    for (double& v : out.pixels)
    {
        double lum = (0.299 * s[0] + 0.587 * s[1] + 0.114 * s[2]) / 255.0;
        v = std::clamp(lum, 0.0, 1.0);
        s += 3;
    }
    return out;
}

void require_unit_range(const GrayImage& image, const char* context)
{
    if (image.empty())
        throw std::invalid_argument(std::string(context) + ": empty image");
    for (double v : image.pixels)
    {
        if (!std::isfinite(v) || v < -1e-9 || v > 1.0 + 1e-9)
            throw std::invalid_argument(std::string(context)
                + ": pixel values must be finite and in [0, 1]");
    }
}

void minmax(const GrayImage& image, double& lo, double& hi)
{
    auto [mn, mx] = std::minmax_element(image.pixels.begin(), image.pixels.end());
    lo = *mn;
    hi = *mx;
}

}  // namespace ffd
