#ifndef FFD_IMAGE_HPP
#define FFD_IMAGE_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ffd {

/// Single-channel luminance grid, row-major, values nominally in [0, 1].
/// Fine (difference) levels reuse this type and may hold negative values.
struct GrayImage
{
    int width = 0;
    int height = 0;
    std::vector<double> pixels;

    GrayImage() = default;
    GrayImage(int w, int h, double fill = 0.0)
        : width(w), height(h)
    {
        if (w <= 0 || h <= 0)
            throw std::invalid_argument("GrayImage: non-positive dimensions");
        pixels.assign(static_cast<std::size_t>(w) * h, fill);
    }

    double& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
    double at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }

    double* row(int y) { return pixels.data() + static_cast<std::size_t>(y) * width; }
    const double* row(int y) const { return pixels.data() + static_cast<std::size_t>(y) * width; }

    bool empty() const { return width == 0 || height == 0; }
    std::size_t size() const { return pixels.size(); }
};

/// Interleaved 8-bit RGB image as delivered by decoders.
struct RgbImage8
{
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> samples;  // r,g,b per pixel
};

/// ITU-R BT.601 luma conversion, output scaled to [0, 1].
GrayImage to_grayscale(const RgbImage8& rgb);

/// Throws std::invalid_argument unless all pixels are finite and in [0, 1]
/// (small epsilon allowed for rounding).
void require_unit_range(const GrayImage& image, const char* context);

void minmax(const GrayImage& image, double& lo, double& hi);

}  // namespace ffd

#endif
