#include "ffd/png_io.hpp"

#include <cstdio>
#include <iostream>
#include <memory>
#include <vector>

#include "ffd/pgm_io.hpp"  // FormatError

#ifdef FFD_WITH_PNG
#include <png.h>
#endif

namespace ffd {

bool png_supported()
{
#ifdef FFD_WITH_PNG
    return true;
#else
    return false;
#endif
}

#ifdef FFD_WITH_PNG

namespace {

struct FileCloser
{
    void operator()(std::FILE* f) const
    {
        if (f)
            std::fclose(f);
    }
};

}  // namespace

GrayImage read_png(const std::string& path)
{
    std::unique_ptr<std::FILE, FileCloser> file(std::fopen(path.c_str(), "rb"));
    if (!file)
        throw FormatError(path + ": cannot open file");

    png_byte header[8];
    if (std::fread(header, 1, 8, file.get()) != 8 || png_sig_cmp(header, 0, 8) != 0)
        throw FormatError(path + ": not a PNG file");

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png)
        throw std::runtime_error("png_create_read_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info)
    {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw std::runtime_error("png_create_info_struct failed");
    }
    if (setjmp(png_jmpbuf(png)))
    {
        png_destroy_read_struct(&png, &info, nullptr);
        throw FormatError(path + ": libpng failed to decode");
    }

    png_init_io(png, file.get());
    png_set_sig_bytes(png, 8);
    png_read_info(png, info);

    png_uint_32 width = png_get_image_width(png, info);
    png_uint_32 height = png_get_image_height(png, info);
    int bit_depth = png_get_bit_depth(png, info);
    int color_type = png_get_color_type(png, info);
    int interlace = png_get_interlace_type(png, info);

    if (interlace != PNG_INTERLACE_NONE)
    {
        png_destroy_read_struct(&png, &info, nullptr);
        throw FormatError(path + ": interlaced PNG is not supported");
    }
    if (bit_depth != 8)
    {
        png_destroy_read_struct(&png, &info, nullptr);
        throw FormatError(path + ": only 8-bit PNG is supported, got "
                          + std::to_string(bit_depth) + "-bit");
    }

    if (color_type == PNG_COLOR_TYPE_PALETTE)
        png_set_palette_to_rgb(png);
    bool had_alpha = (color_type & PNG_COLOR_MASK_ALPHA) != 0
                     || png_get_valid(png, info, PNG_INFO_tRNS);
    if (had_alpha)
    {
        std::cerr << "warning: " << path << ": alpha channel ignored\n";
        png_set_strip_alpha(png);
    }
    png_read_update_info(png, info);

    color_type = png_get_color_type(png, info);
    int channels = png_get_channels(png, info);
    if (channels != 1 && channels != 3)
    {
        png_destroy_read_struct(&png, &info, nullptr);
        throw FormatError(path + ": unsupported channel count "
                          + std::to_string(channels));
    }

    std::vector<png_byte> data(static_cast<std::size_t>(width) * height * channels);
    std::vector<png_bytep> rows(height);
    for (png_uint_32 y = 0; y < height; ++y)
        rows[y] = data.data() + static_cast<std::size_t>(y) * width * channels;
    png_read_image(png, rows.data());
    png_destroy_read_struct(&png, &info, nullptr);

    if (channels == 3)
    {
        RgbImage8 rgb;
        rgb.width = static_cast<int>(width);
        rgb.height = static_cast<int>(height);
        rgb.samples.assign(data.begin(), data.end());
        return to_grayscale(rgb);
    }
    GrayImage img(static_cast<int>(width), static_cast<int>(height));
    for (std::size_t i = 0; i < img.size(); ++i)
        img.pixels[i] = data[i] / 255.0;
    return img;
}

#else

GrayImage read_png(const std::string& path)
{
    throw FormatError(path + ": PNG support not built in (libpng not found)");
}

#endif

}  // namespace ffd
