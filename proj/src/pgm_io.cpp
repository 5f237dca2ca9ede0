#include "ffd/pgm_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <vector>

namespace ffd {

namespace {

// Consumes whitespace and '#' comment lines between header tokens.
void skip_separators(std::istream& in)
{
    for (;;)
    {
        int c = in.peek();
        if (c == '#')
        {
            while (c != EOF && c != '\n')
                c = in.get();
        }
        else if (c == ' ' || c == '\t' || c == '\r' || c == '\n')
        {
            in.get();
        }
        else
        {
            return;
        }
    }
}

long read_header_int(std::istream& in, const std::string& path, const char* what)
{
    skip_separators(in);
    long value = 0;
    bool any = false;
    while (std::isdigit(in.peek()))
    {
        value = value * 10 + (in.get() - '0');
        any = true;
        if (value > 1 << 30)
            throw FormatError(path + ": unreasonable " + what + " at byte "
                              + std::to_string(static_cast<long>(in.tellg())));
    }
    if (!any)
        throw FormatError(path + ": missing " + what + " at byte "
                          + std::to_string(static_cast<long>(in.tellg())));
    return value;
}

}  // namespace

GrayImage read_pgm(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FormatError(path + ": cannot open file");

    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (!in || magic[0] != 'P' || magic[1] != '5')
    {
        if (magic[0] == 'P' && magic[1] == '2')
            throw FormatError(path + ": ASCII PGM (P2) is not supported, use binary P5");
        throw FormatError(path + ": bad magic at byte 0, expected P5");
    }

    long width = read_header_int(in, path, "width");
    long height = read_header_int(in, path, "height");
    long maxval = read_header_int(in, path, "maxval");
    if (maxval != 255 && maxval != 65535)
        throw FormatError(path + ": unsupported maxval " + std::to_string(maxval)
                          + ", expected 255 or 65535");
    if (width <= 0 || height <= 0)
        throw FormatError(path + ": non-positive dimensions");

    // Exactly one whitespace byte separates the header from the payload.
    int sep = in.get();
    if (sep != ' ' && sep != '\t' && sep != '\r' && sep != '\n')
        throw FormatError(path + ": missing header terminator at byte "
                          + std::to_string(static_cast<long>(in.tellg()) - 1));

    std::size_t count = static_cast<std::size_t>(width) * height;
    std::size_t bytes = count * (maxval == 255 ? 1 : 2);
    std::vector<std::uint8_t> payload(bytes);
    std::streampos payload_start = in.tellg();
    in.read(reinterpret_cast<char*>(payload.data()), static_cast<std::streamsize>(bytes));
    if (static_cast<std::size_t>(in.gcount()) != bytes)
        throw FormatError(path + ": truncated payload at byte "
                          + std::to_string(static_cast<long>(payload_start) + in.gcount())
                          + ", expected " + std::to_string(bytes) + " payload bytes");

    GrayImage img(static_cast<int>(width), static_cast<int>(height));
    if (maxval == 255)
    {
        for (std::size_t i = 0; i < count; ++i)
            img.pixels[i] = payload[i] / 255.0;
    }
    else
    {
        for (std::size_t i = 0; i < count; ++i)
        {
            unsigned v = (static_cast<unsigned>(payload[2 * i]) << 8) | payload[2 * i + 1];
            img.pixels[i] = v / 65535.0;
        }
    }
    return img;
}

void write_pgm(const GrayImage& image, const std::string& path)
{
    if (image.empty())
        throw std::invalid_argument("write_pgm: empty image");
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error(path + ": cannot open for writing");
    out << "P5\n" << image.width << " " << image.height << "\n255\n";
    std::vector<std::uint8_t> row(image.width);
    for (int y = 0; y < image.height; ++y)
    {
        const double* src = image.row(y);
        for (int x = 0; x < image.width; ++x)
            row[x] = static_cast<std::uint8_t>(
                std::lround(std::clamp(src[x], 0.0, 1.0) * 255.0));
        out.write(reinterpret_cast<const char*>(row.data()), image.width);
    }
    if (!out)
        throw std::runtime_error(path + ": write failed");
}

void write_pgm_normalized(const GrayImage& image, const std::string& path)
{
    double lo, hi;
    minmax(image, lo, hi);
    GrayImage mapped(image.width, image.height);
    double span = hi - lo;
    for (std::size_t i = 0; i < image.size(); ++i)
        mapped.pixels[i] = span > 0.0 ? (image.pixels[i] - lo) / span : 0.0;
    write_pgm(mapped, path);
}

}  // namespace ffd
