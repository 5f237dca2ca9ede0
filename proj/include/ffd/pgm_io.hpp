#ifndef FFD_PGM_IO_HPP
#define FFD_PGM_IO_HPP

#include <stdexcept>
#include <string>

#include "ffd/image.hpp"

namespace ffd {

/// Malformed or unsupported file content.
class FormatError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Binary PGM (magic P5), maxval 255 or 65535 (big-endian samples), scaled
/// to [0, 1]. Error messages carry the byte offset of the problem.
GrayImage read_pgm(const std::string& path);

/// 8-bit binary PGM; input values clamped to [0, 1] and scaled by 255.
void write_pgm(const GrayImage& image, const std::string& path);

/// Affinely maps [min, max] to [0, 255] before writing; used to dump fine
/// levels, which contain negative values.
void write_pgm_normalized(const GrayImage& image, const std::string& path);

}  // namespace ffd

#endif
