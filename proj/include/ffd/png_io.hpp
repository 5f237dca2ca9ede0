#ifndef FFD_PNG_IO_HPP
#define FFD_PNG_IO_HPP

#include <string>

#include "ffd/image.hpp"

namespace ffd {

/// True when the build carries the PNG decoder.
bool png_supported();

/// 8-bit grayscale or RGB PNG; RGB goes through to_grayscale, alpha is
/// dropped with a warning on stderr. Throws FormatError on unsupported bit
/// depths or interlacing, or when built without PNG support.
GrayImage read_png(const std::string& path);

}  // namespace ffd

#endif
