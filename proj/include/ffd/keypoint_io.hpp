#ifndef FFD_KEYPOINT_IO_HPP
#define FFD_KEYPOINT_IO_HPP

#include <string>
#include <vector>

#include "ffd/detector.hpp"

namespace ffd {

enum class KeypointFormat
{
    json,
    csv,
};

/// The serialized view of a keypoint: x, y, sigma, response, cm, level,
/// each real written with six decimal places.
struct KeypointRecord
{
    double x = 0.0;
    double y = 0.0;
    double sigma = 0.0;
    double response = 0.0;
    double cm = 0.0;
    int level = 0;
};

KeypointFormat parse_keypoint_format(const std::string& name);

std::string format_keypoints(const std::vector<Keypoint>& keypoints, KeypointFormat format);

/// Writes in the detector's ordering (|response| descending).
void write_keypoints(const std::vector<Keypoint>& keypoints, KeypointFormat format,
                     const std::string& path);

/// Reads either format back; used by round-trip checks and tooling.
std::vector<KeypointRecord> read_keypoints(const std::string& path);

}  // namespace ffd

#endif
