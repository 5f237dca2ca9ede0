#ifndef FFD_HOMOGRAPHY_HPP
#define FFD_HOMOGRAPHY_HPP

#include <array>
#include <optional>
#include <string>

namespace ffd {

/// 3x3 projective transform, row-major, normalized so h[2][2] = 1.
struct Homography
{
    std::array<double, 9> h{1, 0, 0, 0, 1, 0, 0, 0, 1};

    static Homography identity() { return Homography{}; }
    static Homography translation(double tx, double ty);
    static Homography scaling(double sx, double sy);
    /// Rotation by `degrees` about (cx, cy).
    static Homography rotation(double degrees, double cx, double cy);

    Homography inverse() const;
    Homography compose(const Homography& rhs) const;  // this ∘ rhs

    double at(int r, int c) const { return h[r * 3 + c]; }
    double& at(int r, int c) { return h[r * 3 + c]; }

    void normalize();  // divides by h[2][2]; throws if it vanishes
    double det() const;
};

struct Point2
{
    double x = 0.0;
    double y = 0.0;
};

/// Projective mapping of a point; empty when the point maps to infinity.
std::optional<Point2> project_point(double x, double y, const Homography& h);

/// Parses nine whitespace-separated decimals, row-major; lines starting with
/// '#' are ignored. Throws FormatError on malformed input.
Homography read_homography(const std::string& path);

}  // namespace ffd

#endif
