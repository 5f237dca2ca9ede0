#include "ffd/homography.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ffd/pgm_io.hpp"  // FormatError

namespace ffd {

Homography Homography::translation(double tx, double ty)
{
    Homography m;
    m.at(0, 2) = tx;
    m.at(1, 2) = ty;
    return m;
}

Homography Homography::scaling(double sx, double sy)
{
    Homography m;
    m.at(0, 0) = sx;
    m.at(1, 1) = sy;
    return m;
}

Homography Homography::rotation(double degrees, double cx, double cy)
{
    double rad = degrees * 3.14159265358979323846 / 180.0;
    double c = std::cos(rad);
    double s = std::sin(rad);
    Homography m;
    m.at(0, 0) = c;
    m.at(0, 1) = -s;
    m.at(0, 2) = cx - c * cx + s * cy;
    m.at(1, 0) = s;
    m.at(1, 1) = c;
    m.at(1, 2) = cy - s * cx - c * cy;
    return m;
}

double Homography::det() const
{
    const auto& m = h;
    return m[0] * (m[4] * m[8] - m[5] * m[7])
         - m[1] * (m[3] * m[8] - m[5] * m[6])
         + m[2] * (m[3] * m[7] - m[4] * m[6]);
}

Homography Homography::inverse() const
{
    double d = det();
    if (std::abs(d) < 1e-12)
        throw std::invalid_argument("Homography: singular matrix");
    const auto& m = h;
    Homography out;
    out.h = {
        (m[4] * m[8] - m[5] * m[7]) / d,
        (m[2] * m[7] - m[1] * m[8]) / d,
        (m[1] * m[5] - m[2] * m[4]) / d,
        (m[5] * m[6] - m[3] * m[8]) / d,
        (m[0] * m[8] - m[2] * m[6]) / d,
        (m[2] * m[3] - m[0] * m[5]) / d,
        (m[3] * m[7] - m[4] * m[6]) / d,
        (m[1] * m[6] - m[0] * m[7]) / d,
        (m[0] * m[4] - m[1] * m[3]) / d,
    };
    out.normalize();
    return out;
}

Homography Homography::compose(const Homography& rhs) const
{
    Homography out;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
        {
            double acc = 0.0;
            for (int k = 0; k < 3; ++k)
                acc += at(r, k) * rhs.at(k, c);
            out.at(r, c) = acc;
        }
    out.normalize();
    return out;
}

void Homography::normalize()
{
    double w = h[8];
    if (std::abs(w) < 1e-15)
        throw std::invalid_argument("Homography: cannot normalize, h33 is zero");
    for (double& v : h)
        v /= w;
}

std::optional<Point2> project_point(double x, double y, const Homography& m)
{
    double w = m.at(2, 0) * x + m.at(2, 1) * y + m.at(2, 2);
    if (std::abs(w) < 1e-12)
        return std::nullopt;
    return Point2{(m.at(0, 0) * x + m.at(0, 1) * y + m.at(0, 2)) / w,
                  (m.at(1, 0) * x + m.at(1, 1) * y + m.at(1, 2)) / w};
}

Homography read_homography(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw FormatError(path + ": cannot open homography file");
    std::array<double, 9> values{};
    std::size_t count = 0;
    std::string line;
    while (std::getline(in, line))
    {
        if (!line.empty() && line[0] == '#')
            continue;
        std::istringstream ls(line);
        double v;
        while (ls >> v)
        {
            if (count >= 9)
                throw FormatError(path + ": more than nine values");
            values[count++] = v;
        }
    }
    if (count != 9)
        throw FormatError(path + ": expected nine values, got " + std::to_string(count));
    Homography h;
    h.h = values;
    if (std::abs(h.det()) < 1e-12)
        throw FormatError(path + ": homography is singular");
    h.normalize();
    return h;
}

}  // namespace ffd
