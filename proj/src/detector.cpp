#include "ffd/detector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ffd {

namespace {

constexpr double kSingularDet = 1e-12;
constexpr double kDegenerateTrace = 1e-12;

struct Derivatives
{
    double gx, gy, gs;
    double hxx, hyy, hss, hxy, hxs, hys;
};

Derivatives derivatives_at(const ScaleSpace& space, int x, int y, int k)
{
    auto D = [&](int dx, int dy, int dk) {
        return space.fine[k + dk].at(x + dx, y + dy);
    };
    Derivatives d;
    d.gx = 0.5 * (D(1, 0, 0) - D(-1, 0, 0));
    d.gy = 0.5 * (D(0, 1, 0) - D(0, -1, 0));
    d.gs = 0.5 * (D(0, 0, 1) - D(0, 0, -1));
    double c = D(0, 0, 0);
    d.hxx = D(1, 0, 0) + D(-1, 0, 0) - 2.0 * c;
    d.hyy = D(0, 1, 0) + D(0, -1, 0) - 2.0 * c;
    d.hss = D(0, 0, 1) + D(0, 0, -1) - 2.0 * c;
    d.hxy = 0.25 * (D(1, 1, 0) + D(-1, -1, 0) - D(-1, 1, 0) - D(1, -1, 0));
    d.hxs = 0.25 * (D(1, 0, 1) + D(-1, 0, -1) - D(-1, 0, 1) - D(1, 0, -1));
    d.hys = 0.25 * (D(0, 1, 1) + D(0, -1, -1) - D(0, -1, 1) - D(0, 1, -1));
    return d;
}

// Solves H * delta = -g for the symmetric 3x3 Hessian via the adjugate.
// Returns false when the Hessian is numerically singular.
bool solve_offset(const Derivatives& d, double delta[3])
{
    double a = d.hxx, b = d.hxy, c = d.hxs;
    double e = d.hyy, f = d.hys, g = d.hss;
    double det = a * (e * g - f * f) - b * (b * g - f * c) + c * (b * f - e * c);
    if (std::abs(det) < kSingularDet)
        return false;
    double inv00 = (e * g - f * f) / det;
    double inv01 = (c * f - b * g) / det;
    double inv02 = (b * f - c * e) / det;
    double inv11 = (a * g - c * c) / det;
    double inv12 = (b * c - a * f) / det;
    double inv22 = (a * e - b * b) / det;
    delta[0] = -(inv00 * d.gx + inv01 * d.gy + inv02 * d.gs);
    delta[1] = -(inv01 * d.gx + inv11 * d.gy + inv12 * d.gs);
    delta[2] = -(inv02 * d.gx + inv12 * d.gy + inv22 * d.gs);
    return true;
}

bool in_scan_interior(const ScaleSpace& space, int x, int y, int k)
{
    if (k < 1 || k > space.n)
        return false;
    int m = border_margin(k);
    return x >= m && x < space.width() - m && y >= m && y < space.height() - m;
}

double interpolated_sigma(const ScaleSpace& space, int level, double dlevel)
{
    double s0 = space.sigmas[level];
    double s1 = space.sigmas[level + 1];
    return s0 * std::pow(s1 / s0, dlevel);
}

}  // namespace

void DetectorParams::validate() const
{
    if (n < 1)
        throw std::invalid_argument("DetectorParams: n must be >= 1");
    if (!(sigma0 > 0.0))
        throw std::invalid_argument("DetectorParams: sigma0 must be positive");
    if (tau_lc < 0.0)
        throw std::invalid_argument("DetectorParams: tau_lc must be >= 0");
    if (!(tau_plus >= 0.0 && tau_plus < tau_minus))
        throw std::invalid_argument("DetectorParams: need 0 <= tau_plus < tau_minus");
    if (max_keypoints < 1)
        throw std::invalid_argument("DetectorParams: max_keypoints must be >= 1");
    if (max_relocalizations < 0)
        throw std::invalid_argument("DetectorParams: max_relocalizations must be >= 0");
}

int border_margin(int level)
{
    // Fine level k needs coarse level k+2, built with a bank kernel of
    // half-width 2^(k+2); one more pixel covers the NMS/derivative stencils.
    return (1 << (level + 2)) + 1;
}

std::vector<Candidate> find_extrema(const ScaleSpace& space)
{
    if (static_cast<int>(space.fine.size()) < 3)
        throw std::invalid_argument("find_extrema: need at least 3 fine levels");

    std::vector<Candidate> out;
    int w = space.width();
    int h = space.height();
    for (int k = 1; k <= space.n; ++k)
    {
        int m = border_margin(k);
        if (2 * m >= std::min(w, h))
            continue;  // level too coarse for this image size
        const GrayImage& below = space.fine[k - 1];
        const GrayImage& mid = space.fine[k];
        const GrayImage& above = space.fine[k + 1];
        for (int y = m; y < h - m; ++y)
        {
            for (int x = m; x < w - m; ++x)
            {
                double v = mid.at(x, y);
                bool is_max = true;
                bool is_min = true;
                for (int dy = -1; dy <= 1 && (is_max || is_min); ++dy)
                {
                    for (int dx = -1; dx <= 1 && (is_max || is_min); ++dx)
                    {
                        double b = below.at(x + dx, y + dy);
                        double a = above.at(x + dx, y + dy);
                        double c = mid.at(x + dx, y + dy);
                        if (b >= v || a >= v || (c >= v && (dx || dy)))
                            is_max = false;
                        if (b <= v || a <= v || (c <= v && (dx || dy)))
                            is_min = false;
                    }
                }
                if (is_max || is_min)
                    out.push_back(Candidate{x, y, k, v, is_max});
            }
        }
    }
    return out;
}

RefineResult refine(const Candidate& candidate, const ScaleSpace& space,
                    const DetectorParams& params)
{
    RefineResult res;
    int x = candidate.x;
    int y = candidate.y;
    int k = candidate.level;
    if (!in_scan_interior(space, x, y, k))
    {
        res.status = RefineStatus::out_of_bounds;
        return res;
    }

    double delta[3] = {0.0, 0.0, 0.0};
    for (int attempt = 0; attempt <= params.max_relocalizations; ++attempt)
    {
        Derivatives d = derivatives_at(space, x, y, k);
        if (!solve_offset(d, delta))
        {
            res.status = RefineStatus::singular;
            return res;
        }
        if (std::abs(delta[0]) < 0.5 && std::abs(delta[1]) < 0.5 && std::abs(delta[2]) < 0.5)
        {
            Keypoint kp;
            kp.x = x + delta[0];
            kp.y = y + delta[1];
            kp.level = k;
            kp.offset = {delta[0], delta[1], delta[2]};
            kp.sigma = interpolated_sigma(space, k, delta[2]);
            kp.response = space.fine[k].at(x, y)
                + 0.5 * (d.gx * delta[0] + d.gy * delta[1] + d.gs * delta[2]);
            res.status = RefineStatus::accepted;
            res.keypoint = kp;
            res.x = x;
            res.y = y;
            res.level = k;
            return res;
        }
        int nx = x + static_cast<int>(std::lround(delta[0]));
        int ny = y + static_cast<int>(std::lround(delta[1]));
        int nk = k + static_cast<int>(std::lround(delta[2]));
        if (!in_scan_interior(space, nx, ny, nk))
        {
            res.status = RefineStatus::out_of_bounds;
            return res;
        }
        x = nx;
        y = ny;
        k = nk;
    }
    res.status = RefineStatus::diverged;
    return res;
}

StructureTensor structure_tensor(const ScaleSpace& space, int x, int y, int level)
{
    const GrayImage& D = space.fine[level];
    if (x < 1 || y < 1 || x >= D.width - 1 || y >= D.height - 1)
        throw std::invalid_argument("structure_tensor: location not interior");
    StructureTensor t;
    double c = D.at(x, y);
    t.jxx = D.at(x + 1, y) + D.at(x - 1, y) - 2.0 * c;
    t.jyy = D.at(x, y + 1) + D.at(x, y - 1) - 2.0 * c;
    t.jxy = 0.25 * (D.at(x + 1, y + 1) + D.at(x - 1, y - 1)
                    - D.at(x - 1, y + 1) - D.at(x + 1, y - 1));
    return t;
}

double anisotropy(const StructureTensor& t)
{
    double tr = t.jxx + t.jyy;
    if (std::abs(tr) < kDegenerateTrace)
        throw std::domain_error("anisotropy: degenerate trace");
    double det = t.jxx * t.jyy - t.jxy * t.jxy;
    return 1.0 - 4.0 * det / (tr * tr);
}

std::vector<Keypoint> detect_in_space(const ScaleSpace& space, const DetectorParams& params)
{
    params.validate();
    std::vector<Keypoint> keypoints;
    for (const Candidate& cand : find_extrema(space))
    {
        RefineResult r = refine(cand, space, params);
        if (r.status != RefineStatus::accepted)
            continue;
        if (std::abs(r.keypoint.response) < params.tau_lc)
            continue;
        StructureTensor t = structure_tensor(space, r.x, r.y, r.level);
        if (std::abs(t.jxx + t.jyy) < kDegenerateTrace)
            continue;  // flat response, no conjunction evidence
        double cm = anisotropy(t);
        if (!(cm < params.tau_plus || cm > params.tau_minus))
            continue;  // edge response band
        r.keypoint.cm = cm;
        keypoints.push_back(r.keypoint);
    }

    std::sort(keypoints.begin(), keypoints.end(), [](const Keypoint& a, const Keypoint& b) {
        double ra = std::abs(a.response);
        double rb = std::abs(b.response);
        if (ra != rb)
            return ra > rb;
        if (a.level != b.level)
            return a.level < b.level;
        if (a.y != b.y)
            return a.y < b.y;
        return a.x < b.x;
    });
    if (static_cast<int>(keypoints.size()) > params.max_keypoints)
        keypoints.resize(params.max_keypoints);
    return keypoints;
}

std::vector<Keypoint> detect(const GrayImage& image, const DetectorParams& params)
{
    params.validate();
    require_unit_range(image, "detect");
    ScaleSpace space = build_scale_space(image, params.n, params.sigma0);
    return detect_in_space(space, params);
}

}  // namespace ffd
