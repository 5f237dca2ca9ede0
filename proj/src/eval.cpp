#include "ffd/eval.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ffd/convolve.hpp"
#include "ffd/kernel_math.hpp"
#include "ffd/kernels.hpp"
#include "ffd/scale_space.hpp"

namespace ffd {

namespace {

void check_dims(int width, int height)
{
    if (width < 32 || height < 32)
        throw std::invalid_argument("synthetic generator: dimensions must be >= 32");
}

// Box-Muller on mt19937 uniforms; bit-stable across platforms, unlike
// std::normal_distribution.
class GaussianSource
{
public:
    explicit GaussianSource(std::uint32_t seed) : gen_(seed) {}

    double next()
    {
        if (have_spare_)
        {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do
        {
            u1 = uniform();
        } while (u1 <= 0.0);
        double u2 = uniform();
        double mag = std::sqrt(-2.0 * std::log(u1));
        double ang = 2.0 * 3.14159265358979323846 * u2;
        spare_ = mag * std::sin(ang);
        have_spare_ = true;
        return mag * std::cos(ang);
    }

private:
    double uniform()
    {
        return (gen_() + 0.5) * (1.0 / 4294967296.0);
    }

    std::mt19937 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace

GrayImage make_step_edge(int width, int height)
{
    check_dims(width, height);
    GrayImage img(width, height);
    for (int y = 0; y < height; ++y)
        for (int x = width / 2; x < width; ++x)
            img.at(x, y) = 1.0;
    return img;
}

GrayImage make_two_edges(int width, int height, int d)
{
    check_dims(width, height);
    if (d < 1 || d >= width / 2)
        throw std::invalid_argument("make_two_edges: band width out of range");
    GrayImage img(width, height);
    int c0 = (width - d) / 2;
    for (int y = 0; y < height; ++y)
        for (int x = c0; x < c0 + d; ++x)
            img.at(x, y) = 1.0;
    return img;
}

GrayImage make_checkerboard(int width, int height, int cell)
{
    check_dims(width, height);
    if (cell < 1)
        throw std::invalid_argument("make_checkerboard: cell must be >= 1");
    GrayImage img(width, height);
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x)
            img.at(x, y) = ((x / cell + y / cell) % 2 == 0) ? 0.0 : 1.0;
    return img;
}

GrayImage make_random_texture(int width, int height, std::uint32_t seed)
{
    check_dims(width, height);
    GrayImage img(width, height);
    std::mt19937 gen(seed);
    for (double& v : img.pixels)
        v = (gen() + 0.5) * (1.0 / 4294967296.0);
    Kernel1D h1 = atrous_kernel(1);
    img = separable_convolve(separable_convolve(img, h1), h1);
    double lo, hi;
    minmax(img, lo, hi);
    double span = hi - lo;
    for (double& v : img.pixels)
        v = span > 0.0 ? (v - lo) / span : 0.0;
    return img;
}

GrayImage add_white_gaussian_noise(const GrayImage& image, double std, std::uint32_t seed)
{
    if (std < 0.0)
        throw std::invalid_argument("add_white_gaussian_noise: std must be >= 0");
    GrayImage out = image;
    if (std == 0.0)
        return out;
    GaussianSource noise(seed);
    for (double& v : out.pixels)
        v = std::clamp(v + std * noise.next(), 0.0, 1.0);
    return out;
}

GrayImage box_blur(const GrayImage& image, int ksize)
{
    if (ksize < 3 || ksize > 13 || ksize % 2 == 0)
        throw std::invalid_argument("box_blur: kernel size must be odd and in [3, 13]");
    Kernel1D k;
    k.taps.assign(ksize, 1.0 / ksize);
    return separable_convolve(image, k);
}

WarpResult warp_image(const GrayImage& image, const Homography& h)
{
    Homography inv = h.inverse();  // throws on singular input
    int w = image.width;
    int ht = image.height;
    WarpResult res;
    res.image = GrayImage(w, ht);
    res.valid.assign(static_cast<std::size_t>(w) * ht, 0);

    for (int y = 0; y < ht; ++y)
    {
        for (int x = 0; x < w; ++x)
        {
            auto src = project_point(x, y, inv);
            if (!src)
                continue;
            double sx = src->x;
            double sy = src->y;
            if (sx < 0.0 || sx > w - 1 || sy < 0.0 || sy > ht - 1)
                continue;
            int ix = std::min(static_cast<int>(sx), w - 2);
            int iy = std::min(static_cast<int>(sy), ht - 2);
            double fx = sx - ix;
            double fy = sy - iy;
            double v = image.at(ix, iy) * (1 - fx) * (1 - fy)
                     + image.at(ix + 1, iy) * fx * (1 - fy)
                     + image.at(ix, iy + 1) * (1 - fx) * fy
                     + image.at(ix + 1, iy + 1) * fx * fy;
            res.image.at(x, y) = v;
            res.valid[static_cast<std::size_t>(y) * w + x] = 1;
        }
    }
    return res;
}

RepeatabilityReport repeatability(const std::vector<Keypoint>& kps_a,
                                  const std::vector<Keypoint>& kps_b,
                                  const Homography& h, double epsilon,
                                  int b_width, int b_height,
                                  const std::vector<std::uint8_t>* b_valid)
{
    if (!(epsilon > 0.0))
        throw std::invalid_argument("repeatability: epsilon must be positive");

    RepeatabilityReport report;
    report.epsilon = epsilon;
    report.total_b = static_cast<int>(kps_b.size());
    if (kps_a.empty() || kps_b.empty())
        return report;

    struct Projected
    {
        double x, y;
        int index;
    };
    std::vector<Projected> projected;
    projected.reserve(kps_a.size());
    for (std::size_t i = 0; i < kps_a.size(); ++i)
    {
        auto p = project_point(kps_a[i].x, kps_a[i].y, h);
        if (!p)
            continue;
        if (p->x < 0.0 || p->x > b_width - 1 || p->y < 0.0 || p->y > b_height - 1)
            continue;
        if (b_valid)
        {
            int px = static_cast<int>(std::lround(p->x));
            int py = static_cast<int>(std::lround(p->y));
            if (!(*b_valid)[static_cast<std::size_t>(py) * b_width + px])
                continue;
        }
        projected.push_back({p->x, p->y, static_cast<int>(i)});
    }
    report.total_a = static_cast<int>(projected.size());
    if (projected.empty())
        return report;

    struct Pair
    {
        double dist;
        int ia, ib;
    };
    std::vector<Pair> pairs;
    for (const Projected& pa : projected)
    {
        for (std::size_t j = 0; j < kps_b.size(); ++j)
        {
            double d = std::hypot(pa.x - kps_b[j].x, pa.y - kps_b[j].y);
            if (d <= epsilon)
                pairs.push_back({d, pa.index, static_cast<int>(j)});
        }
    }
    std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
        if (a.dist != b.dist)
            return a.dist < b.dist;
        if (a.ia != b.ia)
            return a.ia < b.ia;
        return a.ib < b.ib;
    });

    std::vector<char> used_a(kps_a.size(), 0), used_b(kps_b.size(), 0);
    for (const Pair& p : pairs)
    {
        if (used_a[p.ia] || used_b[p.ib])
            continue;
        used_a[p.ia] = used_b[p.ib] = 1;
        ++report.matched;
    }
    int denom = std::min(report.total_a, report.total_b);
    report.score = denom > 0 ? static_cast<double>(report.matched) / denom : 0.0;
    return report;
}

namespace {

// Zero crossings of a sampled profile by sign-change linear interpolation.
std::vector<double> zero_crossings(const std::vector<double>& row, int lo, int hi)
{
    std::vector<double> out;
    for (int i = std::max(lo, 0); i < std::min<int>(hi, static_cast<int>(row.size()) - 1); ++i)
    {
        double a = row[i];
        double b = row[i + 1];
        if (std::abs(a) < 1e-13 || std::abs(b) < 1e-13)
            continue;  // numerically dead zone, not a real crossing
        if (a * b < 0.0)
            out.push_back(i + a / (a - b));
    }
    return out;
}

std::vector<double> first_fine_profile(const GrayImage& fixture)
{
    ScaleSpace space = build_scale_space(fixture, 1);
    const GrayImage& fine0 = space.fine[0];
    int mid = fine0.height / 2;
    return std::vector<double>(fine0.row(mid), fine0.row(mid) + fine0.width);
}

}  // namespace

double level1_excitatory_width()
{
    // Impulse column: the first fine level's middle row is the 1D profile of
    // the level-1 difference kernel.
    const int w = 64, h = 32;
    GrayImage img(w, h);
    for (int y = 0; y < h; ++y)
        img.at(w / 2, y) = 1.0;
    std::vector<double> row = first_fine_profile(img);
    std::vector<double> crossings = zero_crossings(row, w / 2 - 16, w / 2 + 16);
    double left = -1.0, right = -1.0;
    for (double c : crossings)
    {
        if (c < w / 2 && (left < 0.0 || c > left))
            left = c;
        if (c > w / 2 && (right < 0.0 || c < right))
            right = c;
    }
    if (left < 0.0 || right < 0.0)
        throw std::runtime_error("level1_excitatory_width: crossings not found");
    return right - left;
}

double superimposition_experiment(int d)
{
    if (d < 1)
        throw std::invalid_argument("superimposition_experiment: d must be >= 1");
    int width = std::max(256, 4 * d + 64);
    GrayImage fixture = make_two_edges(width, 48, d);
    std::vector<double> row = first_fine_profile(fixture);

    int c0 = (width - d) / 2;
    double edge_a = c0 - 0.5;
    double edge_b = c0 + d - 0.5;
    std::vector<double> crossings = zero_crossings(row, c0 - 24, c0 + d + 24);
    if (crossings.empty())
        throw std::runtime_error("superimposition_experiment: no zero crossings found");

    auto nearest = [&](double edge) {
        double best = crossings.front();
        for (double c : crossings)
            if (std::abs(c - edge) < std::abs(best - edge))
                best = c;
        return std::abs(best - edge);
    };
    return 0.5 * (nearest(edge_a) + nearest(edge_b));
}

std::vector<double> scale_distribution(const std::vector<Keypoint>& keypoints)
{
    if (keypoints.empty())
        return {};
    int max_level = 0;
    for (const Keypoint& k : keypoints)
        max_level = std::max(max_level, k.level);
    std::vector<double> hist(max_level + 1, 0.0);
    for (const Keypoint& k : keypoints)
        hist[k.level] += 1.0;
    for (double& v : hist)
        v /= static_cast<double>(keypoints.size());
    return hist;
}

std::vector<TimingRow> timing_scaling(const std::vector<std::pair<int, int>>& sizes)
{
    if (sizes.size() < 2)
        throw std::invalid_argument("timing_scaling: need at least two sizes");
    long long smallest = -1, largest = -1;
    for (auto [w, h] : sizes)
    {
        long long px = static_cast<long long>(w) * h;
        smallest = smallest < 0 ? px : std::min(smallest, px);
        largest = std::max(largest, px);
    }
    if (largest < 4 * smallest)
        throw std::invalid_argument("timing_scaling: largest size must be >= 4x smallest");

    ThreadCountOverride single(1);  // keep the measurement contention-free
    std::vector<TimingRow> rows;
    for (auto [w, h] : sizes)
    {
        GrayImage img = make_random_texture(w, h, 1234);
        build_scale_space(img, 3);  // warm-up, not timed
        std::vector<double> samples;
        for (int run = 0; run < 5; ++run)
        {
            auto t0 = std::chrono::steady_clock::now();
            ScaleSpace space = build_scale_space(img, 3);
            auto t1 = std::chrono::steady_clock::now();
            samples.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
            if (space.fine.empty())
                throw std::runtime_error("timing_scaling: empty pyramid");
        }
        std::sort(samples.begin(), samples.end());
        rows.push_back({static_cast<long long>(w) * h, samples[2]});
    }
    return rows;
}

std::string kernel_analysis_csv(const std::vector<double>& mu_values,
                                const std::vector<double>& lambda_grid)
{
    if (mu_values.empty() || lambda_grid.empty())
        throw std::invalid_argument("kernel_analysis_csv: grids must be nonempty");
    std::ostringstream out;
    out.precision(9);
    out << "mu,lambda,margin,satisfied\n";
    for (double mu : mu_values)
    {
        std::vector<double> lambdas = lambda_grid;
        lambdas.push_back(solve_golden_lambda(mu));  // mark the golden point
        std::sort(lambdas.begin(), lambdas.end());
        for (double lambda : lambdas)
        {
            ConstraintResult res = superimposition_check(lambda, mu);
            out << mu << ',' << lambda << ',' << res.margin << ','
                << (res.satisfied ? 1 : 0) << '\n';
        }
    }
    return out.str();
}

std::string dog_profile_csv(const std::vector<double>& mu_values)
{
    if (mu_values.empty())
        throw std::invalid_argument("dog_profile_csv: mu values must be nonempty");
    std::ostringstream out;
    out.precision(9);
    out << "mu,r,value\n";
    for (double mu : mu_values)
    {
        KernelSpec spec(0.627, mu);
        for (int i = -512; i <= 512; ++i)
        {
            double r = i / 64.0;
            out << mu << ',' << r << ',' << dog(r, 0.0, spec) << '\n';
        }
    }
    return out.str();
}

namespace {

std::string sweep_row(double key, const RepeatabilityReport& r)
{
    std::ostringstream out;
    out.precision(6);
    out << key << ',' << r.score << ',' << r.matched << ',' << r.total_a << ','
        << r.total_b << '\n';
    return out.str();
}

}  // namespace

std::string noise_sweep_csv(const GrayImage& image, const DetectorParams& params,
                            std::uint32_t seed)
{
    std::vector<Keypoint> base = detect(image, params);
    std::ostringstream out;
    out << "std,score,matched,total_a,total_b\n";
    for (double std_dev : {0.01, 0.05, 0.1, 0.2})
    {
        GrayImage noisy = add_white_gaussian_noise(image, std_dev, seed);
        std::vector<Keypoint> kps = detect(noisy, params);
        RepeatabilityReport r = repeatability(base, kps, Homography::identity(), 2.0,
                                              image.width, image.height);
        out << sweep_row(std_dev, r);
    }
    return out.str();
}

std::string blur_sweep_csv(const GrayImage& image, const DetectorParams& params)
{
    std::vector<Keypoint> base = detect(image, params);
    std::ostringstream out;
    out << "ksize,score,matched,total_a,total_b\n";
    for (int ksize = 3; ksize <= 13; ksize += 2)
    {
        GrayImage blurred = box_blur(image, ksize);
        std::vector<Keypoint> kps = detect(blurred, params);
        RepeatabilityReport r = repeatability(base, kps, Homography::identity(), 2.0,
                                              image.width, image.height);
        out << sweep_row(ksize, r);
    }
    return out.str();
}

}  // namespace ffd
