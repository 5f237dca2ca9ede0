#ifndef FFD_EVAL_HPP
#define FFD_EVAL_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ffd/detector.hpp"
#include "ffd/homography.hpp"
#include "ffd/image.hpp"

namespace ffd {

// ---- synthetic fixtures -------------------------------------------------

GrayImage make_step_edge(int width, int height);
/// Bright band of width d, step edges exactly d pixels apart.
GrayImage make_two_edges(int width, int height, int d);
GrayImage make_checkerboard(int width, int height, int cell);
/// Lightly smoothed uniform noise stretched to [0, 1]; deterministic per seed.
GrayImage make_random_texture(int width, int height, std::uint32_t seed);

/// Per-pixel normal perturbation, clamped to [0, 1]; deterministic per seed.
GrayImage add_white_gaussian_noise(const GrayImage& image, double std, std::uint32_t seed);

/// Normalized box filter, odd kernel size in [3, 13], mirrored borders.
GrayImage box_blur(const GrayImage& image, int ksize);

// ---- warping -------------------------------------------------------------

struct WarpResult
{
    GrayImage image;
    std::vector<std::uint8_t> valid;  // 1 where the source projection landed in bounds

    bool is_valid(int x, int y) const
    {
        return valid[static_cast<std::size_t>(y) * image.width + x] != 0;
    }
};

/// Inverse-mapping warp with bilinear interpolation; out-of-source pixels
/// are zero and flagged invalid.
WarpResult warp_image(const GrayImage& image, const Homography& h);

// ---- repeatability -------------------------------------------------------

struct RepeatabilityReport
{
    double score = 0.0;
    int matched = 0;
    int total_a = 0;  // keypoints of A whose projection lands in B's valid region
    int total_b = 0;
    double epsilon = 0.0;
};

/// Projects A's keypoints into B's frame via h, drops the ones outside B's
/// valid region, then greedily matches one-to-one in ascending distance
/// order. score = matched / min(total_a, total_b). The classic center
/// distance convention, not the normalized variant.
RepeatabilityReport repeatability(const std::vector<Keypoint>& kps_a,
                                  const std::vector<Keypoint>& kps_b,
                                  const Homography& h, double epsilon,
                                  int b_width, int b_height,
                                  const std::vector<std::uint8_t>* b_valid = nullptr);

// ---- experiments ----------------------------------------------------------

/// Zero-crossing diameter of the first fine level's 1D profile, measured
/// from a bright-column impulse via sign-change interpolation.
double level1_excitatory_width();

/// Builds a two-edge fixture d pixels apart, runs the first fine level and
/// returns the mean displacement of the two zero crossings from their true
/// edges.
double superimposition_experiment(int d);

/// Histogram of keypoints over originating fine level, normalized to 1.
/// Empty input yields an empty histogram.
std::vector<double> scale_distribution(const std::vector<Keypoint>& keypoints);

struct TimingRow
{
    long long pixels = 0;
    double build_ms = 0.0;  // median of 5 pyramid builds
};

/// Median-of-5 wall time of build_scale_space per size, pinned to one worker.
/// Requires at least two sizes with the largest at least 4x the smallest in
/// pixel count.
std::vector<TimingRow> timing_scaling(const std::vector<std::pair<int, int>>& sizes);

/// Constraint-map CSV over the (mu, lambda) grid; columns
/// mu,lambda,margin,satisfied. Each mu also gets a row at its exactly solved
/// lambda so the golden point is present.
std::string kernel_analysis_csv(const std::vector<double>& mu_values,
                                const std::vector<double>& lambda_grid);

/// Sampled DoG profiles per mu at sigma = 0.627; columns mu,r,value.
std::string dog_profile_csv(const std::vector<double>& mu_values);

/// Repeatability sweep under white Gaussian noise; columns
/// std,score,matched,total_a,total_b.
std::string noise_sweep_csv(const GrayImage& image, const DetectorParams& params,
                            std::uint32_t seed);

/// Repeatability sweep under box blur (sizes 3..13); columns
/// ksize,score,matched,total_a,total_b.
std::string blur_sweep_csv(const GrayImage& image, const DetectorParams& params);

}  // namespace ffd

#endif
