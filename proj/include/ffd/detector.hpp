#ifndef FFD_DETECTOR_HPP
#define FFD_DETECTOR_HPP

#include <array>
#include <vector>

#include "ffd/image.hpp"
#include "ffd/scale_space.hpp"

namespace ffd {

struct DetectorParams
{
    int n = 3;                   // scale levels
    double sigma0 = 0.6;         // presmooth width
    double tau_lc = 0.05;        // contrast threshold on |D_k(x_hat)|
    double tau_plus = 0.7;       // anisotropy below this is a conjunction
    double tau_minus = 1.5;      // anisotropy above this is a saddle, also kept
    int max_keypoints = 10000;
    int max_relocalizations = 5;

    void validate() const;
};

struct Candidate
{
    int x = 0;
    int y = 0;
    int level = 0;      // fine stack index, 0-based
    double value = 0.0;
    bool is_max = true;
};

struct Keypoint
{
    double x = 0.0;
    double y = 0.0;
    double sigma = 0.0;     // effective scale, pixels
    int level = 0;          // originating fine index
    double response = 0.0;  // interpolated fine value at the refined location
    double cm = 0.0;        // anisotropy
    std::array<double, 3> offset{0.0, 0.0, 0.0};  // dx, dy, dlevel
};

struct StructureTensor
{
    double jxx = 0.0;
    double jyy = 0.0;
    double jxy = 0.0;
};

enum class RefineStatus
{
    accepted,
    diverged,       // offset never settled within half a pixel
    singular,       // degenerate 3x3 Hessian
    out_of_bounds,  // relocalization left the scannable interior
};

struct RefineResult
{
    RefineStatus status = RefineStatus::diverged;
    Keypoint keypoint;  // valid when accepted; cm filled by the caller
    int x = 0;          // final lattice location
    int y = 0;
    int level = 0;
};

/// Pixels at each border of fine level k (0-based) that the detector skips:
/// half-width of the widest kernel feeding the NMS stencil, plus one.
int border_margin(int level);

/// 3x3x3 non-maximum suppression over the interior fine levels 1..n
/// (0-based); strict inequality against all 26 neighbours, row-major order.
std::vector<Candidate> find_extrema(const ScaleSpace& space);

/// Quadratic refinement of a candidate with bounded re-localization.
RefineResult refine(const Candidate& candidate, const ScaleSpace& space,
                    const DetectorParams& params);

/// Second central differences of fine level `level` at (x, y).
StructureTensor structure_tensor(const ScaleSpace& space, int x, int y, int level);

/// C_m = 1 - 4*Det(J)/Tr^2(J). In [0, 1] for Det >= 0, above 1 for saddles.
/// Throws std::domain_error when |Tr| < 1e-12.
double anisotropy(const StructureTensor& t);

/// Full pipeline: pyramid, NMS, refinement, contrast and anisotropy filters,
/// sort by |response| descending, cap at max_keypoints.
std::vector<Keypoint> detect(const GrayImage& image, const DetectorParams& params = {});

/// Same pipeline on an already-built scale space.
std::vector<Keypoint> detect_in_space(const ScaleSpace& space, const DetectorParams& params);

}  // namespace ffd

#endif
