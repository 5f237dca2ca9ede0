#ifndef FFD_KERNELS_HPP
#define FFD_KERNELS_HPP

#include <vector>

namespace ffd {

/// Odd-length symmetric 1D filter. The taps of upscaled bank members keep
/// their inserted zeros so the length reflects the true support.
struct Kernel1D
{
    std::vector<double> taps;
    int stride_origin = 0;  // bank level j the kernel was built for, 0 = presmoother

    int radius() const { return static_cast<int>(taps.size() - 1) / 2; }
};

/// The fixed presmoothing filter (a sampled Gaussian of width 0.6,
/// renormalized to unit sum).
Kernel1D presmooth_kernel();

/// Sampled Gaussian of the given width over radius ceil(3*sigma) (at least 2),
/// renormalized to unit sum. presmooth_kernel() equals gaussian_kernel(0.6).
Kernel1D gaussian_kernel(double sigma);

/// Cubic-spline bank member: j = 1 is [1,4,6,4,1]/16, higher levels insert
/// 2^(j-1)-1 zeros between adjacent taps.
Kernel1D atrous_kernel(int j);

/// 1D cubic B-spline, compact support [-2, 2].
double cubic_spline(double v);

/// Wavelet associated with the spline refinement: psi(u) = 2*phi(2u) - phi(u).
double wavelet_fn(double v);

}  // namespace ffd

#endif
