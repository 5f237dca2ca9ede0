#ifndef FFD_CONVOLVE_HPP
#define FFD_CONVOLVE_HPP

#include "ffd/image.hpp"
#include "ffd/kernels.hpp"

namespace ffd {

/// Worker count used for row-parallel filtering. Resolved once from the
/// FFD_THREADS environment variable (0 or unset = auto).
int thread_count();

/// Temporarily overrides the worker count; restores it on destruction.
/// Used by timing runs, which pin to a single worker.
class ThreadCountOverride
{
public:
    explicit ThreadCountOverride(int count);
    ~ThreadCountOverride();
    ThreadCountOverride(const ThreadCountOverride&) = delete;
    ThreadCountOverride& operator=(const ThreadCountOverride&) = delete;

private:
    int previous_;
};

/// Horizontal then vertical pass with the same taps. Borders are mirrored
/// without repeating the edge sample (... 2 1 0 | 1 2 ...). Output keeps the
/// input dimensions. Zero taps of upscaled bank members are skipped.
GrayImage separable_convolve(const GrayImage& image, const Kernel1D& kernel);

}  // namespace ffd

#endif
