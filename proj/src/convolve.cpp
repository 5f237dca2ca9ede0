#include "ffd/convolve.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <utility>
#include <vector>

namespace ffd {

namespace {

int resolve_thread_count()
{
    if (const char* env = std::getenv("FFD_THREADS"))
    {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0)
            return static_cast<int>(std::min(v, 64L));
        // 0 or malformed falls through to auto
    }
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
}

std::atomic<int> g_thread_override{0};

// Runs fn(begin, end) over [0, count) split across workers. Partitions are
// disjoint, so results are identical to the serial run.
template <typename Fn>
void parallel_rows(int count, Fn&& fn)
{
    int workers = g_thread_override.load();
    if (workers <= 0)
        workers = thread_count();
    workers = std::min(workers, count);
    if (workers <= 1 || count < 64)
    {
        fn(0, count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    int chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w)
    {
        int begin = w * chunk;
        int end = std::min(count, begin + chunk);
        if (begin >= end)
            break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (std::thread& t : pool)
        t.join();
}

inline int mirror(int i, int n)
{
    if (i < 0)
        return -i;
    if (i >= n)
        return 2 * n - 2 - i;
    return i;
}

}  // namespace

int thread_count()
{
    static const int count = resolve_thread_count();
    return count;
}

ThreadCountOverride::ThreadCountOverride(int count)
    : previous_(g_thread_override.exchange(count))
{
}

ThreadCountOverride::~ThreadCountOverride()
{
    g_thread_override.store(previous_);
}

GrayImage separable_convolve(const GrayImage& image, const Kernel1D& kernel)
{
    if (image.empty())
        throw std::invalid_argument("separable_convolve: empty image");
    int w = image.width;
    int h = image.height;
    int r = kernel.radius();
    if (static_cast<int>(kernel.taps.size()) > 2 * std::min(w, h))
        throw std::invalid_argument("separable_convolve: kernel too long for image");

    // Sparse view of the taps; upscaled bank members are mostly zeros.
    std::vector<std::pair<int, double>> nz;
    nz.reserve(kernel.taps.size());
    for (int k = 0; k < static_cast<int>(kernel.taps.size()); ++k)
        if (kernel.taps[k] != 0.0)
            nz.emplace_back(k - r, kernel.taps[k]);

    GrayImage tmp(w, h);
    parallel_rows(h, [&](int y0, int y1) {
        std::vector<double> padded(static_cast<std::size_t>(w) + 2 * r);
        for (int y = y0; y < y1; ++y)
        {
            const double* src = image.row(y);
            for (int i = -r; i < w + r; ++i)
                padded[i + r] = src[mirror(i, w)];
            double* dst = tmp.row(y);
            for (int x = 0; x < w; ++x)
            {
                double acc = 0.0;
                for (const auto& [off, t] : nz)
                    acc += t * padded[x + r + off];
                dst[x] = acc;
            }
        }
    });

    // Vertical pass accumulates whole rows, keeping the access contiguous.
    GrayImage out(w, h);
    parallel_rows(h, [&](int y0, int y1) {
        for (int y = y0; y < y1; ++y)
        {
            double* dst = out.row(y);
            std::fill(dst, dst + w, 0.0);
            for (const auto& [off, t] : nz)
            {
                const double* src = tmp.row(mirror(y + off, h));
                for (int x = 0; x < w; ++x)
                    dst[x] += t * src[x];
            }
        }
    });
    return out;
}

}  // namespace ffd
