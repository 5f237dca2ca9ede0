#include <doctest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ffd/kernels.hpp"

using namespace ffd;

TEST_CASE("presmooth kernel")
{
    Kernel1D h0 = presmooth_kernel();
    REQUIRE(h0.taps.size() == 5);
    CHECK(h0.taps[2] == doctest::Approx(0.6638 / 0.999932).epsilon(1e-12));
    CHECK(h0.taps[0] == h0.taps[4]);
    CHECK(h0.taps[1] == h0.taps[3]);
    double sum = std::accumulate(h0.taps.begin(), h0.taps.end(), 0.0);
    CHECK(std::abs(sum - 1.0) < 1e-15);

    // the published taps are a sampled Gaussian of width 0.6
    Kernel1D g = gaussian_kernel(0.6);
    REQUIRE(g.taps.size() == 5);
    for (int i = 0; i < 5; ++i)
        CHECK(std::abs(g.taps[i] - h0.taps[i]) < 1e-4);
}

TEST_CASE("atrous kernel bank")
{
    Kernel1D h1 = atrous_kernel(1);
    REQUIRE(h1.taps.size() == 5);
    CHECK(h1.taps[0] == 1.0 / 16);
    CHECK(h1.taps[1] == 4.0 / 16);
    CHECK(h1.taps[2] == 6.0 / 16);
    CHECK(h1.taps[3] == 4.0 / 16);
    CHECK(h1.taps[4] == 1.0 / 16);

    Kernel1D h2 = atrous_kernel(2);
    REQUIRE(h2.taps.size() == 9);
    const double expected2[9] = {1.0 / 16, 0, 4.0 / 16, 0, 6.0 / 16, 0, 4.0 / 16, 0, 1.0 / 16};
    for (int i = 0; i < 9; ++i)
        CHECK(h2.taps[i] == expected2[i]);

    Kernel1D h3 = atrous_kernel(3);
    REQUIRE(h3.taps.size() == 17);
    for (int i = 0; i < 17; ++i)
    {
        if (i % 4 == 0)
            CHECK(h3.taps[i] != 0.0);
        else
            CHECK(h3.taps[i] == 0.0);
    }

    for (int j = 1; j <= 6; ++j)
    {
        Kernel1D h = atrous_kernel(j);
        CHECK(h.taps.size() == 4u * (1u << (j - 1)) + 1u);
        CHECK(std::accumulate(h.taps.begin(), h.taps.end(), 0.0) == 1.0);
        for (std::size_t i = 0; i < h.taps.size(); ++i)
            CHECK(h.taps[i] == h.taps[h.taps.size() - 1 - i]);
    }
    CHECK_THROWS_AS(atrous_kernel(0), std::domain_error);
}

TEST_CASE("cubic spline")
{
    CHECK(cubic_spline(0.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(cubic_spline(1.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(cubic_spline(0.5) == doctest::Approx(0.4791666666666667).epsilon(1e-12));
    CHECK(cubic_spline(2.0) == 0.0);
    CHECK(cubic_spline(-2.0) == 0.0);
    CHECK(cubic_spline(3.1) == doctest::Approx(0.0).epsilon(1e-12));
    for (double v = 0.0; v <= 2.5; v += 0.1)
        CHECK(cubic_spline(v) == doctest::Approx(cubic_spline(-v)).epsilon(1e-12));
}

TEST_CASE("wavelet function")
{
    // phi(2u) vanishes for |u| >= 1, leaving -phi(u)
    for (double u : {1.0, 1.3, 1.9})
        CHECK(wavelet_fn(u) == doctest::Approx(-cubic_spline(u)).epsilon(1e-12));
    for (double u = 0.0; u <= 2.2; u += 0.07)
        CHECK(wavelet_fn(u) == doctest::Approx(wavelet_fn(-u)).epsilon(1e-12));

    // zero mean: difference of two unit-integral dilates
    double step = 1e-4;
    double integral = 0.0;
    for (double u = -2.0; u < 2.0; u += step)
        integral += 0.5 * (wavelet_fn(u) + wavelet_fn(u + step)) * step;
    CHECK(std::abs(integral) < 1e-6);
}
