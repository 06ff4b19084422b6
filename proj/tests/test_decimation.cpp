#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psi/decimation.hpp"

#include <random>

using psi::DecimationScheme;
using psi::Image;
using psi::Planed;

namespace {

constexpr DecimationScheme kAll[] = {DecimationScheme::Bicubic, DecimationScheme::DaubechiesApprox,
                                     DecimationScheme::DMeyerApprox, DecimationScheme::GaussianDown,
                                     DecimationScheme::SubSample};

Planed ramp(Eigen::Index n) {
    Planed p(n, n);
    for (Eigen::Index y = 0; y < n; ++y)
        for (Eigen::Index x = 0; x < n; ++x)
            p(y, x) = (0.25 * y + 0.5 * x) / static_cast<double>(n);
    return p;
}

}  // namespace

TEST_CASE("every scheme preserves constants at both factors") {
    const Image c(Planed(Planed::Constant(16, 16, 0.44)));
    for (const auto scheme : kAll)
        for (const int factor : {2, 4}) {
            const Image out = psi::decimate(c, scheme, factor);
            CAPTURE(psi::to_string(scheme));
            CHECK(out.width() == 16 / factor);
            CHECK(out.height() == 16 / factor);
            CHECK((out.planes[0] - 0.44).abs().maxCoeff() < 1e-9);
        }
}

TEST_CASE("subsample picks the (0,0) phase exactly") {
    Planed board(8, 8);
    for (Eigen::Index y = 0; y < 8; ++y)
        for (Eigen::Index x = 0; x < 8; ++x) board(y, x) = ((x + y) % 2 == 0) ? 0.9 : 0.1;
    const Image out = psi::decimate(Image(board), DecimationScheme::SubSample, 2);
    CHECK((out.planes[0] - 0.9).abs().maxCoeff() == 0.0);  // aliases to the sampled phase
}

TEST_CASE("wavelet approximation equals half the dwt2 LL") {
    const Planed r = ramp(16);
    const auto ll = psi::dwt2(r, psi::make_filter("db2")).ll;
    const Image out = psi::decimate(Image(r), DecimationScheme::DaubechiesApprox, 2);
    CHECK((out.planes[0] - 0.5 * ll).abs().maxCoeff() < 1e-12);

    // factor 4 composes two levels
    const auto ll2 = psi::dwt2(Planed(0.5 * ll), psi::make_filter("db2")).ll;
    const Image out4 = psi::decimate(Image(r), DecimationScheme::DaubechiesApprox, 4);
    CHECK((out4.planes[0] - 0.5 * ll2).abs().maxCoeff() < 1e-12);
}

TEST_CASE("gaussian scheme is blur followed by phase-0 sampling") {
    const Planed r = ramp(12);
    const Planed blurred = psi::gaussian_blur7(r);
    const Image out = psi::decimate(Image(r), DecimationScheme::GaussianDown, 2);
    for (Eigen::Index y = 0; y < 6; ++y)
        for (Eigen::Index x = 0; x < 6; ++x)
            CHECK(out.planes[0](y, x) == blurred(2 * y, 2 * x));
}

TEST_CASE("decimate validates factor and divisibility") {
    const Image c(Planed(Planed::Constant(10, 10, 0.5)));
    CHECK_THROWS_AS(psi::decimate(c, DecimationScheme::Bicubic, 3), std::invalid_argument);
    CHECK_THROWS_AS(psi::decimate(c, DecimationScheme::Bicubic, 4), std::invalid_argument);
}

TEST_CASE("bicubic identity and constants") {
    const Planed r = ramp(10);
    CHECK((psi::bicubic_resize(r, 1.0) - r).abs().maxCoeff() < 1e-9);
    const Planed c = Planed::Constant(7, 9, 0.3);
    CHECK((psi::bicubic_resize(c, 1.7) - 0.3).abs().maxCoeff() < 1e-9);
}

TEST_CASE("bicubic reproduces linear ramps away from borders") {
    const Eigen::Index n = 16;
    Planed p(n, n);
    for (Eigen::Index y = 0; y < n; ++y)
        for (Eigen::Index x = 0; x < n; ++x) p(y, x) = 0.1 + 0.02 * static_cast<double>(x);
    const Planed up = psi::bicubic_resize(p, 2.0);
    // expected: same ramp sampled at half steps, x_src = (x + 0.5)/2 - 0.5
    double worst = 0;
    for (Eigen::Index y = 4; y < up.rows() - 4; ++y)
        for (Eigen::Index x = 4; x < up.cols() - 4; ++x) {
            const double xs = (static_cast<double>(x) + 0.5) / 2.0 - 0.5;
            worst = std::max(worst, std::abs(up(y, x) - (0.1 + 0.02 * xs)));
        }
    CHECK(worst < 1e-6);
}

TEST_CASE("bicubic output dimensions and degenerate sizes") {
    const Planed p = ramp(10);
    CHECK(psi::bicubic_resize(p, 1.5).rows() == 15);
    CHECK(psi::bicubic_resize(p, 0.75).rows() == 8);  // round(7.5)
    CHECK_THROWS_AS(psi::bicubic_resize(p, 0.01), std::invalid_argument);
    CHECK_THROWS_AS(psi::bicubic_resize(p, -1.0), std::invalid_argument);
}

TEST_CASE("scheme names round-trip") {
    for (const auto scheme : kAll)
        CHECK(psi::decimation_scheme_from_string(psi::to_string(scheme)) == scheme);
    CHECK_THROWS_AS(psi::decimation_scheme_from_string("area"), std::invalid_argument);
}
