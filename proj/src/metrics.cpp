#include "psi/metrics.hpp"

#include <cmath>
#include <limits>

namespace psi {

namespace {

constexpr int kWindow = 11;
constexpr double kSigma = 1.5;
constexpr double kK1 = 0.01;
constexpr double kK2 = 0.03;
constexpr double kPeak = 1.0;

void check_same_shape(const Image& a, const Image& b) {
    a.validate();
    b.validate();
    require(a.channels() == b.channels() && a.width() == b.width() && a.height() == b.height(),
            "metric inputs must have identical dimensions and channel counts");
}

const Eigen::ArrayXd& ssim_window() {
    static const Eigen::ArrayXd w = [] {
        Eigen::ArrayXd g(kWindow);
        for (int i = 0; i < kWindow; ++i) {
            const double t = i - (kWindow - 1) / 2.0;
            g[i] = std::exp(-0.5 * t * t / (kSigma * kSigma));
        }
        return (g / g.sum()).eval();
    }();
    return w;
}

// Valid-mode separable correlation with the SSIM window; output shrinks by
// kWindow-1 per dimension.
Planed window_filter(const Planed& p) {
    const Eigen::ArrayXd& w = ssim_window();
    const Eigen::Index rows = p.rows(), cols = p.cols();
    Planed tmp(rows - kWindow + 1, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i + kWindow <= rows; ++i) {
            double s = 0;
            for (int m = 0; m < kWindow; ++m) s += w[m] * p(i + m, j);
            tmp(i, j) = s;
        }
    Planed out(rows - kWindow + 1, cols - kWindow + 1);
    for (Eigen::Index i = 0; i < out.rows(); ++i)
        for (Eigen::Index j = 0; j + kWindow <= cols; ++j) {
            double s = 0;
            for (int m = 0; m < kWindow; ++m) s += w[m] * tmp(i, j + m);
            out(i, j) = s;
        }
    return out;
}

}  // namespace

double psnr(const Planed& a, const Planed& b, double peak) {
    require(peak > 0.0, "psnr: peak must be positive");
    require(a.rows() == b.rows() && a.cols() == b.cols(),
            "psnr: inputs must have identical dimensions");
    require(a.size() > 0, "psnr: empty input");
    const double mse = (a - b).square().sum() / static_cast<double>(a.size());
    if (mse == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(peak * peak / mse);
}

double psnr(const Image& a, const Image& b, double peak) {
    check_same_shape(a, b);
    require(peak > 0.0, "psnr: peak must be positive");
    double sq = 0.0;
    double n = 0.0;
    for (int c = 0; c < a.channels(); ++c) {
        sq += (a.planes[static_cast<size_t>(c)] - b.planes[static_cast<size_t>(c)]).square().sum();
        n += static_cast<double>(a.planes[static_cast<size_t>(c)].size());
    }
    const double mse = sq / n;
    if (mse == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(peak * peak / mse);
}

double ssim(const Planed& a, const Planed& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(),
            "ssim: inputs must have identical dimensions");
    require(a.rows() >= kWindow && a.cols() >= kWindow,
            "ssim: images smaller than the 11x11 window");
    const double c1 = (kK1 * kPeak) * (kK1 * kPeak);
    const double c2 = (kK2 * kPeak) * (kK2 * kPeak);

    const Planed mu_a = window_filter(a);
    const Planed mu_b = window_filter(b);
    const Planed aa = window_filter(a.square());
    const Planed bb = window_filter(b.square());
    const Planed ab = window_filter(a * b);

    const Planed var_a = aa - mu_a.square();
    const Planed var_b = bb - mu_b.square();
    const Planed cov = ab - mu_a * mu_b;

    const Planed num = (2.0 * mu_a * mu_b + c1) * (2.0 * cov + c2);
    const Planed den = (mu_a.square() + mu_b.square() + c1) * (var_a + var_b + c2);
    return (num / den).mean();
}

double ssim(const Image& a, const Image& b) {
    check_same_shape(a, b);
    double s = 0.0;
    for (int c = 0; c < a.channels(); ++c)
        s += ssim(a.planes[static_cast<size_t>(c)], b.planes[static_cast<size_t>(c)]);
    return s / a.channels();
}

}  // namespace psi
