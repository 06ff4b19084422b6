#pragma once

#include "psi/image.hpp"

namespace psi {

struct QualityReport {
    double psnr_db = 0.0;
    double ssim = 0.0;
};

// 10*log10(peak^2 / MSE) with the MSE taken jointly over all samples and
// channels. Identical inputs yield +infinity, the documented sentinel, so
// degenerate comparisons do not throw.
double psnr(const Image& a, const Image& b, double peak);
double psnr(const Planed& a, const Planed& b, double peak);

// Mean local SSIM over an 11x11 Gaussian window (sigma 1.5, K1=0.01, K2=0.03,
// peak 1.0), computed on the valid interior; channel mean for color images.
// Images smaller than the window are rejected.
double ssim(const Image& a, const Image& b);
double ssim(const Planed& a, const Planed& b);

inline QualityReport quality(const Image& a, const Image& b) {
    return QualityReport{psnr(a, b, 1.0), ssim(a, b)};
}

}  // namespace psi
