#pragma once

#include "psi/image.hpp"
#include "psi/wavelet.hpp"

#include <string>

namespace psi {

// Low-resolution input generators of the evaluation protocol.
enum class DecimationScheme { Bicubic, DaubechiesApprox, DMeyerApprox, GaussianDown, SubSample };

const char* to_string(DecimationScheme s);
DecimationScheme decimation_scheme_from_string(const std::string& name);

// Catmull-Rom (a = -0.5) separable bicubic resampling with symmetric edge
// handling; output dimensions are round(scale * input dimensions).
Planed bicubic_resize(const Planed& p, double scale);
Image bicubic_resize(const Image& img, double scale);

// Separable Gaussian blur, 7 taps, sigma 1, symmetric edges.
Planed gaussian_blur7(const Planed& p);

// Reduces each dimension by `factor` (2 or 4):
//  Bicubic          bicubic resampling to 1/factor
//  DaubechiesApprox repeated db2 LL, scaled by 1/2 per level
//  DMeyerApprox     repeated dmey LL, scaled by 1/2 per level
//  GaussianDown     gaussian_blur7 then every factor-th sample
//  SubSample        every factor-th sample, no smoothing
Image decimate(const Image& img, DecimationScheme scheme, int factor);

}  // namespace psi
