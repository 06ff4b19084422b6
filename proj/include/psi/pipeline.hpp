#pragma once

#include "psi/fusion.hpp"
#include "psi/image.hpp"
#include "psi/pso.hpp"
#include "psi/wavelet.hpp"

#include <string>
#include <vector>

namespace psi {

// Outcome of the modeling stage for one channel.
struct ModelResult {
    FusionWeights weights;
    double fitness_db = 0.0;  // PSNR of the self-estimate against the channel
    int iterations = 0;
    std::string wavelet;
    bool degenerate = false;  // constant-channel modeling: fitness hit the cap
};

// Modeling fitness ceiling. PSNR at or above this means the self-estimate is
// numerically indistinguishable from the channel (constant images reach it
// through arithmetic noise, identical images through the psnr infinity
// sentinel); the fitness is capped here so the optimizer's finite-fitness
// contract holds, and the result is flagged degenerate. Real content tops out
// around 60 dB.
inline constexpr double kDegenerateFitnessDb = 300.0;

// Requested magnification. dyadic_levels is the number of 2x generation
// passes; alpha < 2^levels is finished with a bicubic reduction.
struct ScaleFactor {
    double alpha = 2.0;
    int dyadic_levels = 1;

    static ScaleFactor from_alpha(double alpha);
};

struct InterpolateOptions {
    bool remodel_per_level = false;  // re-run the modeling stage before each 2x pass
};

struct InterpolateResult {
    Image image;
    std::vector<ModelResult> channel_models;  // one per channel, modeling order
};

// Precomputes everything about a low-resolution plane that the weight search
// reuses: the plane itself as LL plus its upsampled-DWT and SWT detail
// triples. estimate() is then linear in the weights.
class DetailEstimator {
  public:
    DetailEstimator(Planed ll, const WaveletFilter& filter);

    // IDWT of (ll, fused details); output doubles each dimension.
    Planed estimate(const FusionWeights& weights) const;

    const Planed& ll() const { return ll_; }

  private:
    Planed ll_;
    WaveletFilter filter_;
    DetailTriple<double> upsampled_dwt_;  // already through upsample_smooth
    DetailTriple<double> swt_;
};

// Modeling-stage reconstruction: estimates the plane one scale above `ll`
// from ll's own DWT (lifted) and SWT details fused under `weights`.
// Requires ll to be even-sized and at least 8x8.
Planed reconstruct_estimate(const Planed& ll, const FusionWeights& weights,
                            const WaveletFilter& filter);

// Learns the fusion weights on the channel itself: LL = dwt2(channel).ll,
// fitness(W) = psnr(channel, reconstruct_estimate(LL, W), peak 1), maximized
// by PSO seeded with the all-zero and all-one anchors. Channel must be
// even-sized and at least 16x16.
ModelResult model_weights(const Planed& channel, const WaveletFilter& filter,
                          const PsoConfig& pso_config);

// Generation stage: the input acts as the approximation of the unknown 2x
// image (fed as 2*image so constants are preserved), details come from the
// fused DWT/SWT subbands of the input. Output is clipped to [0,1].
Planed generate_2x(const Planed& image, const FusionWeights& weights, const WaveletFilter& filter);

// Full method on a 1- or 3-channel image: per channel, model once, apply
// generate_2x dyadic_levels times, bicubic-reduce to alpha if non-dyadic,
// crop to round(alpha * original size), clip. Requires alpha > 1 and
// channels of at least 16x16.
InterpolateResult interpolate(const Image& image, const ScaleFactor& alpha,
                              const WaveletFilter& filter, const PsoConfig& pso_config,
                              const InterpolateOptions& options = {});

// Generation-only variant for previously learned weights (one entry reused
// for every channel, or one entry per channel). Bit-identical to the
// modeling path given the weights it produced.
Image interpolate_with_weights(const Image& image, const ScaleFactor& alpha,
                               const WaveletFilter& filter,
                               const std::vector<FusionWeights>& weights_per_channel);

}  // namespace psi
