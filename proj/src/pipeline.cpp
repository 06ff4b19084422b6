#include "psi/pipeline.hpp"

#include "psi/decimation.hpp"
#include "psi/metrics.hpp"

#include <cmath>

namespace psi {

namespace {

Eigen::Index rounded(double x) { return static_cast<Eigen::Index>(std::llround(x)); }

}  // namespace

ScaleFactor ScaleFactor::from_alpha(double alpha) {
    require(std::isfinite(alpha) && alpha > 1.0, "scale factor must be > 1");
    int l = 1;
    while (std::pow(2.0, l) < alpha - 1e-12) ++l;
    return ScaleFactor{alpha, l};
}

DetailEstimator::DetailEstimator(Planed ll, const WaveletFilter& filter)
    : ll_(std::move(ll)), filter_(filter) {
    require(ll_.rows() >= 8 && ll_.cols() >= 8,
            "detail estimation needs an approximation of at least 8x8 "
            "(two decomposition levels)");
    detail::check_even(ll_.rows(), ll_.cols(), "detail estimation");
    const SubbandSet<double> d = dwt2(ll_, filter_);
    upsampled_dwt_.lh = upsample_smooth(d.lh);
    upsampled_dwt_.hl = upsample_smooth(d.hl);
    upsampled_dwt_.hh = upsample_smooth(d.hh);
    const SubbandSet<double> s = swt2(ll_, filter_);
    swt_.lh = s.lh;
    swt_.hl = s.hl;
    swt_.hh = s.hh;
}

Planed DetailEstimator::estimate(const FusionWeights& weights) const {
    weights.validate();
    SubbandSet<double> s;
    s.mode = SubbandMode::DWT;
    s.ll = ll_;
    s.lh = weights[0] * upsampled_dwt_.lh + weights[3] * swt_.lh;
    s.hl = weights[1] * upsampled_dwt_.hl + weights[4] * swt_.hl;
    s.hh = weights[2] * upsampled_dwt_.hh + weights[5] * swt_.hh;
    return idwt2(s, filter_);
}

Planed reconstruct_estimate(const Planed& ll, const FusionWeights& weights,
                            const WaveletFilter& filter) {
    return DetailEstimator(ll, filter).estimate(weights);
}

ModelResult model_weights(const Planed& channel, const WaveletFilter& filter,
                          const PsoConfig& pso_config) {
    require(channel.rows() >= 16 && channel.cols() >= 16, "model_weights: channel below 16x16");
    detail::check_even(channel.rows(), channel.cols(), "model_weights");
    require(all_finite(channel), "model_weights: non-finite samples");

    // Dimensions of 2 mod 4 give an odd-sized LL that cannot be decomposed a
    // second time; mirror-pad it and crop the estimate back before scoring.
    const Planed ll_raw = dwt2(channel, filter).ll;
    const Planed ll = pad_to_even(ll_raw);
    const bool cropped = ll.rows() != ll_raw.rows() || ll.cols() != ll_raw.cols();
    const DetailEstimator estimator(ll, filter);
    const auto fitness = [&](const Eigen::ArrayXd& w) {
        Planed est = estimator.estimate(FusionWeights(w));
        if (cropped) est = est.topLeftCorner(channel.rows(), channel.cols()).eval();
        return std::min(psnr(channel, est, 1.0), kDegenerateFitnessDb);
    };

    const std::vector<Eigen::ArrayXd> anchors = {Eigen::ArrayXd::Zero(6), Eigen::ArrayXd::Ones(6)};
    const PsoResult r = optimize(fitness, pso_config, anchors);

    ModelResult out;
    out.weights = FusionWeights(r.best_position);
    out.fitness_db = r.best_fitness;
    out.iterations = r.iterations_run;
    out.wavelet = filter.name;
    out.degenerate = r.best_fitness >= kDegenerateFitnessDb;
    return out;
}

Planed generate_2x(const Planed& image, const FusionWeights& weights,
                   const WaveletFilter& filter) {
    detail::check_even(image.rows(), image.cols(), "generate_2x");
    // The input plays the LL of the unknown double-size image; an orthonormal
    // analysis has DC gain 2, so the LL fed to the synthesis is 2*image.
    return clipped01(DetailEstimator((2.0 * image).eval(), filter).estimate(weights));
}

namespace {

Planed upscale_channel(const Planed& padded, const FusionWeights& weights,
                       const WaveletFilter& filter, const ScaleFactor& sf) {
    Planed cur = generate_2x(padded, weights, filter);
    for (int l = 1; l < sf.dyadic_levels; ++l) cur = generate_2x(cur, weights, filter);
    const double residual = sf.alpha / std::pow(2.0, sf.dyadic_levels);
    if (residual < 1.0 - 1e-12) cur = bicubic_resize(cur, residual);
    return cur;
}

InterpolateResult interpolate_impl(const Image& image, const ScaleFactor& sf,
                                   const WaveletFilter& filter, const PsoConfig& pso_config,
                                   const InterpolateOptions& options,
                                   const std::vector<FusionWeights>* fixed_weights) {
    image.validate();
    require(sf.alpha > 1.0, "interpolate: scale factor must be > 1");
    require(sf.dyadic_levels >= 1 && std::pow(2.0, sf.dyadic_levels) >= sf.alpha - 1e-12 &&
                std::pow(2.0, sf.dyadic_levels - 1) < sf.alpha + 1e-12,
            "interpolate: dyadic level count inconsistent with alpha");
    require(image.width() >= 16 && image.height() >= 16, "interpolate: image below 16x16");
    if (fixed_weights) {
        require(fixed_weights->size() == 1 ||
                    static_cast<int>(fixed_weights->size()) == image.channels(),
                "interpolate: need one weight set, or one per channel");
    }

    const Eigen::Index out_rows = rounded(sf.alpha * static_cast<double>(image.height()));
    const Eigen::Index out_cols = rounded(sf.alpha * static_cast<double>(image.width()));

    InterpolateResult result;
    std::vector<Planed> out_planes;
    int ch = 0;
    for (const Planed& channel : split_channels(image)) {
        const Planed padded = pad_to_even(channel);
        Planed cur;
        if (fixed_weights) {
            const auto& w =
                fixed_weights->size() == 1 ? (*fixed_weights)[0]
                                           : (*fixed_weights)[static_cast<size_t>(ch)];
            cur = upscale_channel(padded, w, filter, sf);
        } else if (!options.remodel_per_level) {
            const ModelResult m = model_weights(padded, filter, pso_config);
            result.channel_models.push_back(m);
            cur = upscale_channel(padded, m.weights, filter, sf);
        } else {
            ModelResult m = model_weights(padded, filter, pso_config);
            result.channel_models.push_back(m);
            cur = generate_2x(padded, m.weights, filter);
            for (int l = 1; l < sf.dyadic_levels; ++l) {
                m = model_weights(cur, filter, pso_config);
                cur = generate_2x(cur, m.weights, filter);
            }
            const double residual = sf.alpha / std::pow(2.0, sf.dyadic_levels);
            if (residual < 1.0 - 1e-12) cur = bicubic_resize(cur, residual);
        }
        out_planes.push_back(clipped01(Planed(cur.topLeftCorner(out_rows, out_cols))));
        ++ch;
    }
    result.image = merge_channels(std::move(out_planes));
    return result;
}

}  // namespace

InterpolateResult interpolate(const Image& image, const ScaleFactor& alpha,
                              const WaveletFilter& filter, const PsoConfig& pso_config,
                              const InterpolateOptions& options) {
    return interpolate_impl(image, alpha, filter, pso_config, options, nullptr);
}

Image interpolate_with_weights(const Image& image, const ScaleFactor& alpha,
                               const WaveletFilter& filter,
                               const std::vector<FusionWeights>& weights_per_channel) {
    PsoConfig unused;
    return interpolate_impl(image, alpha, filter, unused, {}, &weights_per_channel).image;
}

}  // namespace psi
