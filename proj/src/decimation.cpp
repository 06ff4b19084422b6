#include "psi/decimation.hpp"

#include <cmath>

namespace psi {

namespace {

// Catmull-Rom kernel, a = -0.5.
double cubic_weight(double t) {
    t = std::abs(t);
    if (t < 1.0) return ((1.5 * t - 2.5) * t) * t + 1.0;
    if (t < 2.0) return (((-0.5 * t + 2.5) * t) - 4.0) * t + 2.0;
    return 0.0;
}

// One resampled axis pass along columns; rows pass via transposes.
Planed bicubic_cols(const Planed& p, Eigen::Index out_rows) {
    const Eigen::Index rows = p.rows(), cols = p.cols();
    Planed out(out_rows, cols);
    const double ratio = static_cast<double>(rows) / static_cast<double>(out_rows);
    for (Eigen::Index k = 0; k < out_rows; ++k) {
        const double src = (k + 0.5) * ratio - 0.5;
        const auto base = static_cast<Eigen::Index>(std::floor(src));
        double w[4];
        Eigen::Index idx[4];
        double wsum = 0.0;
        for (int t = 0; t < 4; ++t) {
            const Eigen::Index i = base - 1 + t;
            w[t] = cubic_weight(src - static_cast<double>(i));
            wsum += w[t];
            idx[t] = reflect_index(i, rows);
        }
        for (int t = 0; t < 4; ++t) w[t] /= wsum;
        for (Eigen::Index j = 0; j < cols; ++j) {
            out(k, j) = w[0] * p(idx[0], j) + w[1] * p(idx[1], j) + w[2] * p(idx[2], j) +
                        w[3] * p(idx[3], j);
        }
    }
    return out;
}

Planed subsample(const Planed& p, int factor) {
    Planed out(p.rows() / factor, p.cols() / factor);
    for (Eigen::Index i = 0; i < out.rows(); ++i)
        for (Eigen::Index j = 0; j < out.cols(); ++j) out(i, j) = p(i * factor, j * factor);
    return out;
}

Planed wavelet_ll_reduce(const Planed& p, const WaveletFilter& f, int levels) {
    Planed cur = p;
    for (int l = 0; l < levels; ++l) cur = (0.5 * dwt2(cur, f).ll).eval();
    return cur;
}

Planed gaussian_blur_cols(const Planed& p, const Eigen::ArrayXd& k) {
    const Eigen::Index rows = p.rows(), cols = p.cols();
    const int half = static_cast<int>(k.size()) / 2;
    Planed out(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) {
            double s = 0.0;
            for (int m = -half; m <= half; ++m) s += k[m + half] * p(reflect_index(i + m, rows), j);
            out(i, j) = s;
        }
    return out;
}

}  // namespace

const char* to_string(DecimationScheme s) {
    switch (s) {
        case DecimationScheme::Bicubic: return "bicubic";
        case DecimationScheme::DaubechiesApprox: return "daubechies";
        case DecimationScheme::DMeyerApprox: return "dmeyer";
        case DecimationScheme::GaussianDown: return "gaussian";
        case DecimationScheme::SubSample: return "subsample";
    }
    return "?";
}

DecimationScheme decimation_scheme_from_string(const std::string& name) {
    if (name == "bicubic") return DecimationScheme::Bicubic;
    if (name == "daubechies") return DecimationScheme::DaubechiesApprox;
    if (name == "dmeyer") return DecimationScheme::DMeyerApprox;
    if (name == "gaussian") return DecimationScheme::GaussianDown;
    if (name == "subsample") return DecimationScheme::SubSample;
    throw std::invalid_argument(
        "unknown decimation scheme '" + name +
        "' (expected bicubic|daubechies|dmeyer|gaussian|subsample)");
}

Planed bicubic_resize(const Planed& p, double scale) {
    require(scale > 0.0 && std::isfinite(scale), "bicubic_resize: scale must be positive");
    const auto out_rows = static_cast<Eigen::Index>(std::llround(scale * p.rows()));
    const auto out_cols = static_cast<Eigen::Index>(std::llround(scale * p.cols()));
    require(out_rows >= 1 && out_cols >= 1, "bicubic_resize: output would be empty");
    Planed tmp = bicubic_cols(p, out_rows);
    Planed tmpt = tmp.transpose();
    return bicubic_cols(tmpt, out_cols).transpose();
}

Image bicubic_resize(const Image& img, double scale) {
    img.validate();
    Image out;
    for (const auto& p : img.planes) out.planes.push_back(bicubic_resize(p, scale));
    return out;
}

Planed gaussian_blur7(const Planed& p) {
    static const Eigen::ArrayXd kernel = [] {
        Eigen::ArrayXd g(7);
        for (int i = 0; i < 7; ++i) {
            const double t = i - 3;
            g[i] = std::exp(-0.5 * t * t);
        }
        return (g / g.sum()).eval();
    }();
    Planed tmp = gaussian_blur_cols(p, kernel);
    Planed tmpt = tmp.transpose();
    return gaussian_blur_cols(tmpt, kernel).transpose();
}

Image decimate(const Image& img, DecimationScheme scheme, int factor) {
    img.validate();
    require(factor == 2 || factor == 4, "decimate: factor must be 2 or 4");
    require(img.width() % factor == 0 && img.height() % factor == 0,
            "decimate: dimensions must be divisible by the factor");
    const int levels = factor == 2 ? 1 : 2;
    Image out;
    for (const auto& p : img.planes) {
        switch (scheme) {
            case DecimationScheme::Bicubic:
                out.planes.push_back(bicubic_resize(p, 1.0 / factor));
                break;
            case DecimationScheme::DaubechiesApprox:
                out.planes.push_back(wavelet_ll_reduce(p, make_filter("db2"), levels));
                break;
            case DecimationScheme::DMeyerApprox:
                out.planes.push_back(wavelet_ll_reduce(p, make_filter("dmey"), levels));
                break;
            case DecimationScheme::GaussianDown:
                out.planes.push_back(subsample(gaussian_blur7(p), factor));
                break;
            case DecimationScheme::SubSample:
                out.planes.push_back(subsample(p, factor));
                break;
        }
    }
    return out;
}

}  // namespace psi
