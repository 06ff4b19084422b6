#pragma once

#include "psi/plane.hpp"

#include <Eigen/Core>

#include <array>
#include <cmath>

namespace psi {

// Six across-scale fusion weights in [0,1]:
// [0..2] scale the upsampled DWT detail planes (LH, HL, HH),
// [3..5] scale the same-resolution SWT detail planes (LH, HL, HH).
struct FusionWeights {
    Eigen::Array<double, 6, 1> w = Eigen::Array<double, 6, 1>::Zero();

    FusionWeights() = default;
    explicit FusionWeights(const Eigen::Array<double, 6, 1>& v) : w(v) {}
    static FusionWeights zeros() { return FusionWeights(); }
    static FusionWeights ones() { return FusionWeights(Eigen::Array<double, 6, 1>::Ones()); }

    double operator[](int i) const { return w[i]; }
    double& operator[](int i) { return w[i]; }

    void validate() const {
        require(w.isFinite().all() && (w >= 0.0).all() && (w <= 1.0).all(),
                "fusion weights must lie in [0,1]");
    }
};

template <typename Scalar>
struct DetailTriple {
    Plane<Scalar> lh, hl, hh;
};

namespace detail {

// 7-tap Gaussian (sigma 1) split into the two upsampling phases, each phase
// normalized to unit sum so zero-insertion upsampling maps constants to
// constants exactly (overall DC gain 1 in place of the nominal x2 per axis).
struct UpsampleKernel {
    std::array<double, 3> even;  // source offsets -1, 0, +1 against output 2n
    std::array<double, 4> odd;   // source offsets -1, 0, +1, +2 against output 2n+1

    UpsampleKernel() {
        std::array<double, 7> g;
        for (int i = 0; i < 7; ++i) {
            const double t = i - 3;
            g[static_cast<size_t>(i)] = std::exp(-0.5 * t * t);
        }
        const double se = g[1] + g[3] + g[5];
        even = {g[1] / se, g[3] / se, g[5] / se};
        const double so = g[0] + g[2] + g[4] + g[6];
        odd = {g[0] / so, g[2] / so, g[4] / so, g[6] / so};
    }
};

template <typename Scalar>
void upsample_cols(const Plane<Scalar>& p, Plane<Scalar>& out) {
    static const UpsampleKernel k;
    const Eigen::Index rows = p.rows(), cols = p.cols();
    out.resize(2 * rows, cols);
    auto wrap = [rows](Eigen::Index i) {
        if (i < 0) i += rows;
        if (i >= rows) i -= rows;
        return i;
    };
    for (Eigen::Index j = 0; j < cols; ++j) {
        const Scalar* src = &p(0, j);
        Scalar* dst = &out(0, j);
        for (Eigen::Index n = 0; n < rows; ++n) {
            const Scalar a = src[wrap(n - 1)], b = src[n], c = src[wrap(n + 1)],
                         d = src[wrap(n + 2)];
            dst[2 * n] = static_cast<Scalar>(k.even[0]) * a + static_cast<Scalar>(k.even[1]) * b +
                         static_cast<Scalar>(k.even[2]) * c;
            dst[2 * n + 1] = static_cast<Scalar>(k.odd[0]) * a +
                             static_cast<Scalar>(k.odd[1]) * b +
                             static_cast<Scalar>(k.odd[2]) * c + static_cast<Scalar>(k.odd[3]) * d;
        }
    }
}

}  // namespace detail

// Doubles each dimension: zero-insertion upsampling followed by zero-phase
// Gaussian smoothing with periodic boundaries, calibrated so constants map to
// constants.
template <typename Scalar>
Plane<Scalar> upsample_smooth(const Plane<Scalar>& p) {
    require(p.rows() > 0 && p.cols() > 0, "upsample_smooth: empty plane");
    require(all_finite(p), "upsample_smooth: non-finite input");
    Plane<Scalar> tmp, out;
    detail::upsample_cols(p, tmp);
    Plane<Scalar> tmpt = tmp.transpose();
    detail::upsample_cols(tmpt, out);
    return out.transpose();
}

// Across-scale addition: per band, w_dwt * upsample_smooth(dwt band) +
// w_swt * swt band. The DWT planes must be exactly half the SWT plane size.
template <typename Scalar>
DetailTriple<Scalar> fuse_details(const DetailTriple<Scalar>& dwt_details,
                                  const DetailTriple<Scalar>& swt_details,
                                  const FusionWeights& weights) {
    const auto& s = swt_details;
    require(s.lh.rows() == s.hl.rows() && s.lh.rows() == s.hh.rows() &&
                s.lh.cols() == s.hl.cols() && s.lh.cols() == s.hh.cols(),
            "fuse_details: swt planes differ in size");
    const auto& d = dwt_details;
    require(d.lh.rows() == d.hl.rows() && d.lh.rows() == d.hh.rows() &&
                d.lh.cols() == d.hl.cols() && d.lh.cols() == d.hh.cols(),
            "fuse_details: dwt planes differ in size");
    require(2 * d.lh.rows() == s.lh.rows() && 2 * d.lh.cols() == s.lh.cols(),
            "fuse_details: dwt planes must be half the swt plane size");
    weights.validate();

    DetailTriple<Scalar> out;
    out.lh = static_cast<Scalar>(weights[0]) * upsample_smooth(d.lh) +
             static_cast<Scalar>(weights[3]) * s.lh;
    out.hl = static_cast<Scalar>(weights[1]) * upsample_smooth(d.hl) +
             static_cast<Scalar>(weights[4]) * s.hl;
    out.hh = static_cast<Scalar>(weights[2]) * upsample_smooth(d.hh) +
             static_cast<Scalar>(weights[5]) * s.hh;
    return out;
}

}  // namespace psi
