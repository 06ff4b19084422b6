#pragma once

#include "psi/plane.hpp"

#include <Eigen/Core>

#include <string>

namespace psi {

// Orthonormal two-channel filter bank. dec_lo sums to sqrt(2), dec_hi to 0,
// dec_hi[m] = (-1)^m dec_lo[M-1-m], rec_* are the time-reversed dec_* taps.
//
// `offset` centers the analysis correlation window: coefficient k of a
// decimated pass gathers x[(2k + m - offset) mod L]. Keeping one offset for
// both filters keeps the periodic filter-bank matrix orthogonal while placing
// subband content over the samples that produced it, which is what lets the
// fusion stage add DWT- and SWT-derived planes element-wise.
struct WaveletFilter {
    std::string name;
    Eigen::ArrayXd dec_lo, dec_hi, rec_lo, rec_hi;
    int offset = 0;

    int length() const { return static_cast<int>(dec_lo.size()); }
};

// Supported names: "db2" (4 taps), "dmey" (102-tap discrete Meyer approximation).
WaveletFilter make_filter(const std::string& name);

enum class SubbandMode { DWT, SWT };

template <typename Scalar>
struct SubbandSet {
    Plane<Scalar> ll, lh, hl, hh;  // lh: detail along x, hl: detail along y
    SubbandMode mode = SubbandMode::DWT;
};

namespace detail {

// One decimated analysis pass down the columns of `p` (length must be even).
// Output k of column j: sum_m f[m] * p((2k + m - offset) mod rows, j).
template <typename Scalar>
void analyze_cols(const Plane<Scalar>& p, const Eigen::ArrayXd& lo, const Eigen::ArrayXd& hi,
                  int offset, Plane<Scalar>& out_lo, Plane<Scalar>& out_hi) {
    const Eigen::Index rows = p.rows(), cols = p.cols();
    const int taps = static_cast<int>(lo.size());
    const Eigen::Index half = rows / 2;
    out_lo.resize(half, cols);
    out_hi.resize(half, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        const Scalar* col = &p(0, j);
        for (Eigen::Index k = 0; k < half; ++k) {
            Eigen::Index r = (2 * k - offset) % rows;
            if (r < 0) r += rows;
            Scalar sa = 0, sd = 0;
            for (int m = 0; m < taps; ++m) {
                const Scalar v = col[r];
                sa += static_cast<Scalar>(lo[m]) * v;
                sd += static_cast<Scalar>(hi[m]) * v;
                if (++r == rows) r = 0;
            }
            out_lo(k, j) = sa;
            out_hi(k, j) = sd;
        }
    }
}

// Undecimated analysis pass down the columns.
template <typename Scalar>
void analyze_cols_undecimated(const Plane<Scalar>& p, const Eigen::ArrayXd& lo,
                              const Eigen::ArrayXd& hi, int offset, Plane<Scalar>& out_lo,
                              Plane<Scalar>& out_hi) {
    const Eigen::Index rows = p.rows(), cols = p.cols();
    const int taps = static_cast<int>(lo.size());
    out_lo.resize(rows, cols);
    out_hi.resize(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        const Scalar* col = &p(0, j);
        for (Eigen::Index n = 0; n < rows; ++n) {
            Eigen::Index r = (n - offset) % rows;
            if (r < 0) r += rows;
            Scalar sa = 0, sd = 0;
            for (int m = 0; m < taps; ++m) {
                const Scalar v = col[r];
                sa += static_cast<Scalar>(lo[m]) * v;
                sd += static_cast<Scalar>(hi[m]) * v;
                if (++r == rows) r = 0;
            }
            out_lo(n, j) = sa;
            out_hi(n, j) = sd;
        }
    }
}

// Exact adjoint of analyze_cols: scatters each coefficient pair back through
// the same window, doubling the column count of rows.
template <typename Scalar>
Plane<Scalar> synthesize_cols(const Plane<Scalar>& a, const Plane<Scalar>& d,
                              const Eigen::ArrayXd& lo, const Eigen::ArrayXd& hi, int offset) {
    const Eigen::Index half = a.rows(), cols = a.cols();
    const Eigen::Index rows = 2 * half;
    const int taps = static_cast<int>(lo.size());
    Plane<Scalar> out = Plane<Scalar>::Zero(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        Scalar* col = &out(0, j);
        for (Eigen::Index k = 0; k < half; ++k) {
            Eigen::Index r = (2 * k - offset) % rows;
            if (r < 0) r += rows;
            const Scalar va = a(k, j), vd = d(k, j);
            for (int m = 0; m < taps; ++m) {
                col[r] += static_cast<Scalar>(lo[m]) * va + static_cast<Scalar>(hi[m]) * vd;
                if (++r == rows) r = 0;
            }
        }
    }
    return out;
}

inline void check_even(Eigen::Index rows, Eigen::Index cols, const char* op) {
    require(rows > 0 && cols > 0, std::string(op) + ": empty plane");
    require(rows % 2 == 0 && cols % 2 == 0,
            std::string(op) + ": dimensions must be even (" + std::to_string(rows) + "x" +
                std::to_string(cols) + "); pad the input, e.g. with pad_to_even()");
}

}  // namespace detail

// Single-level separable 2D DWT with periodic extension. Subband planes are
// half-size per dimension; input dimensions must be even.
template <typename Scalar>
SubbandSet<Scalar> dwt2(const Plane<Scalar>& p, const WaveletFilter& f) {
    detail::check_even(p.rows(), p.cols(), "dwt2");
    // Columns first (contiguous), then rows via transposed passes.
    Plane<Scalar> lo, hi;
    detail::analyze_cols(p, f.dec_lo, f.dec_hi, f.offset, lo, hi);
    Plane<Scalar> lot = lo.transpose(), hit = hi.transpose();
    SubbandSet<Scalar> s;
    s.mode = SubbandMode::DWT;
    Plane<Scalar> a, d;
    detail::analyze_cols(lot, f.dec_lo, f.dec_hi, f.offset, a, d);
    s.ll = a.transpose();
    s.lh = d.transpose();
    detail::analyze_cols(hit, f.dec_lo, f.dec_hi, f.offset, a, d);
    s.hl = a.transpose();
    s.hh = d.transpose();
    return s;
}

// Exact inverse of dwt2 under periodic extension; returns a plane of doubled
// dimensions.
template <typename Scalar>
Plane<Scalar> idwt2(const SubbandSet<Scalar>& s, const WaveletFilter& f) {
    require(s.mode == SubbandMode::DWT, "idwt2: subbands must be DWT-mode");
    require(s.ll.rows() == s.lh.rows() && s.ll.cols() == s.lh.cols() &&
                s.ll.rows() == s.hl.rows() && s.ll.cols() == s.hl.cols() &&
                s.ll.rows() == s.hh.rows() && s.ll.cols() == s.hh.cols(),
            "idwt2: subband planes differ in size");
    require(s.ll.rows() > 0 && s.ll.cols() > 0, "idwt2: empty subbands");
    Plane<Scalar> llt = s.ll.transpose(), lht = s.lh.transpose();
    Plane<Scalar> hlt = s.hl.transpose(), hht = s.hh.transpose();
    Plane<Scalar> lo = detail::synthesize_cols(llt, lht, f.dec_lo, f.dec_hi, f.offset).transpose();
    Plane<Scalar> hi = detail::synthesize_cols(hlt, hht, f.dec_lo, f.dec_hi, f.offset).transpose();
    return detail::synthesize_cols(lo, hi, f.dec_lo, f.dec_hi, f.offset);
}

// Single-level stationary (undecimated) 2D wavelet transform; subbands keep
// the input size. Decimating swt2 output at even indices reproduces dwt2.
template <typename Scalar>
SubbandSet<Scalar> swt2(const Plane<Scalar>& p, const WaveletFilter& f) {
    detail::check_even(p.rows(), p.cols(), "swt2");
    Plane<Scalar> lo, hi;
    detail::analyze_cols_undecimated(p, f.dec_lo, f.dec_hi, f.offset, lo, hi);
    Plane<Scalar> lot = lo.transpose(), hit = hi.transpose();
    SubbandSet<Scalar> s;
    s.mode = SubbandMode::SWT;
    Plane<Scalar> a, d;
    detail::analyze_cols_undecimated(lot, f.dec_lo, f.dec_hi, f.offset, a, d);
    s.ll = a.transpose();
    s.lh = d.transpose();
    detail::analyze_cols_undecimated(hit, f.dec_lo, f.dec_hi, f.offset, a, d);
    s.hl = a.transpose();
    s.hh = d.transpose();
    return s;
}

}  // namespace psi
