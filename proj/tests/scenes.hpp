#pragma once

// Deterministic synthetic test scenes. Content leans on thin strokes and
// piecewise-constant shapes under a sub-pixel point-spread blur: structure
// that is close to scale-invariant, the regime where across-scale detail
// estimation has signal. Heavy blur or smooth blob fields carry an absolute
// scale marker and transfer negatively (measured), so none of that here.

#include "psi/image.hpp"

#include <cmath>
#include <random>

namespace scenes {

using psi::Planed;

inline Planed separable_gauss_blur(const Planed& p, double sigma) {
    if (sigma <= 0.0) return p;
    const int half = static_cast<int>(std::ceil(3 * sigma));
    Eigen::ArrayXd k(2 * half + 1);
    for (int i = -half; i <= half; ++i) k[i + half] = std::exp(-0.5 * i * i / (sigma * sigma));
    k /= k.sum();
    const Eigen::Index rows = p.rows(), cols = p.cols();
    Planed tmp(rows, cols), out(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) {
            double s = 0;
            for (int m = -half; m <= half; ++m)
                s += k[m + half] * p(psi::reflect_index(i + m, rows), j);
            tmp(i, j) = s;
        }
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) {
            double s = 0;
            for (int m = -half; m <= half; ++m)
                s += k[m + half] * tmp(i, psi::reflect_index(j + m, cols));
            out(i, j) = s;
        }
    return out;
}

namespace detail {

// Shaded background with rotated rectangles and discs; shape counts scale
// with area and shape sizes shrink with n so edge density stays constant.
inline Planed shape_field(Eigen::Index n, unsigned seed, double density) {
    std::mt19937_64 eng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    Planed img(n, n);
    for (Eigen::Index y = 0; y < n; ++y)
        for (Eigen::Index x = 0; x < n; ++x)
            img(y, x) = 0.35 + 0.3 * x / static_cast<double>(n) + 0.15 * y / static_cast<double>(n);
    const double area = static_cast<double>(n) * static_cast<double>(n) / (128.0 * 128.0);
    const double rel = 128.0 / static_cast<double>(n);
    const int rects = std::max(2, static_cast<int>(10.0 * density * area));
    const int discs = std::max(1, static_cast<int>(6.0 * density * area));
    for (int s = 0; s < rects; ++s) {
        const double cx = 0.05 + 0.9 * uni(eng), cy = 0.05 + 0.9 * uni(eng);
        const double w = (0.08 + 0.32 * uni(eng)) * rel, h = (0.08 + 0.32 * uni(eng)) * rel;
        const double a = -0.3 + 0.65 * uni(eng);
        const double ang = 3.14159265358979 * uni(eng);
        const double ca = std::cos(ang), sa = std::sin(ang);
        for (Eigen::Index y = 0; y < n; ++y)
            for (Eigen::Index x = 0; x < n; ++x) {
                const double dx = x / static_cast<double>(n) - cx;
                const double dy = y / static_cast<double>(n) - cy;
                if (std::abs(dx * ca + dy * sa) < w / 2 && std::abs(-dx * sa + dy * ca) < h / 2)
                    img(y, x) += a;
            }
    }
    for (int s = 0; s < discs; ++s) {
        const double cx = 0.1 + 0.8 * uni(eng), cy = 0.1 + 0.8 * uni(eng);
        const double r = (0.03 + 0.12 * uni(eng)) * rel;
        const double a = -0.3 + 0.65 * uni(eng);
        for (Eigen::Index y = 0; y < n; ++y)
            for (Eigen::Index x = 0; x < n; ++x) {
                const double dx = x / static_cast<double>(n) - cx;
                const double dy = y / static_cast<double>(n) - cy;
                if (dx * dx + dy * dy < r * r) img(y, x) += a;
            }
    }
    return img;
}

// Gaussian-profile strokes, 0.5..1.5 px thick regardless of n.
inline Planed add_strokes(Planed img, unsigned seed, int count) {
    const Eigen::Index n = img.rows();
    std::mt19937_64 eng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int s = 0; s < count; ++s) {
        const double x0 = uni(eng), y0 = uni(eng);
        const double ang = 3.14159265358979 * uni(eng);
        const double sa = std::sin(ang), ca = std::cos(ang);
        const double t = (0.5 + uni(eng)) / static_cast<double>(n);
        const double depth = (uni(eng) < 0.5 ? -1.0 : 1.0) * (0.3 + 0.3 * uni(eng));
        for (Eigen::Index y = 0; y < n; ++y)
            for (Eigen::Index x = 0; x < n; ++x) {
                const double d =
                    (x / static_cast<double>(n) - x0) * sa - (y / static_cast<double>(n) - y0) * ca;
                img(y, x) -= depth * std::exp(-0.5 * d * d / (t * t));
            }
    }
    return img;
}

inline Planed finish(const Planed& img, double blur_px) {
    return psi::clipped01(Planed(separable_gauss_blur(img, blur_px))).max(0.03).min(0.97);
}

inline int scaled_count(double per_128, Eigen::Index n) {
    const double area = static_cast<double>(n) * static_cast<double>(n) / (128.0 * 128.0);
    return std::max(4, static_cast<int>(per_128 * area));
}

}  // namespace detail

// Shapes with a light stroke overlay.
inline Planed cartoon(Eigen::Index n, unsigned seed) {
    return detail::finish(
        detail::add_strokes(detail::shape_field(n, seed, 1.0), seed + 7919, detail::scaled_count(10, n)),
        0.6);
}

// Denser shape field, few strokes.
inline Planed dense_shapes(Eigen::Index n, unsigned seed) {
    return detail::finish(
        detail::add_strokes(detail::shape_field(n, seed, 2.0), seed + 7919, detail::scaled_count(4, n)),
        0.6);
}

// Line drawing over a shaded background.
inline Planed strokes(Eigen::Index n, unsigned seed) {
    Planed img(n, n);
    for (Eigen::Index y = 0; y < n; ++y)
        for (Eigen::Index x = 0; x < n; ++x) img(y, x) = 0.85 - 0.2 * y / static_cast<double>(n);
    return detail::finish(detail::add_strokes(std::move(img), seed, detail::scaled_count(18, n)),
                          0.7);
}

// The bundled smoke/speed suite: index 0..9 cycles the three families.
inline Planed scene(int index, Eigen::Index n) {
    switch (index % 3) {
        case 0: return cartoon(n, 100u + static_cast<unsigned>(index));
        case 1: return dense_shapes(n, 200u + static_cast<unsigned>(index));
        default: return strokes(n, 300u + static_cast<unsigned>(index));
    }
}

inline psi::Image scene_image(int index, Eigen::Index n) { return psi::Image(scene(index, n)); }

}  // namespace scenes
