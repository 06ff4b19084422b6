#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace psi {

// A plane is a dense 2D array of samples indexed (row, col) = (y, x).
template <typename Scalar>
using Plane = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Planed = Plane<double>;

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

template <typename Scalar>
bool all_finite(const Plane<Scalar>& p) {
    return p.isFinite().all();
}

template <typename Scalar>
Plane<Scalar> clipped01(const Plane<Scalar>& p) {
    return p.max(Scalar(0)).min(Scalar(1));
}

// Symmetric (edge-mirroring) index into [0, n): ..., 1, 0 | 0, 1, ..., n-1 | n-1, n-2, ...
inline Eigen::Index reflect_index(Eigen::Index i, Eigen::Index n) {
    while (i < 0 || i >= n) {
        if (i < 0) i = -1 - i;
        if (i >= n) i = 2 * n - 1 - i;
    }
    return i;
}

// Pads with mirrored rows/columns so both dimensions become even.
template <typename Scalar>
Plane<Scalar> pad_to_even(const Plane<Scalar>& p) {
    const Eigen::Index r = p.rows() + (p.rows() % 2);
    const Eigen::Index c = p.cols() + (p.cols() % 2);
    if (r == p.rows() && c == p.cols()) return p;
    Plane<Scalar> out(r, c);
    out.topLeftCorner(p.rows(), p.cols()) = p;
    if (r != p.rows()) out.row(r - 1).head(p.cols()) = p.row(p.rows() - 1);
    if (c != p.cols()) out.col(c - 1).head(p.rows()) = p.col(p.cols() - 1);
    if (r != p.rows() && c != p.cols()) out(r - 1, c - 1) = p(p.rows() - 1, p.cols() - 1);
    return out;
}

// Runs fn(i) for i in [0, n). Results must not depend on the thread count;
// callers only pass pure per-index work.
inline void parallel_for_index(int n, const std::function<void(int)>& fn, int threads) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    const int workers = std::min(threads, n);
    pool.reserve(static_cast<size_t>(workers));
    std::exception_ptr err;
    std::mutex err_mu;
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(err_mu);
                    if (!err) err = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace psi
