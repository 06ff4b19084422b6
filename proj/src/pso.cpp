#include "psi/pso.hpp"

#include "psi/plane.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace psi {

void PsoConfig::validate() const {
    require(population >= 2, "pso: population must be >= 2");
    require(dims >= 1, "pso: dims must be >= 1");
    require(min_iters_before_early_stop >= 1 && max_iters >= min_iters_before_early_stop,
            "pso: need max_iters >= min_iters_before_early_stop >= 1");
    require(pos_min < pos_max, "pso: position bounds not well-ordered");
    require(vel_init_min <= vel_init_max, "pso: velocity init bounds not well-ordered");
    require(vel_clamp_min < vel_clamp_max, "pso: velocity clamp bounds not well-ordered");
    require(std::isfinite(stall_tolerance) && stall_tolerance >= 0.0,
            "pso: stall tolerance must be finite and non-negative");
}

namespace {

Swarm seed_with_engine(const PsoConfig& cfg, const std::vector<Eigen::ArrayXd>& anchors,
                       std::mt19937_64& eng) {
    cfg.validate();
    require(static_cast<int>(anchors.size()) <= cfg.population,
            "pso: more anchors than particles");
    std::uniform_real_distribution<double> pos_dist(cfg.pos_min, cfg.pos_max);
    std::uniform_real_distribution<double> vel_dist(cfg.vel_init_min, cfg.vel_init_max);

    Swarm s;
    s.positions.resize(static_cast<size_t>(cfg.population));
    s.velocities.resize(static_cast<size_t>(cfg.population));
    s.personal_best.resize(static_cast<size_t>(cfg.population));
    s.personal_best_fitness.assign(static_cast<size_t>(cfg.population),
                                   -std::numeric_limits<double>::infinity());
    for (int i = 0; i < cfg.population; ++i) {
        Eigen::ArrayXd x(cfg.dims);
        if (i < static_cast<int>(anchors.size())) {
            const auto& a = anchors[static_cast<size_t>(i)];
            require(a.size() == cfg.dims, "pso: anchor dimensionality mismatch");
            require((a >= cfg.pos_min).all() && (a <= cfg.pos_max).all(),
                    "pso: anchor outside position bounds");
            x = a;
        } else {
            for (int d = 0; d < cfg.dims; ++d) x[d] = pos_dist(eng);
        }
        Eigen::ArrayXd v(cfg.dims);
        for (int d = 0; d < cfg.dims; ++d) v[d] = vel_dist(eng);
        s.positions[static_cast<size_t>(i)] = x;
        s.velocities[static_cast<size_t>(i)] = std::move(v);
        s.personal_best[static_cast<size_t>(i)] = std::move(x);
    }
    s.global_best = s.positions[0];
    s.global_best_fitness = -std::numeric_limits<double>::infinity();
    s.iteration = 0;
    return s;
}

}  // namespace

Swarm seed_particles(const PsoConfig& config, const std::vector<Eigen::ArrayXd>& anchors) {
    std::mt19937_64 eng(config.seed);
    return seed_with_engine(config, anchors, eng);
}

PsoResult optimize(const FitnessFn& fitness, const PsoConfig& cfg,
                   const std::vector<Eigen::ArrayXd>& anchors) {
    std::mt19937_64 eng(cfg.seed);
    Swarm s = seed_with_engine(cfg, anchors, eng);
    const int n = cfg.population;
    std::vector<double> fit(static_cast<size_t>(n));
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    double prev_best = 0.0;
    bool have_prev = false;
    int iter = 0;
    while (iter < cfg.max_iters) {
        ++iter;
        // Evaluation phase: pure per-particle work, safe to parallelize. All
        // RNG draws happen in the sequential update phase below, so results do
        // not depend on the thread count.
        parallel_for_index(
            n, [&](int i) { fit[static_cast<size_t>(i)] = fitness(s.positions[static_cast<size_t>(i)]); },
            cfg.threads);
        for (int i = 0; i < n; ++i) {
            if (!std::isfinite(fit[static_cast<size_t>(i)])) {
                std::ostringstream os;
                os << "pso: fitness returned non-finite value " << fit[static_cast<size_t>(i)]
                   << " at position [" << s.positions[static_cast<size_t>(i)].transpose() << "]";
                throw std::domain_error(os.str());
            }
        }
        double iter_best = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i) {
            const auto ui = static_cast<size_t>(i);
            iter_best = std::max(iter_best, fit[ui]);
            if (fit[ui] > s.personal_best_fitness[ui]) {
                s.personal_best_fitness[ui] = fit[ui];
                s.personal_best[ui] = s.positions[ui];
            }
            if (fit[ui] > s.global_best_fitness) {
                s.global_best_fitness = fit[ui];
                s.global_best = s.positions[ui];
            }
        }
        s.iteration = iter;

        // Stall detection reads the per-iteration best, which keeps moving
        // until the swarm actually settles; the monotone all-time best would
        // tie long before that and defeat the relaxed-termination trade-off.
        if (have_prev && iter > cfg.min_iters_before_early_stop &&
            std::abs(iter_best - prev_best) < cfg.stall_tolerance) {
            break;
        }
        prev_best = iter_best;
        have_prev = true;
        if (iter == cfg.max_iters) break;

        for (int i = 0; i < n; ++i) {
            const auto ui = static_cast<size_t>(i);
            for (int d = 0; d < cfg.dims; ++d) {
                const double r1 = unit(eng);
                const double r2 = unit(eng);
                double v = cfg.inertia * s.velocities[ui][d] +
                           cfg.c1 * r1 * (s.personal_best[ui][d] - s.positions[ui][d]) +
                           cfg.c2 * r2 * (s.global_best[d] - s.positions[ui][d]);
                v = std::min(std::max(v, cfg.vel_clamp_min), cfg.vel_clamp_max);
                s.velocities[ui][d] = v;
                s.positions[ui][d] =
                    std::min(std::max(s.positions[ui][d] + v, cfg.pos_min), cfg.pos_max);
            }
        }
    }
    return PsoResult{s.global_best, s.global_best_fitness, iter};
}

}  // namespace psi
