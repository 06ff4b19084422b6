#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace psi {

struct PsoConfig {
    int population = 15;
    int dims = 6;
    int max_iters = 15;
    int min_iters_before_early_stop = 7;
    // Acceleration/inertia defaults sit inside the variance-stability region
    // (c1+c2 < 24(1-w^2)/(7-5w)), so the swarm actually contracts within the
    // 15-iteration budget; w=1 with c1=c2=2 orbits without converging. The
    // social term is weighted a little over the cognitive one, which keeps
    // new samples landing near the incumbent best and improvements flowing.
    double c1 = 1.35;         // cognitive acceleration
    double c2 = 1.75;         // social acceleration
    double inertia = 0.45;
    double pos_min = 0.0, pos_max = 1.0;
    double vel_init_min = -0.1, vel_init_max = 0.1;
    double vel_clamp_min = -0.2, vel_clamp_max = 0.2;
    double stall_tolerance = 1e-6;  // |delta G_best| between consecutive iterations
    std::uint64_t seed = 0;
    int threads = 1;  // fitness evaluations per iteration; 0 = hardware concurrency

    void validate() const;
};

struct Swarm {
    std::vector<Eigen::ArrayXd> positions;
    std::vector<Eigen::ArrayXd> velocities;
    std::vector<Eigen::ArrayXd> personal_best;
    std::vector<double> personal_best_fitness;
    Eigen::ArrayXd global_best;
    double global_best_fitness = 0.0;
    int iteration = 0;
};

struct PsoResult {
    Eigen::ArrayXd best_position;
    double best_fitness = 0.0;
    int iterations_run = 0;
};

using FitnessFn = std::function<double(const Eigen::ArrayXd&)>;

// Places anchors at the first particle slots, fills the rest uniformly at
// random within the position bounds; all velocities start uniform within the
// init bounds. Deterministic for a fixed config.seed.
Swarm seed_particles(const PsoConfig& config, const std::vector<Eigen::ArrayXd>& anchors);

// Maximizes `fitness` over the position box. Per iteration: evaluate every
// particle, update personal/global bests on strict improvement, then apply the
// inertia-weighted velocity and position update with one fresh uniform draw
// per dimension per attraction term. Velocities are clamped to the clamp
// bounds and positions to the position bounds after every move. Stops at
// max_iters, or once iteration > min_iters_before_early_stop and the global
// best improved by less than stall_tolerance since the previous iteration.
// Throws std::domain_error if the fitness returns a non-finite value.
PsoResult optimize(const FitnessFn& fitness, const PsoConfig& config,
                   const std::vector<Eigen::ArrayXd>& anchors = {});

}  // namespace psi
