#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "backbone/graph.hpp"

namespace backbone {

struct SeirParams {
    std::uint32_t latency = 2;            // steps spent exposed (0 = skip E)
    std::uint32_t infectious_period = 9;  // steps spent infectious, >= 1
    double transmission_prob = 0.1;       // per infectious contact per step
    std::uint32_t runs = 50;
    std::uint64_t seed = 1;
};

struct StateCounts {
    std::uint32_t s = 0, e = 0, i = 0, r = 0;

    bool operator==(const StateCounts&) const = default;
};

enum SeirState : int { kSusceptible = 0, kExposed = 1, kInfectious = 2, kRemoved = 3 };

/// Per-run trajectories plus per-step aggregates. Shorter runs are padded
/// with their terminal state up to the common horizon. median[state][t] and
/// stddev[state][t] are indexed by SeirState.
struct EpidemicCurves {
    std::vector<std::vector<StateCounts>> per_run;
    std::size_t horizon = 0;
    std::array<std::vector<double>, 4> median;
    std::array<std::vector<double>, 4> stddev;
};

/// Synchronous discrete-time SEIR: one uniformly random initial exposed per
/// run, exposure by independent Bernoulli trials per infectious contact.
/// Every run draws its own stream from (seed, run index), so the result is
/// independent of the worker count.
EpidemicCurves run_seir(const Graph& g, const SeirParams& params, int workers = 0);

}  // namespace backbone
