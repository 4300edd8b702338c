#include "backbone/seir.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "backbone/errors.hpp"
#include "backbone/parallel.hpp"
#include "backbone/rng.hpp"

namespace backbone {

namespace {

std::vector<StateCounts> simulate_run(const Graph& g, const SeirParams& p, std::uint64_t run) {
    const NodeId n = g.num_nodes();
    Rng rng(mix_seed(p.seed, run));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<NodeId> pick(0, n - 1);

    std::vector<std::uint8_t> state(n, kSusceptible);
    std::vector<std::uint32_t> timer(n, 0);
    StateCounts counts{n, 0, 0, 0};

    const NodeId patient_zero = pick(rng);
    if (p.latency == 0) {
        state[patient_zero] = kInfectious;
        timer[patient_zero] = p.infectious_period;
        --counts.s;
        ++counts.i;
    } else {
        state[patient_zero] = kExposed;
        timer[patient_zero] = p.latency;
        --counts.s;
        ++counts.e;
    }

    std::vector<StateCounts> curve{counts};
    std::vector<NodeId> newly_exposed;
    std::vector<bool> flagged(n, false);
    while (counts.e + counts.i > 0) {
        // Exposures come from the infectious set of this step; every
        // contact with a susceptible neighbor draws its own trial.
        newly_exposed.clear();
        for (NodeId v = 0; v < n; ++v) {
            if (state[v] != kInfectious) continue;
            for (NodeId w : g.neighbors(v)) {
                if (state[w] != kSusceptible) continue;
                if (unit(rng) < p.transmission_prob && !flagged[w]) {
                    flagged[w] = true;
                    newly_exposed.push_back(w);
                }
            }
        }

        // Timer-driven promotions from the same snapshot.
        for (NodeId v = 0; v < n; ++v) {
            if (state[v] == kExposed) {
                if (--timer[v] == 0) {
                    state[v] = kInfectious;
                    timer[v] = p.infectious_period;
                    --counts.e;
                    ++counts.i;
                }
            } else if (state[v] == kInfectious) {
                if (--timer[v] == 0) {
                    state[v] = kRemoved;
                    --counts.i;
                    ++counts.r;
                }
            }
        }
        for (NodeId w : newly_exposed) {
            flagged[w] = false;
            if (p.latency == 0) {
                state[w] = kInfectious;
                timer[w] = p.infectious_period;
                --counts.s;
                ++counts.i;
            } else {
                state[w] = kExposed;
                timer[w] = p.latency;
                --counts.s;
                ++counts.e;
            }
        }
        curve.push_back(counts);
    }
    return curve;
}

double median_of(std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

EpidemicCurves run_seir(const Graph& g, const SeirParams& params, int workers) {
    if (g.num_nodes() == 0) throw InvalidParameterError("epidemic needs at least one node");
    if (params.infectious_period < 1)
        throw InvalidParameterError("infectious period must be at least 1");
    if (!(params.transmission_prob >= 0.0 && params.transmission_prob <= 1.0))
        throw InvalidParameterError("transmission probability must lie in [0, 1]");
    if (params.runs < 1) throw InvalidParameterError("need at least one run");

    EpidemicCurves curves;
    curves.per_run.resize(params.runs);
    const int threads = resolve_workers(workers);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t r = 0; r < static_cast<std::int64_t>(params.runs); ++r)
        curves.per_run[r] = simulate_run(g, params, static_cast<std::uint64_t>(r));

    curves.horizon = 0;
    for (const auto& run : curves.per_run) curves.horizon = std::max(curves.horizon, run.size());

    // Aggregate with terminal-state padding: a finished outbreak holds its
    // final counts.
    std::vector<double> sample(params.runs);
    for (int st = 0; st < 4; ++st) {
        curves.median[st].resize(curves.horizon);
        curves.stddev[st].resize(curves.horizon);
    }
    auto pick_state = [](const StateCounts& c, int st) -> double {
        switch (st) {
            case kSusceptible: return c.s;
            case kExposed: return c.e;
            case kInfectious: return c.i;
            default: return c.r;
        }
    };
    for (std::size_t t = 0; t < curves.horizon; ++t) {
        for (int st = 0; st < 4; ++st) {
            for (std::uint32_t r = 0; r < params.runs; ++r) {
                const auto& run = curves.per_run[r];
                const StateCounts& c = t < run.size() ? run[t] : run.back();
                sample[r] = pick_state(c, st);
            }
            double mean = 0.0;
            for (double x : sample) mean += x;
            mean /= params.runs;
            double var = 0.0;
            for (double x : sample) var += (x - mean) * (x - mean);
            var /= params.runs;
            curves.stddev[st][t] = std::sqrt(var);
            curves.median[st][t] = median_of(sample);
        }
    }
    return curves;
}

}  // namespace backbone
