#include "covdepth/montecarlo.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>

#include "covdepth/errors.hpp"
#include "covdepth/rng.hpp"

namespace covdepth {
namespace {

struct Welford {
    long count = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++count;
        double d = x - mean;
        mean += d / static_cast<double>(count);
        m2 += d * (x - mean);
    }

    void merge(const Welford& o) {
        if (o.count == 0) return;
        if (count == 0) {
            *this = o;
            return;
        }
        double d = o.mean - mean;
        long total = count + o.count;
        m2 += o.m2 + d * d * static_cast<double>(count) * static_cast<double>(o.count) /
                          static_cast<double>(total);
        mean += d * static_cast<double>(o.count) / static_cast<double>(total);
        count = total;
    }
};

// One trial: draw columns uniformly with replacement, keep an incremental
// row-reduced basis plus target residuals, stop when every residual is zero.
// Returns the number of draws, or -1 if the cap was hit.
long run_trial(const GenMatrix& g, const std::vector<std::vector<uint16_t>>& targets,
               SplitMix64& rng, long cap) {
    const int n = g.cols();
    SpanBasis basis(g.field().get(), g.rows());
    std::vector<std::vector<uint16_t>> residuals = targets;
    size_t open = 0;
    for (const auto& r : residuals)
        if (!std::all_of(r.begin(), r.end(), [](uint16_t x) { return x == 0; })) ++open;
    long draws = 0;
    while (open > 0) {
        if (draws >= cap) return -1;
        int c = draw_index(rng, static_cast<uint64_t>(n));
        ++draws;
        int pos = basis.insert(g.column(c));
        if (pos < 0) continue;
        open = 0;
        for (auto& r : residuals) {
            basis.reduce_against_row(r, pos);
            if (!std::all_of(r.begin(), r.end(), [](uint16_t x) { return x == 0; })) ++open;
        }
    }
    return draws;
}

}  // namespace

SimResult simulate(const GenMatrix& g, const Target& t, const SimConfig& cfg) {
    if (cfg.trials < 1) throw bad_input("simulation needs at least one trial");
    if (cfg.streams < 1) throw bad_input("simulation needs at least one stream");
    auto targets = target_vectors(g, t);
    {
        SpanBasis all(g.field().get(), g.rows());
        for (int c = 0; c < g.cols(); ++c) all.insert(g.column(c));
        for (const auto& v : targets)
            if (!all.contains(v))
                throw target_unreachable("target " + t.describe_1based() +
                                         " is outside the column space");
    }

    const int streams = static_cast<int>(std::min<long>(cfg.streams, cfg.trials));
    SplitMix64 master{cfg.seed};
    std::vector<uint64_t> seeds(streams);
    for (auto& s : seeds) s = master.next();

    const long base = cfg.trials / streams;
    const long extra = cfg.trials % streams;
    const long cap = 1000000L * g.cols();

    std::vector<Welford> parts(streams);
    std::vector<char> capped(streams, 0);
    int nt = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (int i = 0; i < streams; ++i) {
        SplitMix64 rng{seeds[i]};
        long mine = base + (i < extra ? 1 : 0);
        for (long trial = 0; trial < mine; ++trial) {
            long draws = run_trial(g, targets, rng, cap);
            if (draws < 0) {
                capped[i] = 1;
                break;
            }
            parts[i].add(static_cast<double>(draws));
        }
    }
    for (int i = 0; i < streams; ++i)
        if (capped[i])
            throw draw_cap_exceeded("a trial passed " + std::to_string(cap) +
                                    " draws without recovering the target");

    Welford total;
    for (const auto& p : parts) total.merge(p);
    SimResult res;
    res.trials = total.count;
    res.mean = total.mean;
    if (total.count > 1) {
        res.stddev = std::sqrt(total.m2 / static_cast<double>(total.count - 1));
        res.std_error = res.stddev / std::sqrt(static_cast<double>(total.count));
    }
    res.stream_seeds = std::move(seeds);
    return res;
}

}  // namespace covdepth
