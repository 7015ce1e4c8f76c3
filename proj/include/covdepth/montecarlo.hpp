#pragma once

#include <cstdint>
#include <vector>

#include "covdepth/exact.hpp"
#include "covdepth/matrix.hpp"

namespace covdepth {

/// Simulation settings.  Trials are pre-partitioned over `streams`
/// independent generators, so the result depends only on (seed, streams,
/// trials); `threads` sets how many streams run at once and never changes
/// the numbers.
struct SimConfig {
    uint64_t seed = 1;
    long trials = 100000;
    int streams = 64;
    int threads = 0;  // 0 = library default
};

struct SimResult {
    double mean = 0.0;
    double stddev = 0.0;     // sample standard deviation
    double std_error = 0.0;  // stddev / sqrt(trials)
    long trials = 0;
    std::vector<uint64_t> stream_seeds;
};

/// Estimate the expected number of uniform column draws (with replacement)
/// until the target is recoverable from the drawn set.  Throws
/// TargetUnreachable up front when even all columns cannot recover it, and
/// DrawCapExceeded if a trial somehow exceeds 10^6 * n draws.
SimResult simulate(const GenMatrix& g, const Target& t, const SimConfig& cfg);

}  // namespace covdepth
