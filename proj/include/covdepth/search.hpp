#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "covdepth/exact.hpp"
#include "covdepth/matrix.hpp"
#include "covdepth/rational.hpp"

namespace covdepth {

struct SweepRow {
    long x = 1;
    long n_cols = 0;  // xk + n - k
    Rat t_max;
    Rat normalized;  // t_max / k
    std::string engine;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    long argmin_x = 1;  // smallest x attaining the minimal t_max
};

/// T_max of the base matrix extended with x - 1 extra identity blocks, for
/// x = 1..x_max.  Engines "alpha", "beta" and "dp" enumerate the extended
/// matrix; "ext-mds" and "ext-simplex" evaluate the closed forms from the
/// base parameters and require the base to actually be a systematic MDS or
/// simplex matrix.
SweepResult sweep_x(const GenMatrix& base, long x_max, const std::string& engine,
                    const Limits& limits = {}, int threads = 0);

struct BoundReport {
    long q = 0, n = 0, k = 0;
    Rat bound_rate;       // n - (n(n-k)/k)(H_n - H_{n-k}); any rank-k matrix obeys it
    Rat bound_dimension;  // (k + 1)/2; holds for every length at this dimension
    std::optional<Rat> best_t_max;
    std::optional<GenMatrix> witness;
    long samples = 0;
};

/// The two exact lower bounds for the given parameters, no search.
BoundReport bounds(long q, long n, long k);

/// Randomized search for matrices with small T_max: uniform entries with
/// rejection on rank < k, or uniform (I_k | R) when systematic_only.  Every
/// evaluated matrix is checked against bound_rate; a violation throws
/// InvariantViolation since it can only be an engine bug.  Deterministic
/// for a fixed seed at every thread count.
BoundReport random_search(long q, long k, long n, long iterations, uint64_t seed,
                          bool systematic_only, const Limits& limits = {}, int threads = 0);

enum class TriState { No, Yes, Unknown };

struct OrbitReport {
    TriState transitive = TriState::Unknown;
    std::vector<std::vector<int>> orbits;  // partition of 0..n-1; empty when Unknown
    long group_size = 0;                   // column permutations preserving the row space
};

/// Scan all column permutations for those preserving the row space and
/// report the orbit partition of the coordinates.  Guarded at n <= 8
/// (TriState::Unknown beyond it unless force; hard stop past n = 10).
OrbitReport paut_transitive(const GenMatrix& g, const Limits& limits = {});

struct DualityRow {
    std::string name;
    bool balanced = false;
    bool dual_balanced = false;
    /// True when exactly one of the pair is balanced; such a code would
    /// refute the balanced-iff-dual-balanced hypothesis and deserves a
    /// manual look, so it is flagged, never asserted away.
    bool counterexample_candidate = false;
};

std::vector<DualityRow> duality_balance_report(
    const std::vector<std::pair<std::string, GenMatrix>>& codes, const Limits& limits = {},
    int threads = 0);

/// Balance report of the block-diagonal product of two codes.  Throws
/// RateMismatch unless k1/n1 = k2/n2 (the product of balanced equal-rate
/// codes is the case with a guarantee).
BalanceReport product_balance_check(const GenMatrix& a, const GenMatrix& b,
                                    const Limits& limits = {}, int threads = 0);

}  // namespace covdepth
