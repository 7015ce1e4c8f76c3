#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "covdepth/combinat.hpp"
#include "covdepth/matrix.hpp"
#include "covdepth/rational.hpp"

namespace covdepth {

/// Enumeration guards.  Each bound refuses work whose cost would exceed
/// 2^bits (or 2^beta_sets subfamilies) unless `force` is set; refusals throw
/// TooLarge carrying a cost estimate the CLI can print.
struct Limits {
    int enum_bits = 24;  // subset enumeration over 2^n column subsets
    int dual_bits = 20;  // dual codeword enumeration over q^(n - rank)
    int beta_sets = 22;  // subfamily enumeration over 2^L recovery sets
    int dp_bits = 20;    // subset DP over 2^n states
    bool force = false;
};

/// What a set of drawn columns must make recoverable.
///  - Basis i: the message coordinate i, i.e. e_i in the span.
///  - Column j: the codeword symbol j, i.e. column g_j in the span (its own
///    draw counts, and a zero column is recoverable immediately).
///  - BasisSet I: every e_i for i in I (the whole message for I = [k]).
/// Indices are 0-based here; the CLI converts from 1-based.
struct Target {
    enum class Kind { Basis, Column, BasisSet };
    Kind kind = Kind::Basis;
    int index = -1;
    std::vector<int> set;

    static Target basis(int i) { return {Kind::Basis, i, {}}; }
    static Target column(int j) { return {Kind::Column, j, {}}; }
    static Target basis_set(std::vector<int> is) { return {Kind::BasisSet, -1, std::move(is)}; }
    std::string describe_1based() const;
};

/// alpha(s) = number of s-subsets of columns whose span recovers the target,
/// for s = 0..n.  alpha(n) > 0 iff the target is reachable at all.
struct AlphaProfile {
    int n = 0;
    std::vector<Int> counts;
    const Int& at(int s) const { return counts.at(s); }
};

/// Inclusion-minimal recovery sets, each sorted ascending, the family sorted
/// by size then lexicographically.  The empty set alone appears exactly when
/// the target is recoverable from nothing (zero column).
struct RecoveryFamily {
    int n = 0;
    std::vector<std::vector<int>> sets;
    int size() const { return static_cast<int>(sets.size()); }
};

/// beta(s, j) = number of s-subfamilies of the recovery family whose sets
/// union to exactly j columns; stored sparse for s >= 1.
struct BetaTable {
    int family_size = 0;
    std::map<std::pair<int, int>, Int> counts;
};

struct TargetExpectation {
    Target target;
    Rat value;
    bool zero_column = false;
};

/// Per-target expected draw counts plus their maximum.  `argmax` lists every
/// 0-based target position attaining the maximum.
struct ExpectationReport {
    std::string engine;
    std::vector<TargetExpectation> per_target;
    Rat t_max;
    std::vector<int> argmax;
};

struct BalanceReport {
    bool balanced = false;
    std::vector<Rat> values;
    std::optional<std::pair<int, int>> witness;  // first pair of differing targets
};

/// The vectors that must all lie in the span of the drawn columns.
std::vector<std::vector<uint16_t>> target_vectors(const GenMatrix& g, const Target& t);

/// Exact subset-span counts by pruned depth-first enumeration, OpenMP over
/// fixed column-prefix blocks.  Bit-identical to the serial reference for
/// every thread count.  Throws TooLarge past the 2^enum_bits guard and
/// TargetUnreachable when even all n columns cannot recover the target.
AlphaProfile alpha_counts(const GenMatrix& g, const Target& t, const Limits& limits = {},
                          int threads = 0);

/// Single-threaded reference enumeration; kept independent of the parallel
/// kernel so the two can be compared in tests and benchmarks.
AlphaProfile alpha_counts_serial(const GenMatrix& g, const Target& t, const Limits& limits = {});

/// E[tau] = n H_n - sum_{s=0}^{n-1} alpha(s) / C(n-1, s).
Rat expectation_from_alpha(const AlphaProfile& profile);

RecoveryFamily minimal_recovery_sets(const GenMatrix& g, const Target& t, const Limits& limits = {});

BetaTable beta_counts(const RecoveryFamily& family, const Limits& limits = {});

/// E[tau] = n sum_j H_j sum_s (-1)^(s+1) beta(s, j), inclusion-exclusion
/// over the minimal recovery family.
Rat expectation_from_beta(int n, const BetaTable& beta);

/// Exact expectation by dynamic programming over drawn-subset states:
/// E[S] = 0 once the target is recoverable from S, otherwise
/// E[S] = (n + sum_{j not in S} E[S + j]) / (n - |S|); the answer is E[{}].
/// Used as the independent cross-check for the two counting engines.
Rat expectation_dp(const GenMatrix& g, const Target& t, const Limits& limits = {});

/// Expectation through the named engine ("alpha", "beta" or "dp").
Rat expectation(const GenMatrix& g, const Target& t, const std::string& engine,
                const Limits& limits = {}, int threads = 0);

/// Expected draws for every message coordinate e_1..e_k and their maximum.
ExpectationReport t_max(const GenMatrix& g, const std::string& engine = "alpha",
                        const Limits& limits = {}, int threads = 0);

/// Expected draws for every codeword coordinate g_1..g_n (alpha engine).
/// Zero columns are flagged and contribute an exact 0.
ExpectationReport tilde_expectations(const GenMatrix& g, const Limits& limits = {},
                                     int threads = 0);

/// All column expectations equal?  The witness names the first differing
/// pair of columns when not.
BalanceReport is_recovery_balanced(const GenMatrix& g, const Limits& limits = {},
                                   int threads = 0);

}  // namespace covdepth
