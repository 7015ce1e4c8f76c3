#pragma once

#include <vector>

#include "covdepth/exact.hpp"
#include "covdepth/rational.hpp"

namespace covdepth {

/// Gaussian binomial coefficients [a b]_q over a fixed base, memoized
/// through the q-Pascal recurrence [a b] = [a-1 b-1] + q^b [a-1 b].
/// Not safe to share across threads while growing; use one per thread.
class QBinomialContext {
public:
    explicit QBinomialContext(long q);

    long q() const { return q_; }

    /// [a b]_q; zero whenever b < 0 or b > a (same vanishing convention as
    /// the plain binomial, and the formula sums below depend on it).
    Int qbinom(long a, long b);

    /// q^e for e >= 0.
    Int qpow(long e);

    /// (-1)^d q^C(d,2), the Moebius factor between subspaces d dimensions
    /// apart.
    Int moebius(long d);

private:
    long q_;
    std::vector<Int> powers_;
    std::vector<std::vector<Int>> rows_;
};

/// Number of t-column matrices over F_q whose columns span a fixed
/// l-dimensional subspace: phi(l, t) = sum_d [l d] (-1)^(l-d) q^C(l-d,2) q^(dt).
Int phi(QBinomialContext& ctx, long l, long t);

/// Recovery count for one coordinate of a systematic MDS [n, k] matrix:
/// C(n-1, s-1) while s < k, C(n, s) from s = k on.  Independent of which
/// coordinate i is asked for; i is range-checked only.
Int mds_alpha(long k, long n, long s, long i = 0);

/// Expected draws for any coordinate of a systematic MDS [n, k] matrix.
Rat mds_expectation(long k, long n);

/// gamma(s, v): number of ways to pick s hyperplanes of F_q^r that all
/// avoid a fixed projective point and intersect in dimension exactly v.
/// Each such choice is an s-subfamily of the minimal recovery family of a
/// Hamming-code symbol, with union size determined by v.
Int hamming_gamma(QBinomialContext& ctx, long r, long s, long v);

/// beta(s, j) for the minimal recovery family of symbol i of the q-ary
/// Hamming code of redundancy r: s-subfamilies whose union covers exactly
/// j symbols.  The family is one set per hyperplane avoiding the symbol's
/// column plus the singleton of the symbol itself, so subfamilies without
/// the singleton land at j = (q^r - q^v)/(q-1) - 1 and subfamilies with it
/// at j = (q^r - q^v)/(q-1), plus the singleton alone at (s, j) = (1, 1).
/// Zero off those shapes.  Throws IndexOutOfRange outside
/// 1 <= s <= q^(r-1) + 1 or 1 <= j <= n.
Int hamming_beta(QBinomialContext& ctx, long r, long i, long s, long j);

/// The same counts assembled as a table comparable to beta_counts().
BetaTable hamming_beta_table(long q, long r);

/// Expected draws for any symbol of the q-ary Hamming code of redundancy r.
Rat hamming_expectation(long q, long r);

/// Number of s-subsets of the columns of a q-ary simplex matrix of
/// dimension k that span a fixed column (independent of which column).
Int simplex_alpha(QBinomialContext& ctx, long k, long s);

/// Expected draws for any symbol of the q-ary simplex code of dimension k.
Rat simplex_expectation(long q, long k);

/// Worst-coordinate expected draws for a systematic MDS [n, k] matrix
/// extended with x - 1 additional identity blocks (N = xk + n - k columns).
/// x = 1 gives back k.
Rat ext_mds_tmax(long k, long n, long x);

/// Worst-coordinate expected draws for a systematic simplex matrix of
/// dimension k over the context's base field, extended with x - 1
/// additional identity blocks.  x = 1 gives back k.
Rat ext_simplex_tmax(QBinomialContext& ctx, long k, long x);

/// Average over all rank-k matrices in F_q^(k x n) of the expected draws
/// to recover one fixed message coordinate.
Rat avg_general(QBinomialContext& ctx, long k, long n);

/// The same average restricted to systematic matrices (I_k | R).
Rat avg_systematic(QBinomialContext& ctx, long k, long n);

}  // namespace covdepth
