#include "covdepth/closedform.hpp"

#include <algorithm>
#include <utility>

#include "covdepth/combinat.hpp"
#include "covdepth/errors.hpp"

namespace covdepth {

QBinomialContext::QBinomialContext(long q) : q_(q) {
    if (q < 2) throw bad_input("q-binomial base must be at least 2");
    powers_.push_back(1);
}

Int QBinomialContext::qpow(long e) {
    if (e < 0) throw invariant_violation("negative q-power exponent");
    while (static_cast<long>(powers_.size()) <= e) powers_.push_back(powers_.back() * q_);
    return powers_[e];
}

Int QBinomialContext::moebius(long d) {
    if (d < 0) throw invariant_violation("negative Moebius distance");
    Int v = qpow(d * (d - 1) / 2);
    return (d % 2 != 0) ? Int(-v) : v;
}

Int QBinomialContext::qbinom(long a, long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    while (static_cast<long>(rows_.size()) <= a) {
        long m = static_cast<long>(rows_.size());
        std::vector<Int> row(m + 1);
        row[0] = 1;
        row[m] = 1;
        for (long j = 1; j < m; ++j) row[j] = rows_[m - 1][j - 1] + qpow(j) * rows_[m - 1][j];
        rows_.push_back(std::move(row));
    }
    return rows_[a][b];
}

Int phi(QBinomialContext& ctx, long l, long t) {
    if (l < 0 || t < 0) throw invariant_violation("negative phi argument");
    Int total = 0;
    for (long d = 0; d <= l; ++d) total += ctx.qbinom(l, d) * ctx.moebius(l - d) * ctx.qpow(d * t);
    return total;
}

Int mds_alpha(long k, long n, long s, long i) {
    if (k < 2 || n < k) throw bad_input("mds_alpha needs 2 <= k <= n");
    if (i < 0 || i >= n) throw index_out_of_range("mds_alpha coordinate out of range");
    if (s < 1) return 0;
    if (s <= k - 1) return binomial(n - 1, s - 1);
    return binomial(n, s);
}

Rat mds_expectation(long k, long n) {
    Rat e = Rat(n) * harmonic(n);
    for (long s = 1; s <= n - 1; ++s) e -= Rat(mds_alpha(k, n, s)) / Rat(binomial(n - 1, s));
    return e;
}

Int hamming_gamma(QBinomialContext& ctx, long r, long s, long v) {
    if (r < 2) throw bad_input("hamming_gamma needs redundancy at least 2");
    if (s < 0 || v < 0 || v > r - 1) return 0;
    Int inner = 0;
    for (long u = v; u <= r - 1; ++u)
        inner += ctx.qpow(u) * ctx.qbinom(r - v - 1, u - v) * binomial(ctx.qpow(r - u - 1), s) *
                 ctx.moebius(u - v);
    return ctx.qbinom(r - 1, v) * inner;
}

namespace {

// Length and family size of the Hamming code of redundancy r, as machine
// integers; refuses parameters whose family could not even be indexed.
std::pair<long, long> hamming_shape(QBinomialContext& ctx, long r) {
    Int n = (ctx.qpow(r) - 1) / (ctx.q() - 1);
    Int fam = ctx.qpow(r - 1) + 1;
    if (!n.fits_slong_p())
        throw too_large("hamming code length does not fit a machine integer", "q^r columns");
    return {mpz_get_si(n.get_mpz_t()), mpz_get_si(fam.get_mpz_t())};
}

}  // namespace

Int hamming_beta(QBinomialContext& ctx, long r, long i, long s, long j) {
    auto [n, fam] = hamming_shape(ctx, r);
    if (i < 0 || i >= n) throw index_out_of_range("hamming_beta symbol out of range");
    if (s < 1 || s > fam) throw index_out_of_range("hamming_beta subfamily size out of range");
    if (j < 1 || j > n) throw index_out_of_range("hamming_beta union size out of range");
    Int total = 0;
    for (long v = 0; v <= r - 1; ++v) {
        Int without = (ctx.qpow(r) - ctx.qpow(v)) / (ctx.q() - 1) - 1;
        if (without == j) total += hamming_gamma(ctx, r, s, v);
        // Subfamilies containing the singleton {i} enlarge the union by one;
        // the remaining s - 1 sets must come from the hyperplane part.
        if (without + 1 == j && s >= 2) total += hamming_gamma(ctx, r, s - 1, v);
    }
    if (s == 1 && j == 1) total += 1;  // the singleton alone
    return total;
}

BetaTable hamming_beta_table(long q, long r) {
    QBinomialContext ctx(q);
    auto [n, fam] = hamming_shape(ctx, r);
    (void)n;
    BetaTable table;
    table.family_size = static_cast<int>(fam);
    for (long v = 0; v <= r - 1; ++v) {
        Int without = (ctx.qpow(r) - ctx.qpow(v)) / (ctx.q() - 1) - 1;
        long j = mpz_get_si(without.get_mpz_t());
        for (long s = 1; s <= fam; ++s) {
            Int g = hamming_gamma(ctx, r, s, v);
            if (g != 0) table.counts[{static_cast<int>(s), static_cast<int>(j)}] += g;
            if (s >= 2) {
                Int h = hamming_gamma(ctx, r, s - 1, v);
                if (h != 0) table.counts[{static_cast<int>(s), static_cast<int>(j + 1)}] += h;
            }
        }
    }
    table.counts[{1, 1}] += 1;
    for (auto it = table.counts.begin(); it != table.counts.end();)
        it = (it->second == 0) ? table.counts.erase(it) : std::next(it);
    return table;
}

Rat hamming_expectation(long q, long r) {
    QBinomialContext ctx(q);
    auto [n, fam] = hamming_shape(ctx, r);
    (void)fam;
    return expectation_from_beta(static_cast<int>(n), hamming_beta_table(q, r));
}

Int simplex_alpha(QBinomialContext& ctx, long k, long s) {
    if (k < 2) throw bad_input("simplex_alpha needs dimension at least 2");
    if (s < 1) return 0;
    Int total = 0;
    for (long d = 1; d <= std::min(s, k); ++d) {
        Int inner = 0;
        for (long r = 1; r <= d; ++r)
            inner += ctx.qbinom(d, r) * binomial((ctx.qpow(r) - 1) / (ctx.q() - 1), s) *
                     ctx.moebius(d - r);
        total += ctx.qbinom(k - 1, d - 1) * inner;
    }
    return total;
}

Rat simplex_expectation(long q, long k) {
    QBinomialContext ctx(q);
    Int length = (ctx.qpow(k) - 1) / (q - 1);
    if (!length.fits_slong_p())
        throw too_large("simplex length does not fit a machine integer", "q^k columns");
    long n = mpz_get_si(length.get_mpz_t());
    Rat e = Rat(n) * harmonic(n);
    for (long s = 1; s <= n - 1; ++s)
        e -= Rat(simplex_alpha(ctx, k, s)) / Rat(binomial(n - 1, s));
    return e;
}

Rat ext_mds_tmax(long k, long n, long x) {
    if (k < 2 || n < k) throw bad_input("ext_mds_tmax needs 2 <= k <= n");
    if (x < 1) throw bad_input("ext_mds_tmax needs x >= 1");
    long N = x * k + n - k;
    Rat t = 1;
    for (long s = 1; s <= N - 1; ++s) t += Rat(binomial(N - x, s)) / Rat(binomial(N - 1, s));
    for (long s = k; s <= N - 1; ++s) {
        Int covered = 0;
        for (long a = 0; a <= k - 1; ++a) {
            Int sum_m = 0;
            for (long m = 0; m <= s - k; ++m) {
                Int sum_t = 0;
                for (long tt = 0; tt <= a; ++tt) {
                    Int term = binomial(a, tt) * binomial((a - tt) * x, m + a);
                    sum_t += (tt % 2 != 0) ? Int(-term) : term;
                }
                sum_m += binomial(n - k, s - a - m) * sum_t;
            }
            covered += binomial(k - 1, a) * sum_m;
        }
        t -= Rat(covered) / Rat(binomial(N - 1, s));
    }
    return t;
}

Rat ext_simplex_tmax(QBinomialContext& ctx, long k, long x) {
    if (k < 2) throw bad_input("ext_simplex_tmax needs dimension at least 2");
    if (x < 1) throw bad_input("ext_simplex_tmax needs x >= 1");
    long q = ctx.q();
    Int length = (ctx.qpow(k) - 1) / (q - 1) + (x - 1) * k;
    if (!length.fits_slong_p())
        throw too_large("extended simplex length does not fit a machine integer", "q^k columns");
    long N = mpz_get_si(length.get_mpz_t());

    // Per (dim, identity-count) class of subspaces: how many column draws
    // land inside such a subspace, and the signed weight its class carries.
    struct ClassTerm {
        Int columns;
        Int weight;
    };
    std::vector<ClassTerm> classes;
    for (long z = 0; z <= k; ++z) {
        Int v1 = 0;
        for (long h = z; h <= k; ++h) v1 += ctx.moebius(h - z) * ctx.qbinom(k - z, h - z);
        Int v2 = 0;
        for (long h = z + 1; h <= k; ++h) v2 += ctx.moebius(h - z) * ctx.qbinom(k - z - 1, h - z - 1);
        for (long w = 0; w <= k; ++w) {
            Int eta = 0;
            for (long r = w; r <= k; ++r) {
                Int term = binomial(k - w, r - w) * ctx.qbinom(k - r, z - r);
                eta += ((r - w) % 2 != 0) ? Int(-term) : term;
            }
            eta *= binomial(k, w);
            Int eta_i = 0;
            for (long r = w; r <= k; ++r) {
                Int term = binomial(k - w, r - w) * ctx.qbinom(k - r, z - r);
                eta_i += binomial(k - 1, w - 1) * (((r - w) % 2 != 0) ? Int(-term) : term);
            }
            for (long r = w + 1; r <= k; ++r) {
                Int term = binomial(k - w - 1, r - w - 1) * ctx.qbinom(k - r, z - r);
                eta_i += binomial(k - 1, w) * (((r - w) % 2 != 0) ? Int(-term) : term);
            }
            for (long r = w; r <= k - 1; ++r) {
                Int term = binomial(k - 1 - w, r - w) * ctx.qbinom(k - r - 1, z - r - 1);
                eta_i += binomial(k - 1, w) * (((r - w) % 2 != 0) ? Int(-term) : term);
            }
            Int weight = eta * v2 + eta_i * (v1 - v2);
            if (weight == 0) continue;
            Int columns = (ctx.qpow(z) - 1) / (q - 1) + Int(x - 1) * w;
            classes.push_back({columns, weight});
        }
    }

    Rat t = Rat(N) * harmonic(N);
    for (long s = 1; s <= N - 1; ++s) {
        Int alpha = 0;
        for (const auto& c : classes) alpha += binomial(c.columns, s) * c.weight;
        t -= Rat(alpha) / Rat(binomial(N - 1, s));
    }
    return t;
}

Rat avg_general(QBinomialContext& ctx, long k, long n) {
    if (k < 2 || n < k) throw bad_input("avg_general needs 2 <= k <= n");
    long q = ctx.q();
    Int matrices = 1;
    for (long j = 0; j <= k - 1; ++j) matrices *= ctx.qpow(n) - ctx.qpow(j);
    (void)q;
    Rat total = 0;
    for (long s = 0; s <= n - 1; ++s) {
        std::vector<Int> phi_rest(k + 1);
        for (long v = 0; v <= k; ++v) phi_rest[v] = phi(ctx, v, n - s);
        Int uncovered = 0;
        for (long u = 0; u <= std::min(s, k); ++u) {
            Int spaces = ctx.qbinom(k, u) - ctx.qbinom(k - 1, u - 1);
            if (spaces == 0) continue;
            Int completions = 0;
            for (long v = k - u; v <= k; ++v)
                for (long l = u; l <= k; ++l)
                    completions +=
                        ctx.qbinom(k - u, l - u) * ctx.moebius(k - l) * ctx.qbinom(l, v) * phi_rest[v];
            uncovered += spaces * phi(ctx, u, s) * completions;
        }
        total += Rat(binomial(n, s) * uncovered) / Rat(matrices * binomial(n - 1, s));
    }
    return total;
}

Rat avg_systematic(QBinomialContext& ctx, long k, long n) {
    if (k < 2 || n < k) throw bad_input("avg_systematic needs 2 <= k <= n");
    Rat total = 0;
    Int matrices = ctx.qpow(k * (n - k));
    for (long s = 0; s <= n - 1; ++s) {
        Int uncovered = 0;
        for (long a = 0; a <= std::min(s, k - 1); ++a) {
            Int redundancy_picks = binomial(n - k, s - a);
            if (redundancy_picks == 0) continue;  // also keeps the q-power exponent nonnegative
            std::vector<Int> phi_u(k);
            for (long u = 0; u <= k - 1; ++u) phi_u[u] = phi(ctx, u, s - a);
            Int inner = 0;
            for (long u = 0; u <= k - 1; ++u) {
                for (long v = 0; v <= k - 1; ++v) {
                    Int spaces = ctx.qbinom(k - a, v - a) - ctx.qbinom(k - a - 1, v - a - 1);
                    if (spaces == 0) continue;
                    Int sum_w = 0;
                    for (long w = a; w <= v; ++w)
                        sum_w += ctx.qbinom(v - a, w - a) * ctx.moebius(v - w) * ctx.qbinom(w, u);
                    inner += spaces * sum_w * phi_u[u];
                }
            }
            uncovered +=
                binomial(k - 1, a) * redundancy_picks * ctx.qpow(k * (n - k - s + a)) * inner;
        }
        total += Rat(uncovered) / Rat(matrices * binomial(n - 1, s));
    }
    return total;
}

}  // namespace covdepth
