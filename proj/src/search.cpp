#include "covdepth/search.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "covdepth/closedform.hpp"
#include "covdepth/combinat.hpp"
#include "covdepth/errors.hpp"
#include "covdepth/rng.hpp"

namespace covdepth {
namespace {

void require_identity_prefix(const GenMatrix& g) {
    for (int r = 0; r < g.rows(); ++r)
        for (int c = 0; c < g.rows(); ++c)
            if (g.entry(r, c) != (r == c ? 1 : 0))
                throw not_systematic("closed-form sweep needs a systematic (I | R) base");
}

// Every k columns independent; the property the ext-mds closed form rests on.
void require_mds(const GenMatrix& g, const Limits& limits) {
    const int k = g.rows(), n = g.cols();
    if (binomial(n, k) > (Int(1) << limits.enum_bits) && !limits.force)
        throw too_large("MDS validation scans all k-subsets of columns",
                        binomial(n, k).get_str() + " subsets");
    const Field* f = g.field().get();
    std::vector<int> pick(static_cast<size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        SpanBasis basis(f, k);
        for (int c : pick) basis.insert(g.column(c));
        if (basis.rank() != k)
            throw bad_input("ext-mds needs an MDS base; columns " + std::to_string(pick[0] + 1) +
                            ".. are dependent");
        int i = k - 1;
        while (i >= 0 && pick[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
}

}  // namespace

SweepResult sweep_x(const GenMatrix& base, long x_max, const std::string& engine,
                    const Limits& limits, int threads) {
    if (x_max < 1) throw bad_input("sweep needs x_max >= 1");
    const long k = base.rows();
    const long n = base.cols();
    const long q = base.field()->order();

    std::optional<QBinomialContext> ctx;
    if (engine == "ext-simplex" || engine == "ext-mds") {
        require_identity_prefix(base);
        if (engine == "ext-simplex") {
            ctx.emplace(q);
            if ((ctx->qpow(k) - 1) / (q - 1) != n)
                throw bad_input("ext-simplex needs a base of simplex length (q^k-1)/(q-1)");
        } else {
            require_mds(base, limits);
        }
    }

    SweepResult out;
    for (long x = 1; x <= x_max; ++x) {
        Rat t;
        if (engine == "ext-mds")
            t = ext_mds_tmax(k, n, x);
        else if (engine == "ext-simplex")
            t = ext_simplex_tmax(*ctx, k, x);
        else
            t = t_max(append_identities(base, static_cast<int>(x)), engine, limits, threads).t_max;
        out.rows.push_back({x, x * k + n - k, t, t / Rat(k), engine});
    }
    out.argmin_x = out.rows.front().x;
    for (const auto& row : out.rows)
        if (row.t_max < out.rows[out.argmin_x - 1].t_max) out.argmin_x = row.x;
    return out;
}

BoundReport bounds(long q, long n, long k) {
    if (q < 2) throw bad_input("bounds needs q >= 2");
    if (k < 2 || n < k) throw bad_input("bounds needs 2 <= k <= n");
    BoundReport r;
    r.q = q;
    r.n = n;
    r.k = k;
    r.bound_rate = Rat(n) - Rat(n) * Rat(n - k) / Rat(k) * (harmonic(n) - harmonic(n - k));
    r.bound_dimension = Rat(k + 1) / Rat(2);
    return r;
}

BoundReport random_search(long q, long k, long n, long iterations, uint64_t seed,
                          bool systematic_only, const Limits& limits, int threads) {
    if (iterations < 1) throw bad_input("random_search needs at least one iteration");
    BoundReport report = bounds(q, n, k);
    auto field = Field::get(q);
    if (n > limits.enum_bits && !limits.force)
        throw too_large("random_search length exceeds the enumeration guard",
                        "2^" + std::to_string(n) + " subsets per iteration");

    SplitMix64 master{seed};
    std::vector<uint64_t> seeds(iterations);
    for (auto& s : seeds) s = master.next();

    std::vector<Rat> values(iterations);
    std::vector<std::vector<long>> entries(iterations);
    int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (long i = 0; i < iterations; ++i) {
        SplitMix64 rng{seeds[i]};
        std::vector<long> e(static_cast<size_t>(k) * n);
        while (true) {
            if (systematic_only) {
                for (long r = 0; r < k; ++r)
                    for (long c = 0; c < k; ++c) e[r * n + c] = (r == c) ? 1 : 0;
                for (long r = 0; r < k; ++r)
                    for (long c = k; c < n; ++c) e[r * n + c] = draw_index(rng, q);
                break;
            }
            for (auto& v : e) v = draw_index(rng, q);
            GenMatrix candidate =
                GenMatrix::relaxed(field, static_cast<int>(k), static_cast<int>(n), e);
            if (rank(candidate) == k) break;
        }
        GenMatrix g = GenMatrix::code_matrix(field, static_cast<int>(k), static_cast<int>(n), e);
        values[i] = t_max(g, "alpha", limits, 1).t_max;
        entries[i] = std::move(e);
    }

    long best = 0;
    for (long i = 0; i < iterations; ++i) {
        if (values[i] < report.bound_rate)
            throw invariant_violation("sampled matrix beat the rate lower bound");
        if (values[i] < values[best]) best = i;
    }
    report.best_t_max = values[best];
    report.witness =
        GenMatrix::code_matrix(field, static_cast<int>(k), static_cast<int>(n), entries[best]);
    report.samples = iterations;
    return report;
}

OrbitReport paut_transitive(const GenMatrix& g, const Limits& limits) {
    const int n = g.cols();
    if (n > 10)
        throw too_large("permutation scan is factorial in the length",
                        std::to_string(n) + "! row-space tests");
    if (n > 8 && !limits.force) return {};

    // A column permutation preserving the row space composes with a basis
    // change, which maps equal columns to equal columns and scalar multiples
    // to scalar multiples; permutations breaking those multiplicity classes
    // are rejected before the row-space test.
    const auto& f = g.field();
    std::map<std::vector<uint16_t>, int> exact_mult;
    std::map<std::vector<uint16_t>, int> proj_mult;
    std::vector<std::vector<uint16_t>> normalized(n);
    for (int c = 0; c < n; ++c) {
        auto col = g.column(c);
        ++exact_mult[col];
        auto norm = col;
        for (auto& v : norm)
            if (v != 0) {
                long inv = f->inv(v);
                for (auto& w : norm) w = static_cast<uint16_t>(f->mul(w, inv));
                break;
            }
        normalized[c] = norm;
        ++proj_mult[norm];
    }
    std::vector<std::tuple<bool, int, int>> cls(n);
    for (int c = 0; c < n; ++c)
        cls[c] = {g.column_is_zero(c), exact_mult[g.column(c)], proj_mult[normalized[c]]};

    GenMatrix canon = rref(g);
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };

    OrbitReport report;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool compatible = true;
        for (int j = 0; j < n && compatible; ++j) compatible = cls[perm[j]] == cls[j];
        if (!compatible) continue;
        std::vector<long> e(static_cast<size_t>(g.rows()) * n);
        for (int c = 0; c < n; ++c)
            for (int r = 0; r < g.rows(); ++r) e[static_cast<size_t>(r) * n + c] = g.entry(r, perm[c]);
        GenMatrix permuted = GenMatrix::relaxed(f, g.rows(), n, e);
        if (!(rref(permuted) == canon)) continue;
        ++report.group_size;
        for (int j = 0; j < n; ++j) {
            int a = find(j), b = find(perm[j]);
            if (a != b) parent[a] = b;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::map<int, std::vector<int>> grouped;
    for (int j = 0; j < n; ++j) grouped[find(j)].push_back(j);
    for (auto& [root, members] : grouped) report.orbits.push_back(std::move(members));
    report.transitive = report.orbits.size() == 1 ? TriState::Yes : TriState::No;
    return report;
}

std::vector<DualityRow> duality_balance_report(
    const std::vector<std::pair<std::string, GenMatrix>>& codes, const Limits& limits,
    int threads) {
    std::vector<DualityRow> rows;
    for (const auto& [name, g] : codes) {
        DualityRow row;
        row.name = name;
        row.balanced = is_recovery_balanced(g, limits, threads).balanced;
        GenMatrix dual = dual_generator(g);
        // The dual of the full space has no codewords to recover; every
        // column expectation is 0, which is balanced by any reading.
        row.dual_balanced =
            dual.rows() == 0 || is_recovery_balanced(dual, limits, threads).balanced;
        row.counterexample_candidate = row.balanced != row.dual_balanced;
        rows.push_back(std::move(row));
    }
    return rows;
}

BalanceReport product_balance_check(const GenMatrix& a, const GenMatrix& b, const Limits& limits,
                                    int threads) {
    if (Rat(a.rows()) / Rat(a.cols()) != Rat(b.rows()) / Rat(b.cols()))
        throw rate_mismatch("product factors must share one rate k/n");
    return is_recovery_balanced(cartesian_product(a, b), limits, threads);
}

}  // namespace covdepth
