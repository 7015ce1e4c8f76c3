#include "covdepth/exact.hpp"

#include <omp.h>

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "covdepth/errors.hpp"

namespace covdepth {

std::string Target::describe_1based() const {
    switch (kind) {
        case Kind::Basis:
            return "e" + std::to_string(index + 1);
        case Kind::Column:
            return "g" + std::to_string(index + 1);
        case Kind::BasisSet: {
            std::string s = "{";
            for (size_t i = 0; i < set.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(set[i] + 1);
            }
            return s + "}";
        }
    }
    return "?";
}

std::vector<std::vector<uint16_t>> target_vectors(const GenMatrix& g, const Target& t) {
    int k = g.rows(), n = g.cols();
    std::vector<std::vector<uint16_t>> vs;
    auto unit = [&](int i) {
        std::vector<uint16_t> e(k, 0);
        e[i] = 1;
        return e;
    };
    switch (t.kind) {
        case Target::Kind::Basis:
            if (t.index < 0 || t.index >= k) throw index_out_of_range("basis target beyond k");
            vs.push_back(unit(t.index));
            break;
        case Target::Kind::Column:
            if (t.index < 0 || t.index >= n) throw index_out_of_range("column target beyond n");
            vs.push_back(g.column(t.index));
            break;
        case Target::Kind::BasisSet:
            for (int i : t.set) {
                if (i < 0 || i >= k) throw index_out_of_range("basis-set index beyond k");
                vs.push_back(unit(i));
            }
            break;
    }
    return vs;
}

namespace {

bool all_zero(const std::vector<uint16_t>& v) {
    return std::all_of(v.begin(), v.end(), [](uint16_t x) { return x == 0; });
}

bool residuals_zero(const std::vector<std::vector<uint16_t>>& rs) {
    return std::all_of(rs.begin(), rs.end(), all_zero);
}

void check_reachable(const GenMatrix& g, const Target& t) {
    SpanBasis basis(g.field().get(), g.rows());
    for (int c = 0; c < g.cols(); ++c) basis.insert(g.column(c));
    for (const auto& v : target_vectors(g, t))
        if (!basis.contains(v))
            throw target_unreachable("target " + t.describe_1based() +
                                     " is not in the span of all columns");
}

void check_enum_guard(int n, const Limits& limits) {
    if (n > 63) throw too_large("subset enumeration needs n <= 63", "2^" + std::to_string(n));
    if (n > limits.enum_bits && !limits.force)
        throw too_large("subset enumeration over " + std::to_string(n) +
                            " columns exceeds the 2^" + std::to_string(limits.enum_bits) + " guard",
                        "2^" + std::to_string(n) + " subsets");
}

// Depth-first enumeration of column subsets with the standard prune: once the
// target is covered at depth d with `chosen` columns picked, every completion
// is covered too, so the C(n - d, t) tails are added in one step.
class CoverEnumerator {
public:
    CoverEnumerator(const GenMatrix& g, std::vector<std::vector<uint16_t>> residuals)
        : g_(g),
          n_(g.cols()),
          counts_(g.cols() + 1, 0),
          basis_(g.field().get(), g.rows()),
          residuals_(std::move(residuals)) {}

    // Process the exact prefix pattern `mask` over the first `prefix_len`
    // columns, then enumerate the remaining columns freely.
    void run_block(uint64_t mask, int prefix_len) {
        int chosen_total = __builtin_popcountll(mask);
        bool covered = residuals_zero(residuals_);
        for (int c = 0; c < prefix_len && !covered; ++c) {
            if (!(mask >> c & 1)) continue;
            include_column(c);
            covered = residuals_zero(residuals_);
        }
        if (covered) {
            add_tails(chosen_total, n_ - prefix_len);
        } else {
            dfs(prefix_len, chosen_total);
        }
        // Blocks are processed on a fresh enumerator; no state rollback needed.
    }

    const std::vector<uint64_t>& counts() const { return counts_; }

    void merge(const CoverEnumerator& other) {
        for (int s = 0; s <= n_; ++s) counts_[s] += other.counts_[s];
    }

private:
    void include_column(int c) {
        int pos = basis_.insert(g_.column(c));
        if (pos < 0) return;
        for (auto& r : residuals_) basis_.reduce_against_row(r, pos);
    }

    void add_tails(int chosen, int remaining) {
        const uint64_t* row = pascal_row_u64(remaining);
        for (int t = 0; t <= remaining; ++t) counts_[chosen + t] += row[t];
    }

    void dfs(int next_col, int chosen) {
        if (next_col == n_) return;
        dfs(next_col + 1, chosen);  // exclude

        auto saved_residuals = residuals_;
        int pos = basis_.insert(g_.column(next_col));
        bool covered = false;
        if (pos >= 0) {
            for (auto& r : residuals_) basis_.reduce_against_row(r, pos);
            covered = residuals_zero(residuals_);
        }
        if (covered)
            add_tails(chosen + 1, n_ - next_col - 1);
        else
            dfs(next_col + 1, chosen + 1);
        if (pos >= 0) basis_.pop_inserted(pos);
        residuals_ = std::move(saved_residuals);
    }

    const GenMatrix& g_;
    int n_;
    std::vector<uint64_t> counts_;
    SpanBasis basis_;
    std::vector<std::vector<uint16_t>> residuals_;
};

AlphaProfile profile_from_u64(int n, const std::vector<uint64_t>& counts) {
    AlphaProfile p;
    p.n = n;
    p.counts.assign(counts.begin(), counts.end());
    return p;
}

}  // namespace

AlphaProfile alpha_counts_serial(const GenMatrix& g, const Target& t, const Limits& limits) {
    check_enum_guard(g.cols(), limits);
    check_reachable(g, t);
    CoverEnumerator e(g, target_vectors(g, t));
    e.run_block(0, 0);
    return profile_from_u64(g.cols(), e.counts());
}

AlphaProfile alpha_counts(const GenMatrix& g, const Target& t, const Limits& limits, int threads) {
    int n = g.cols();
    check_enum_guard(n, limits);
    check_reachable(g, t);
    int nt = threads > 0 ? threads : omp_get_max_threads();
    auto residuals = target_vectors(g, t);

    int block_bits = std::min(n, 12);
    uint64_t blocks = 1ULL << block_bits;
    std::vector<std::vector<uint64_t>> partial(nt, std::vector<uint64_t>(n + 1, 0));
#pragma omp parallel num_threads(nt)
    {
        int tid = omp_get_thread_num();
#pragma omp for schedule(dynamic, 16)
        for (long long mask = 0; mask < static_cast<long long>(blocks); ++mask) {
            CoverEnumerator e(g, residuals);
            e.run_block(static_cast<uint64_t>(mask), block_bits);
            for (int s = 0; s <= n; ++s) partial[tid][s] += e.counts()[s];
        }
    }
    std::vector<uint64_t> total(n + 1, 0);
    for (const auto& p : partial)
        for (int s = 0; s <= n; ++s) total[s] += p[s];
    return profile_from_u64(n, total);
}

Rat expectation_from_alpha(const AlphaProfile& profile) {
    int n = profile.n;
    Rat e = Rat(n) * harmonic(n);
    for (int s = 0; s <= n - 1; ++s) {
        if (profile.counts[s] == 0) continue;
        e -= Rat(profile.counts[s]) / Rat(binomial(n - 1, s));
    }
    return e;
}

namespace {

// Every dual codeword of `m` whose support contains `pivot` yields the
// candidate support-minus-pivot; the inclusion-minimal ones among those are
// exactly the minimal recovery sets of the pivot column.
std::vector<uint64_t> dual_route_candidates(const GenMatrix& m, int pivot, int keep_cols,
                                            const Limits& limits, bool* ok) {
    GenMatrix dual = dual_generator(m);
    int d = dual.rows(), nn = m.cols();
    long q = m.field()->order();
    Int words = 1;
    for (int i = 0; i < d; ++i) words *= q;
    Int guard = Int(1) << limits.dual_bits;
    if (words > guard && !limits.force) {
        *ok = false;
        return {};
    }
    *ok = true;

    const auto& f = m.field();
    std::vector<uint64_t> cands;
    std::vector<long> digits(d, 0);
    // scaled[i][v] = v * row_i as a true field multiple; building words by
    // repeated row addition would collapse in extension fields, where adding
    // a row char(F) times gives zero long before v reaches q - 1.
    std::vector<std::vector<std::vector<uint16_t>>> scaled(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        scaled[i].assign(static_cast<size_t>(q), std::vector<uint16_t>(nn));
        for (long v = 0; v < q; ++v)
            for (int c = 0; c < nn; ++c)
                scaled[i][v][c] = static_cast<uint16_t>(f->mul(v, dual.entry(i, c)));
    }
    // Odometer over dual messages.  acc[i] = sum_{j >= i} scaled[j][digits[j]],
    // so a step touching digits 0..pos refreshes acc[pos..0] and acc[0] is the
    // current word; position pos rolls every q^pos steps, which keeps the
    // amortized cost at O(n) per word.
    std::vector<std::vector<uint16_t>> acc(static_cast<size_t>(d) + 1,
                                           std::vector<uint16_t>(nn, 0));
    while (true) {
        int pos = 0;
        while (pos < d && digits[pos] == q - 1) digits[pos++] = 0;
        if (pos == d) break;
        ++digits[pos];
        for (int i = pos; i >= 0; --i) {
            const auto& row = scaled[i][digits[i]];
            for (int c = 0; c < nn; ++c)
                acc[i][c] = static_cast<uint16_t>(f->add(acc[i + 1][c], row[c]));
        }
        const auto& word = acc[0];
        if (word[pivot] == 0) continue;
        uint64_t mask = 0;
        for (int c = 0; c < keep_cols; ++c)
            if (word[c] != 0 && c != pivot) mask |= 1ULL << c;
        cands.push_back(mask);
    }
    return cands;
}

std::vector<uint64_t> minimal_masks(std::vector<uint64_t> cands) {
    std::sort(cands.begin(), cands.end(), [](uint64_t a, uint64_t b) {
        int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
        return pa != pb ? pa < pb : a < b;
    });
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    std::vector<uint64_t> kept;
    for (uint64_t c : cands) {
        bool dominated = false;
        for (uint64_t k : kept)
            if ((c & k) == k) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(c);
    }
    return kept;
}

RecoveryFamily family_from_masks(int n, const std::vector<uint64_t>& masks) {
    RecoveryFamily fam;
    fam.n = n;
    for (uint64_t m : masks) {
        std::vector<int> s;
        for (int c = 0; c < n; ++c)
            if (m >> c & 1) s.push_back(c);
        fam.sets.push_back(std::move(s));
    }
    std::sort(fam.sets.begin(), fam.sets.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return fam;
}

// Fallback: mark every covered subset, then keep the subsets all of whose
// one-element-removals are uncovered.
RecoveryFamily minimal_sets_by_enumeration(const GenMatrix& g, const Target& t,
                                           const Limits& limits) {
    int n = g.cols();
    check_enum_guard(n, limits);
    if (n > 30) throw too_large("subset table needs n <= 30", "2^" + std::to_string(n) + " flags");
    auto targets = target_vectors(g, t);
    uint64_t total = 1ULL << n;
    std::vector<char> covered(total, 0);
    for (uint64_t mask = 0; mask < total; ++mask) {
        bool c = false;
        for (int b = 0; b < n && !c; ++b)
            if (mask >> b & 1) c = covered[mask ^ (1ULL << b)];
        if (!c) {
            SpanBasis basis(g.field().get(), g.rows());
            for (int b = 0; b < n; ++b)
                if (mask >> b & 1) basis.insert(g.column(b));
            c = true;
            for (const auto& v : targets)
                if (!basis.contains(v)) {
                    c = false;
                    break;
                }
        }
        covered[mask] = c;
    }
    if (!covered[total - 1])
        throw target_unreachable("target " + t.describe_1based() +
                                 " is not in the span of all columns");
    std::vector<uint64_t> mins;
    for (uint64_t mask = 0; mask < total; ++mask) {
        if (!covered[mask]) continue;
        bool minimal = true;
        for (int b = 0; b < n && minimal; ++b)
            if (mask >> b & 1) minimal &= !covered[mask ^ (1ULL << b)];
        if (minimal) mins.push_back(mask);
    }
    return family_from_masks(n, mins);
}

}  // namespace

RecoveryFamily minimal_recovery_sets(const GenMatrix& g, const Target& t, const Limits& limits) {
    int n = g.cols();
    if (n > 63) throw too_large("recovery sets need n <= 63", "2^" + std::to_string(n));
    if (t.kind == Target::Kind::BasisSet) return minimal_sets_by_enumeration(g, t, limits);

    bool ok = false;
    std::vector<uint64_t> cands;
    if (t.kind == Target::Kind::Column) {
        if (t.index < 0 || t.index >= n) throw index_out_of_range("column target beyond n");
        cands = dual_route_candidates(g, t.index, n, limits, &ok);
        if (ok && !g.column_is_zero(t.index)) cands.push_back(1ULL << t.index);
    } else {
        if (t.index < 0 || t.index >= g.rows()) throw index_out_of_range("basis target beyond k");
        // Appending e_i as a virtual column reduces the basis target to a
        // column target: dependencies through the virtual column are exactly
        // the ways of expressing e_i from real columns.
        std::vector<long> e;
        e.reserve(static_cast<size_t>(g.rows()) * (n + 1));
        for (int r = 0; r < g.rows(); ++r) {
            for (int c = 0; c < n; ++c) e.push_back(g.entry(r, c));
            e.push_back(r == t.index ? 1 : 0);
        }
        GenMatrix ext = GenMatrix::relaxed(g.field(), g.rows(), n + 1, e);
        cands = dual_route_candidates(ext, n, n, limits, &ok);
        if (ok && cands.empty())
            throw target_unreachable("target " + t.describe_1based() +
                                     " is not in the span of all columns");
    }
    if (!ok) return minimal_sets_by_enumeration(g, t, limits);
    return family_from_masks(n, minimal_masks(std::move(cands)));
}

BetaTable beta_counts(const RecoveryFamily& family, const Limits& limits) {
    int L = family.size();
    if (L > limits.beta_sets && !limits.force)
        throw too_large("subfamily enumeration over " + std::to_string(L) +
                            " recovery sets exceeds the 2^" + std::to_string(limits.beta_sets) +
                            " guard",
                        "2^" + std::to_string(L) + " subfamilies");
    if (L > 40) throw too_large("subfamily enumeration needs at most 40 sets");
    if (family.n > 63) throw too_large("beta table needs n <= 63");

    std::vector<uint64_t> masks;
    masks.reserve(L);
    for (const auto& s : family.sets) {
        uint64_t m = 0;
        for (int c : s) m |= 1ULL << c;
        masks.push_back(m);
    }
    // counts[s][j], filled by a complete include/exclude walk of the family.
    std::vector<std::vector<uint64_t>> counts(L + 1, std::vector<uint64_t>(family.n + 1, 0));
    auto walk = [&](auto&& self, int idx, int s, uint64_t u) -> void {
        if (idx == L) {
            if (s > 0) ++counts[s][__builtin_popcountll(u)];
            return;
        }
        self(self, idx + 1, s, u);
        self(self, idx + 1, s + 1, u | masks[idx]);
    };
    walk(walk, 0, 0, 0);

    BetaTable table;
    table.family_size = L;
    for (int s = 1; s <= L; ++s)
        for (int j = 0; j <= family.n; ++j)
            if (counts[s][j] != 0) table.counts[{s, j}] = Int(counts[s][j]);
    return table;
}

Rat expectation_from_beta(int n, const BetaTable& beta) {
    auto h = harmonic_table(n);
    Rat e = 0;
    for (const auto& [key, count] : beta.counts) {
        auto [s, j] = key;
        Rat term = Rat(count) * h[j];
        e += (s % 2 == 1) ? term : -term;
    }
    return Rat(n) * e;
}

Rat expectation_dp(const GenMatrix& g, const Target& t, const Limits& limits) {
    int n = g.cols();
    if (n > limits.dp_bits && !limits.force)
        throw too_large("subset DP over " + std::to_string(n) + " columns exceeds the 2^" +
                            std::to_string(limits.dp_bits) + " guard",
                        "2^" + std::to_string(n) + " states");
    if (n > 26) throw too_large("subset DP needs n <= 26", "2^" + std::to_string(n) + " states");
    check_reachable(g, t);
    auto targets = target_vectors(g, t);
    uint64_t total = 1ULL << n;

    std::vector<char> covered(total, 0);
    for (uint64_t mask = 0; mask < total; ++mask) {
        bool c = false;
        for (int b = 0; b < n && !c; ++b)
            if (mask >> b & 1) c = covered[mask ^ (1ULL << b)];
        if (!c) {
            SpanBasis basis(g.field().get(), g.rows());
            for (int b = 0; b < n; ++b)
                if (mask >> b & 1) basis.insert(g.column(b));
            c = true;
            for (const auto& v : targets)
                if (!basis.contains(v)) {
                    c = false;
                    break;
                }
        }
        covered[mask] = c;
    }

    std::vector<Rat> exp(total);
    for (uint64_t mask = total; mask-- > 0;) {
        if (covered[mask]) continue;  // exp stays 0
        Rat sum = n;
        for (int b = 0; b < n; ++b)
            if (!(mask >> b & 1)) sum += exp[mask | (1ULL << b)];
        exp[mask] = sum / Rat(n - __builtin_popcountll(mask));
    }
    return exp[0];
}

namespace {

// Same inclusion-exclusion sum as expectation_from_beta, folded one recovery
// set at a time over exact-union states: state u holds sum (-1)^s over the
// s-subfamilies whose union is u.  Avoids the 2^L subfamily walk, so large
// families stay feasible; states number at most 2^n.
Rat expectation_by_union_fold(const RecoveryFamily& family, const Limits& limits) {
    int n = family.n;
    if (n > limits.enum_bits && !limits.force)
        throw too_large("union fold over " + std::to_string(family.size()) +
                            " recovery sets exceeds the 2^" + std::to_string(limits.enum_bits) +
                            " guard",
                        "up to 2^" + std::to_string(n) + " distinct unions");
    if (n > 63) throw too_large("union fold needs n <= 63");
    std::unordered_map<uint64_t, Int> signed_count;
    for (const auto& s : family.sets) {
        uint64_t rmask = 0;
        for (int c : s) rmask |= 1ULL << c;
        std::unordered_map<uint64_t, Int> delta;
        delta[rmask] -= 1;
        for (const auto& [u, v] : signed_count) delta[u | rmask] -= v;
        for (auto& [u, v] : delta) signed_count[u] += v;
    }
    auto h = harmonic_table(n);
    Rat e = 0;
    for (const auto& [u, v] : signed_count) {
        if (v == 0) continue;
        e -= Rat(v) * h[__builtin_popcountll(u)];  // (-1)^(s+1) = -(-1)^s
    }
    return Rat(n) * e;
}

}  // namespace

Rat expectation(const GenMatrix& g, const Target& t, const std::string& engine,
                const Limits& limits, int threads) {
    if (engine == "alpha") return expectation_from_alpha(alpha_counts(g, t, limits, threads));
    if (engine == "beta") {
        auto family = minimal_recovery_sets(g, t, limits);
        if (family.size() <= limits.beta_sets)
            return expectation_from_beta(g.cols(), beta_counts(family, limits));
        return expectation_by_union_fold(family, limits);
    }
    if (engine == "dp") return expectation_dp(g, t, limits);
    throw bad_input("unknown engine '" + engine + "' (expected alpha, beta or dp)");
}

namespace {

ExpectationReport report_from_values(std::string engine, std::vector<TargetExpectation> values) {
    ExpectationReport r;
    r.engine = std::move(engine);
    r.per_target = std::move(values);
    r.t_max = 0;
    for (const auto& te : r.per_target)
        if (te.value > r.t_max) r.t_max = te.value;
    for (size_t i = 0; i < r.per_target.size(); ++i)
        if (r.per_target[i].value == r.t_max) r.argmax.push_back(static_cast<int>(i));
    return r;
}

}  // namespace

ExpectationReport t_max(const GenMatrix& g, const std::string& engine, const Limits& limits,
                        int threads) {
    std::vector<TargetExpectation> values;
    for (int i = 0; i < g.rows(); ++i) {
        Target t = Target::basis(i);
        values.push_back({t, expectation(g, t, engine, limits, threads), false});
    }
    return report_from_values(engine, std::move(values));
}

ExpectationReport tilde_expectations(const GenMatrix& g, const Limits& limits, int threads) {
    std::vector<TargetExpectation> values;
    for (int j = 0; j < g.cols(); ++j) {
        Target t = Target::column(j);
        Rat v = expectation_from_alpha(alpha_counts(g, t, limits, threads));
        values.push_back({t, std::move(v), g.column_is_zero(j)});
    }
    return report_from_values("alpha", std::move(values));
}

BalanceReport is_recovery_balanced(const GenMatrix& g, const Limits& limits, int threads) {
    ExpectationReport rep = tilde_expectations(g, limits, threads);
    BalanceReport b;
    for (const auto& te : rep.per_target) b.values.push_back(te.value);
    b.balanced = true;
    for (size_t j = 1; j < b.values.size(); ++j)
        if (b.values[j] != b.values[0]) {
            b.balanced = false;
            b.witness = {0, static_cast<int>(j)};
            break;
        }
    return b;
}

}  // namespace covdepth
