// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Each criterion is independent; later ones reuse the exact T_max values
// recorded by earlier ones for the lower-bound sweep.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "covdepth/closedform.hpp"
#include "covdepth/codes.hpp"
#include "covdepth/combinat.hpp"
#include "covdepth/errors.hpp"
#include "covdepth/exact.hpp"
#include "covdepth/matrix.hpp"
#include "covdepth/montecarlo.hpp"
#include "covdepth/rng.hpp"
#include "covdepth/search.hpp"
#include "oracles.hpp"
#include "reference_curves.hpp"

using covdepth::Field;
using covdepth::GenMatrix;
using covdepth::Int;
using covdepth::Rat;
using covdepth::Target;

namespace {

struct TmaxRecord {
    long q, n, k;
    Rat value;
    std::string origin;
};

std::vector<TmaxRecord> g_tmax_records;

void record_tmax(const GenMatrix& g, const Rat& value, const std::string& origin) {
    g_tmax_records.push_back({g.field()->order(), g.cols(), g.rows(), value, origin});
}

GenMatrix running_example() {
    return GenMatrix::code_matrix(Field::get(2), 2, 5, {1, 0, 1, 0, 1, 0, 1, 0, 1, 1});
}

GenMatrix random_full_rank(long q, int k, int n, covdepth::SplitMix64& rng) {
    auto f = Field::get(q);
    while (true) {
        std::vector<long> e(static_cast<size_t>(k) * n);
        for (auto& v : e) v = static_cast<long>(covdepth::draw_index(rng, q));
        auto g = GenMatrix::relaxed(f, k, n, e);
        if (covdepth::rank(g) == k) return g;
    }
}

struct Failure {
    std::ostringstream text;
    bool any = false;
    template <class T>
    Failure& operator<<(const T& v) {
        text << v;
        return *this;
    }
    void flag() { any = true; }
};

void expect(Failure& f, bool cond, const std::string& what) {
    if (cond) return;
    if (f.any) f << "; ";
    f << what;
    f.flag();
}

Rat frac(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string criterion1() {
    Failure f;
    auto g = running_example();
    for (const char* engine : {"alpha", "beta", "dp"}) {
        Rat e1 = covdepth::expectation(g, Target::basis(0), engine);
        Rat e2 = covdepth::expectation(g, Target::basis(1), engine);
        expect(f, e1 == frac(23, 12), std::string(engine) + " engine e1 != 23/12");
        expect(f, e2 == frac(23, 12), std::string(engine) + " engine e2 != 23/12");
    }
    auto rep = covdepth::t_max(g);
    expect(f, rep.t_max == frac(23, 12), "t_max != 23/12");
    record_tmax(g, rep.t_max, "running example");
    return f.any ? f.text.str() : "";
}

std::string criterion2() {
    Failure f;
    covdepth::SplitMix64 rng{20240517};
    const long qs[] = {2, 3, 4};
    for (int trial = 0; trial < 200; ++trial) {
        long q = qs[trial % 3];
        int k = 2 + trial % 2;
        int n = k + 1 + trial % (10 - k);
        auto g = random_full_rank(q, k, n, rng);
        Target t = Target::basis(trial % k);
        Rat alpha = covdepth::expectation(g, t, "alpha");
        Rat dp = covdepth::expectation(g, t, "dp");
        Rat beta = covdepth::expectation(g, t, "beta");
        if (alpha != dp || alpha != beta) {
            expect(f, false,
                   "engines disagree at trial " + std::to_string(trial) + " (q=" +
                       std::to_string(q) + ", k=" + std::to_string(k) + ", n=" +
                       std::to_string(n) + "): alpha=" + alpha.get_str() + " beta=" +
                       beta.get_str() + " dp=" + dp.get_str());
            break;
        }
        Rat tm = covdepth::t_max(g).t_max;
        record_tmax(g, tm, "random trial " + std::to_string(trial));
    }
    return f.any ? f.text.str() : "";
}

std::string criterion3() {
    Failure f;
    covdepth::SplitMix64 rng{77001};
    const long qs[] = {2, 3, 5};
    for (int trial = 0; trial < 100; ++trial) {
        long q = qs[trial % 3];
        int k = 2 + trial % 3;
        int n = k + 2 + trial % (12 - k - 1);
        auto g = random_full_rank(q, k, n, rng);
        auto rep = covdepth::tilde_expectations(g);
        Rat sum = 0;
        for (const auto& te : rep.per_target) sum += te.value;
        if (sum != Rat(static_cast<long>(k) * n)) {
            expect(f, false,
                   "column expectations sum to " + std::string(sum.get_str()) + " instead of " +
                       std::to_string(static_cast<long>(k) * n) + " at trial " +
                       std::to_string(trial));
            break;
        }
    }
    auto simplex4 = covdepth::simplex(2, 4);
    auto rep = covdepth::tilde_expectations(simplex4);
    Rat sum = 0;
    for (const auto& te : rep.per_target) sum += te.value;
    expect(f, sum == 60, "simplex dimension-4 column expectations sum to " +
                             std::string(sum.get_str()) + " instead of 60");
    return f.any ? f.text.str() : "";
}

std::string criterion4() {
    Failure f;
    struct Entry {
        std::string name;
        GenMatrix g;
        bool balanced;
    };
    std::vector<Entry> catalogue;
    for (int k : {2, 3, 4})
        catalogue.push_back({"simplex dim " + std::to_string(k), covdepth::simplex(2, k), true});
    catalogue.push_back({"hamming [7,4]", covdepth::hamming(2, 3), true});
    catalogue.push_back({"reed-muller (1,3)", covdepth::reed_muller_binary(1, 3), true});
    catalogue.push_back({"extended hamming [8,4]", covdepth::extended_hamming_binary(3), true});
    catalogue.push_back({"locally recoverable [9,4]", covdepth::lrc_example_f13(), true});
    catalogue.push_back({"sum code [9,7]", covdepth::lrc_sum_code_f13(), false});
    for (const auto& entry : catalogue) {
        auto rep = covdepth::is_recovery_balanced(entry.g);
        expect(f, rep.balanced == entry.balanced,
               entry.name + (entry.balanced ? " should be balanced" : " should not be balanced"));
        bool systematic = true;
        for (int r = 0; r < entry.g.rows() && systematic; ++r)
            for (int c = 0; c < entry.g.rows() && systematic; ++c)
                if (entry.g.entry(r, c) != (r == c ? 1 : 0)) systematic = false;
        Rat tm = covdepth::t_max(entry.g).t_max;
        record_tmax(entry.g, tm, entry.name);
        if (entry.balanced && systematic)
            expect(f, tm == entry.g.rows(),
                   entry.name + " is systematic and balanced but T_max != k");
    }
    return f.any ? f.text.str() : "";
}

std::string criterion5() {
    Failure f;
    {
        auto g = covdepth::hamming(2, 3);
        auto table = covdepth::hamming_beta_table(2, 3);
        auto fam = covdepth::minimal_recovery_sets(g, Target::column(0));
        auto enumerated = covdepth::beta_counts(fam);
        expect(f, table.family_size == fam.size(), "hamming family size mismatch");
        expect(f, table.counts == enumerated.counts, "hamming subfamily counts mismatch");
    }
    for (auto [q, k] : {std::pair<long, long>{2, 3}, {3, 2}}) {
        covdepth::QBinomialContext ctx(q);
        auto g = covdepth::simplex(q, k);
        auto scan = oracle::alpha_by_scan(g, Target::column(0));
        for (long s = 0; s <= g.cols(); ++s)
            if (covdepth::simplex_alpha(ctx, k, s) != scan[static_cast<size_t>(s)]) {
                expect(f, false, "simplex subset count mismatch at q=" + std::to_string(q) +
                                     ", s=" + std::to_string(s));
                break;
            }
    }
    expect(f, covdepth::ext_mds_tmax(2, 3, 2) == frac(23, 12),
           "replicated parity closed form != 23/12");
    {
        covdepth::QBinomialContext ctx(2);
        auto ext = covdepth::append_identities(covdepth::simplex(2, 3), 2);
        Rat closed = covdepth::ext_simplex_tmax(ctx, 3, 2);
        Rat enumerated = covdepth::t_max(ext).t_max;
        expect(f, closed == enumerated, "replicated simplex closed form != enumeration at x=2");
        record_tmax(ext, enumerated, "replicated simplex x=2");
    }
    return f.any ? f.text.str() : "";
}

std::string criterion6() {
    Failure f;
    Rat tol = frac(1, 1000000000000L);
    long prev_q = -1;
    std::optional<covdepth::QBinomialContext> ctx;
    for (int i = 0; i < refcurves::kSimplexCurveCount; ++i) {
        const auto& pt = refcurves::kSimplexCurves[i];
        if (pt.q != prev_q) {
            ctx.emplace(pt.q);
            prev_q = pt.q;
        }
        Rat normalized = covdepth::ext_simplex_tmax(*ctx, 4, pt.x) / 4;
        if (pt.x == 1 && normalized != 1) {
            expect(f, false, "x=1 not normalized to 1 at q=" + std::to_string(pt.q));
            continue;
        }
        Rat ref = covdepth::rat_from_decimal(pt.normalized);
        Rat diff = normalized - ref;
        if (diff < 0) diff = -diff;
        if (diff > tol) {
            expect(f, false,
                   "curve point q=" + std::to_string(pt.q) + ", x=" + std::to_string(pt.x) +
                       " off by more than 1e-12");
        }
    }
    return f.any ? f.text.str() : "";
}

std::string criterion7() {
    Failure f;
    for (auto [k, n] : {std::pair<int, int>{2, 3}, {2, 4}}) {
        covdepth::QBinomialContext ctx(2);
        Rat gen = covdepth::avg_general(ctx, k, n);
        Rat sys = covdepth::avg_systematic(ctx, k, n);
        expect(f, gen == oracle::average_by_scan(2, k, n, false),
               "general average mismatch at n=" + std::to_string(n));
        expect(f, sys == oracle::average_by_scan(2, k, n, true),
               "systematic average mismatch at n=" + std::to_string(n));
        expect(f, sys <= gen, "systematic average above the general one at n=" + std::to_string(n));
    }
    return f.any ? f.text.str() : "";
}

std::string criterion8() {
    Failure f;
    for (long n = 1; n <= 30 && !f.any; ++n)
        for (long s = 0; s <= n - 1; ++s) {
            Rat sum = 0;
            for (long j = 0; j <= s; ++j) {
                Rat term = Rat(covdepth::binomial(s, j) * n) / Rat(n - s + j);
                sum += (j % 2 == 0) ? term : Rat(-term);
            }
            if (sum != Rat(Int(1), covdepth::binomial(n - 1, s))) {
                expect(f, false, "alternating identity fails at n=" + std::to_string(n) +
                                     ", s=" + std::to_string(s));
                break;
            }
        }
    return f.any ? f.text.str() : "";
}

std::string criterion9() {
    Failure f;
    for (const auto& rec : g_tmax_records) {
        Rat bound = covdepth::bounds(rec.q, rec.n, rec.k).bound_rate;
        if (rec.value < bound) {
            expect(f, false, "T_max below the rate bound for " + rec.origin);
            break;
        }
    }
    expect(f, !g_tmax_records.empty(), "no recorded values to check");
    auto search = covdepth::random_search(2, 2, 5, 500, 424242, false);
    expect(f, search.best_t_max.has_value() && *search.best_t_max <= frac(23, 12),
           "random search missed a matrix at least as good as 23/12");
    return f.any ? f.text.str() : "";
}

std::string criterion10() {
    Failure f;
    struct Probe {
        std::string name;
        GenMatrix g;
        Target t;
        double exact;
    };
    std::vector<Probe> probes = {
        {"running example", running_example(), Target::basis(0), 23.0 / 12.0},
        {"hamming [7,4]", covdepth::hamming(2, 3), Target::column(0), 4.0},
    };
    for (const auto& probe : probes) {
        covdepth::SimConfig cfg;
        cfg.seed = 1729;
        cfg.trials = 1000000;
        cfg.threads = 1;
        auto serial = covdepth::simulate(probe.g, probe.t, cfg);
        cfg.threads = 4;
        auto parallel = covdepth::simulate(probe.g, probe.t, cfg);
        expect(f, serial.mean == parallel.mean && serial.stddev == parallel.stddev,
               probe.name + ": thread count changed the result");
        expect(f, std::abs(serial.mean - probe.exact) <= 4.0 * serial.std_error,
               probe.name + ": estimate outside four standard errors");
    }
    return f.any ? f.text.str() : "";
}

std::string criterion11() {
    Failure f;
    auto parity = covdepth::mds_rs(2, 2, 3);
    auto parity_rep = covdepth::paut_transitive(parity);
    expect(f, parity_rep.transitive == covdepth::TriState::Yes, "parity code not transitive");
    auto asym = GenMatrix::code_matrix(Field::get(3), 2, 4, {1, 0, 1, 1, 0, 1, 1, 2});
    auto asym_rep = covdepth::paut_transitive(asym);
    expect(f, asym_rep.transitive == covdepth::TriState::No,
           "the asymmetric MDS matrix reports a transitive group");
    bool first_moves_to_second = false;
    for (const auto& orbit : asym_rep.orbits) {
        bool has0 = false, has1 = false;
        for (int c : orbit) {
            has0 |= c == 0;
            has1 |= c == 1;
        }
        if (has0 && has1) first_moves_to_second = true;
    }
    expect(f, !first_moves_to_second, "a permutation maps column 1 to column 2");
    // Transitive implies balanced on everything probed here.
    std::vector<std::pair<std::string, GenMatrix>> probed = {
        {"parity [3,2]", parity},
        {"identity dim 3", covdepth::identity_code(2, 3)},
        {"hamming [7,4]", covdepth::hamming(2, 3)},
        {"simplex dim 3", covdepth::simplex(2, 3)},
    };
    for (const auto& [name, g] : probed) {
        auto rep = covdepth::paut_transitive(g);
        if (rep.transitive != covdepth::TriState::Yes) continue;
        expect(f, covdepth::is_recovery_balanced(g).balanced,
               name + " is transitive but not balanced");
    }
    return f.any ? f.text.str() : "";
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string label;
        std::function<std::string()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "three engines reproduce 23/12 on the running example", criterion1},
        {2, "independent engines agree on 200 random matrices", criterion2},
        {3, "column expectations sum to k times n", criterion3},
        {4, "balance catalogue and T_max = k for systematic balanced codes", criterion4},
        {5, "closed forms match enumeration", criterion5},
        {6, "replicated simplex curves match the frozen references", criterion6},
        {7, "matrix averages match brute force", criterion7},
        {8, "alternating binomial identity up to n = 30", criterion8},
        {9, "rate lower bound holds for every exact value", criterion9},
        {10, "simulation calibrated and thread count invariant", criterion10},
        {11, "permutation orbit probes", criterion11},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string problem;
        try {
            problem = c.run();
        } catch (const std::exception& e) {
            problem = std::string("exception: ") + e.what();
        }
        auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        if (problem.empty()) {
            line << "[PASS] criterion " << c.id << ": " << c.label << " (" << seconds.count()
                 << "s)";
        } else {
            line << "[FAIL] criterion " << c.id << ": " << c.label << ": " << problem << " ("
                 << seconds.count() << "s)";
            ++failures;
        }
        std::cout << line.str() << std::endl;
    }
    if (failures != 0) std::cout << failures << " criteria failed" << std::endl;
    return failures == 0 ? 0 : 1;
}
