#include <vector>

#include "covdepth/closedform.hpp"
#include "covdepth/codes.hpp"
#include "covdepth/combinat.hpp"
#include "covdepth/errors.hpp"
#include "covdepth/exact.hpp"
#include "covdepth/matrix.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

using covdepth::Int;
using covdepth::QBinomialContext;
using covdepth::Rat;
using covdepth::Target;
using testutil::frac;
using testutil::thrown_kind;

namespace {

Rat abs_rat(Rat v) { return v < 0 ? Rat(-v) : v; }

}  // namespace

TEST_SUITE("closedform") {

    TEST_CASE("gaussian binomials satisfy the defining recurrence") {
        for (long q : {2L, 3L, 5L}) {
            QBinomialContext ctx(q);
            CHECK(ctx.qbinom(0, 0) == 1);
            CHECK(ctx.qbinom(3, -1) == 0);
            CHECK(ctx.qbinom(3, 4) == 0);
            for (long a = 1; a <= 8; ++a)
                for (long b = 0; b <= a; ++b) {
                    Int want = ctx.qbinom(a - 1, b - 1) + ctx.qpow(b) * ctx.qbinom(a - 1, b);
                    CHECK(ctx.qbinom(a, b) == want);
                }
            // Number of lines through the origin of a 3-space.
            CHECK(ctx.qbinom(3, 1) == (q * q * q - 1) / (q - 1));
        }
    }

    TEST_CASE("subspace surjection counts") {
        // phi(l, t) counts surjective maps onto an l-space from t generators:
        // phi(0, t) = 1, phi(1, t) = q^t - 1, phi(l, l) = order of GL_l.
        for (long q : {2L, 3L}) {
            QBinomialContext ctx(q);
            for (long t = 0; t <= 6; ++t) {
                CHECK(covdepth::phi(ctx, 0, t) == 1);
                Int qt = 1;
                for (long i = 0; i < t; ++i) qt *= q;
                CHECK(covdepth::phi(ctx, 1, t) == qt - 1);
            }
            CHECK(covdepth::phi(ctx, 2, 1) == 0);
            Int gl2 = (q * q - 1) * (q * q - q);
            CHECK(covdepth::phi(ctx, 2, 2) == gl2);
        }
    }

    TEST_CASE("mds subset counts match enumeration") {
        auto g = covdepth::mds_rs(5, 2, 4);
        auto scan = oracle::alpha_by_scan(g, Target::basis(0));
        for (long s = 0; s <= 4; ++s) CHECK(covdepth::mds_alpha(2, 4, s) == scan[s]);
        auto g2 = covdepth::mds_rs(7, 3, 5);
        auto scan2 = oracle::alpha_by_scan(g2, Target::basis(2));
        for (long s = 0; s <= 5; ++s) CHECK(covdepth::mds_alpha(3, 5, s, 2) == scan2[s]);
        CHECK(covdepth::mds_expectation(2, 4) == 2);
        CHECK(covdepth::mds_expectation(3, 5) == 3);
        CHECK(covdepth::mds_expectation(4, 9) == 4);
        CHECK(covdepth::expectation(g2, Target::basis(0), "dp") == 3);
    }

    TEST_CASE("hamming subfamily counts match the enumerated family") {
        for (auto [q, r] : {std::pair<long, long>{2, 3}, {3, 2}}) {
            auto g = covdepth::hamming(q, r);
            auto table = covdepth::hamming_beta_table(q, r);
            QBinomialContext ctx(q);
            for (int i : {0, g.cols() - 1}) {
                auto fam = covdepth::minimal_recovery_sets(g, Target::column(i));
                CHECK(fam.size() == table.family_size);
                auto enumerated = covdepth::beta_counts(fam);
                CHECK(enumerated.counts.size() == table.counts.size());
                for (const auto& [key, count] : enumerated.counts) {
                    REQUIRE(table.counts.count(key) == 1);
                    CHECK(table.counts.at(key) == count);
                    CHECK(covdepth::hamming_beta(ctx, r, i, key.first, key.second) == count);
                }
            }
        }
    }

    TEST_CASE("hamming expectation equals the code dimension") {
        CHECK(covdepth::hamming_expectation(2, 3) == 4);
        CHECK(covdepth::hamming_expectation(3, 2) == 2);
        CHECK(covdepth::hamming_expectation(2, 4) == 11);
        CHECK(covdepth::expectation(covdepth::hamming(2, 3), Target::column(3), "dp") == 4);
        CHECK(covdepth::expectation(covdepth::hamming(3, 2), Target::column(1), "beta") == 2);
        QBinomialContext ctx(2);
        CHECK(thrown_kind([&] { covdepth::hamming_beta(ctx, 3, 7, 1, 1); }) == "IndexOutOfRange");
        CHECK(thrown_kind([&] { covdepth::hamming_beta(ctx, 3, 0, 0, 1); }) == "IndexOutOfRange");
        CHECK(thrown_kind([] { covdepth::hamming_beta_table(2, 64); }) == "TooLarge");
    }

    TEST_CASE("simplex subset counts match enumeration") {
        {
            QBinomialContext ctx(2);
            auto g = covdepth::simplex(2, 3);
            auto scan = oracle::alpha_by_scan(g, Target::column(0));
            auto scan_last = oracle::alpha_by_scan(g, Target::column(6));
            for (long s = 0; s <= g.cols(); ++s) {
                CHECK(covdepth::simplex_alpha(ctx, 3, s) == scan[s]);
                CHECK(covdepth::simplex_alpha(ctx, 3, s) == scan_last[s]);
            }
        }
        {
            QBinomialContext ctx(3);
            auto g = covdepth::simplex(3, 2);
            auto scan = oracle::alpha_by_scan(g, Target::column(1));
            for (long s = 0; s <= g.cols(); ++s) CHECK(covdepth::simplex_alpha(ctx, 2, s) == scan[s]);
        }
    }

    TEST_CASE("simplex expectation equals its dimension") {
        CHECK(covdepth::simplex_expectation(2, 3) == 3);
        CHECK(covdepth::simplex_expectation(3, 2) == 2);
        CHECK(covdepth::simplex_expectation(2, 4) == 4);
        CHECK(covdepth::expectation(covdepth::simplex(2, 3), Target::column(2), "dp") == 3);
    }

    TEST_CASE("replicated mds closed form") {
        CHECK(covdepth::ext_mds_tmax(2, 3, 1) == 2);
        CHECK(covdepth::ext_mds_tmax(3, 5, 1) == 3);
        CHECK(covdepth::ext_mds_tmax(4, 6, 1) == 4);
        // x = 2 on the length-3 parity base is the running example.
        CHECK(covdepth::ext_mds_tmax(2, 3, 2) == frac(23, 12));
        // Larger replication against the subset engine.
        auto base = covdepth::mds_rs(7, 3, 5);
        for (long x : {2L, 3L}) {
            auto ext = covdepth::append_identities(base, static_cast<int>(x));
            CHECK(covdepth::ext_mds_tmax(3, 5, x) == covdepth::t_max(ext).t_max);
        }
    }

    TEST_CASE("replicated simplex closed form") {
        for (auto [q, k] : {std::pair<long, long>{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}}) {
            QBinomialContext ctx(q);
            CHECK(covdepth::ext_simplex_tmax(ctx, k, 1) == k);
        }
        {
            QBinomialContext ctx(2);
            auto ext = covdepth::append_identities(covdepth::simplex(2, 3), 2);
            REQUIRE(ext.cols() == 10);
            CHECK(covdepth::ext_simplex_tmax(ctx, 3, 2) == covdepth::t_max(ext).t_max);
        }
        {
            // Spot value from the frozen reference curves, dimension 4, x = 2.
            QBinomialContext ctx(2);
            Rat normalized = covdepth::ext_simplex_tmax(ctx, 4, 2) / 4;
            Rat ref = covdepth::rat_from_decimal("0.939872729394788218");
            CHECK(abs_rat(normalized - ref) < frac(1, 1000000000000L));
        }
    }

    TEST_CASE("average expectation over all full rank matrices") {
        for (auto [q, k, n] : {std::tuple<long, int, int>{2, 2, 2}, {2, 2, 3}, {2, 2, 4}}) {
            QBinomialContext ctx(q);
            CHECK(covdepth::avg_general(ctx, k, n) == oracle::average_by_scan(q, k, n, false));
        }
        QBinomialContext ctx3(3);
        CHECK(covdepth::avg_general(ctx3, 2, 3) == oracle::average_by_scan(3, 2, 3, false));
    }

    TEST_CASE("average expectation over systematic matrices") {
        for (auto [q, k, n] : {std::tuple<long, int, int>{2, 2, 3}, {2, 2, 4}}) {
            QBinomialContext ctx(q);
            CHECK(covdepth::avg_systematic(ctx, k, n) == oracle::average_by_scan(q, k, n, true));
        }
        QBinomialContext ctx3(3);
        CHECK(covdepth::avg_systematic(ctx3, 2, 3) == oracle::average_by_scan(3, 2, 3, true));
        // Systematic encodings come out ahead on average.
        for (auto [q, k, n] : {std::tuple<long, int, int>{2, 2, 3}, {2, 2, 4}, {3, 2, 3}}) {
            QBinomialContext ctx(q);
            CHECK(covdepth::avg_systematic(ctx, k, n) <= covdepth::avg_general(ctx, k, n));
        }
    }

}  // TEST_SUITE
