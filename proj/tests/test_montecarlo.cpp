#include <cmath>

#include "covdepth/codes.hpp"
#include "covdepth/exact.hpp"
#include "covdepth/matrix.hpp"
#include "covdepth/montecarlo.hpp"
#include "doctest.h"
#include "helpers.hpp"

using covdepth::Field;
using covdepth::GenMatrix;
using covdepth::SimConfig;
using covdepth::Target;
using testutil::thrown_kind;

namespace {

GenMatrix running_example() {
    return GenMatrix::code_matrix(Field::get(2), 2, 5, {1, 0, 1, 0, 1, 0, 1, 0, 1, 1});
}

}  // namespace

TEST_SUITE("montecarlo") {

    TEST_CASE("estimate lands inside four standard errors of the exact value") {
        auto g = running_example();
        SimConfig cfg;
        cfg.seed = 7;
        cfg.trials = 40000;
        auto r = covdepth::simulate(g, Target::basis(0), cfg);
        double exact = 23.0 / 12.0;
        CHECK(r.trials == 40000);
        CHECK(r.std_error > 0.0);
        CHECK(std::abs(r.mean - exact) <= 4.0 * r.std_error);

        auto h = covdepth::hamming(2, 3);
        auto rh = covdepth::simulate(h, Target::column(0), cfg);
        CHECK(std::abs(rh.mean - 4.0) <= 4.0 * rh.std_error);
    }

    TEST_CASE("results are identical for every thread count") {
        auto g = covdepth::hamming(2, 3);
        SimConfig base;
        base.seed = 42;
        base.trials = 20000;
        base.threads = 1;
        auto one = covdepth::simulate(g, Target::column(2), base);
        for (int threads : {2, 4, 8}) {
            SimConfig cfg = base;
            cfg.threads = threads;
            auto r = covdepth::simulate(g, Target::column(2), cfg);
            CHECK(r.mean == one.mean);
            CHECK(r.stddev == one.stddev);
            CHECK(r.stream_seeds == one.stream_seeds);
        }
        // And rerunning the same configuration changes nothing.
        auto again = covdepth::simulate(g, Target::column(2), base);
        CHECK(again.mean == one.mean);
    }

    TEST_CASE("seeds change the estimate, streams partition the trials") {
        auto g = running_example();
        SimConfig a;
        a.seed = 1;
        a.trials = 5000;
        SimConfig b = a;
        b.seed = 2;
        auto ra = covdepth::simulate(g, Target::basis(0), a);
        auto rb = covdepth::simulate(g, Target::basis(0), b);
        CHECK(ra.mean != rb.mean);
        CHECK(ra.stream_seeds.size() == 64);
        // More streams than trials collapses to one stream per trial.
        SimConfig tiny;
        tiny.trials = 5;
        tiny.streams = 64;
        auto rt = covdepth::simulate(g, Target::basis(0), tiny);
        CHECK(rt.stream_seeds.size() == 5);
        CHECK(rt.trials == 5);
    }

    TEST_CASE("targets recoverable from nothing cost zero draws") {
        auto g = GenMatrix::relaxed(Field::get(2), 2, 3, {1, 0, 0, 0, 1, 0});
        SimConfig cfg;
        cfg.trials = 100;
        auto r = covdepth::simulate(g, Target::column(2), cfg);
        CHECK(r.mean == 0.0);
        CHECK(r.stddev == 0.0);
    }

    TEST_CASE("every draw costs at least one read") {
        auto g = running_example();
        SimConfig cfg;
        cfg.trials = 500;
        cfg.seed = 3;
        auto r = covdepth::simulate(g, Target::basis(1), cfg);
        CHECK(r.mean >= 1.0);
    }

    TEST_CASE("bad configurations and unreachable targets are rejected") {
        auto g = running_example();
        SimConfig cfg;
        cfg.trials = 0;
        CHECK(thrown_kind([&] { covdepth::simulate(g, Target::basis(0), cfg); }) == "BadInput");
        SimConfig nostreams;
        nostreams.streams = 0;
        CHECK(thrown_kind([&] { covdepth::simulate(g, Target::basis(0), nostreams); }) ==
              "BadInput");
        auto z = GenMatrix::relaxed(Field::get(2), 2, 3, {0, 0, 0, 0, 0, 0});
        SimConfig ok;
        ok.trials = 10;
        CHECK(thrown_kind([&] { covdepth::simulate(z, Target::basis(0), ok); }) ==
              "TargetUnreachable");
    }

}  // TEST_SUITE
