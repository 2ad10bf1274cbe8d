#include <doctest.h>

#include <cmath>

#include "coopic/bounds.hpp"
#include "coopic/fm.hpp"
#include "coopic/rng.hpp"
#include "coopic/sweep.hpp"

using namespace coopic;

namespace {

IneqSystem tiny(std::vector<std::string> vars) {
    IneqSystem s;
    s.vars = std::move(vars);
    return s;
}

// Feasibility interval for `var` at a fixed assignment of the others.
bool extendable(const IneqSystem& sys, const std::string& var,
                const std::vector<double>& partial) {
    const int vi = sys.var_index(var);
    double lo = -1e30, hi = 1e30;
    for (const auto& row : sys.rows) {
        double c = row.a[static_cast<std::size_t>(vi)];
        double rest = 0.0;
        std::size_t k = 0;
        for (std::size_t j = 0; j < sys.vars.size(); ++j) {
            if (static_cast<int>(j) == vi) continue;
            rest += row.a[j] * partial[k++];
        }
        const double slack = row.rhs - rest;
        if (std::abs(c) <= 1e-12) {
            if (slack < -1e-9) return false;
        } else if (c > 0) {
            hi = std::min(hi, slack / c);
        } else {
            lo = std::max(lo, slack / c);
        }
    }
    return lo <= hi + 1e-9;
}

bool satisfies(const IneqSystem& sys, const std::vector<double>& x) {
    for (const auto& row : sys.rows) {
        double lhs = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) lhs += row.a[j] * x[j];
        if (lhs > row.rhs + 1e-9) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("fourier_motzkin") {

TEST_CASE("single-pair elimination") {
    auto s = tiny({"x", "y"});
    s.add_named_row({{"x", 1}, {"y", 1}}, 2);
    s.add_named_row({{"x", -1}}, 0);
    const auto out = eliminate(s, "x");
    REQUIRE(out.vars == std::vector<std::string>{"y"});
    REQUIRE(out.rows.size() == 1);
    CHECK(out.rows[0].a[0] == doctest::Approx(1.0));
    CHECK(out.rows[0].rhs == doctest::Approx(2.0));
}

TEST_CASE("infeasibility is preserved as a contradictory row") {
    auto s = tiny({"x"});
    s.add_named_row({{"x", 1}}, 1);
    s.add_named_row({{"x", -1}}, -3);
    const auto out = eliminate(s, "x");
    REQUIRE(out.rows.size() == 1);
    CHECK(out.rows[0].rhs < 0.0);  // 0 <= negative
}

TEST_CASE("projection soundness by sampling") {
    SplitMix64 rng(211);
    // A 3-variable system with both signs on z.
    auto s = tiny({"R1", "R2", "z"});
    s.add_named_row({{"R1", 1}, {"z", -1}}, 2);
    s.add_named_row({{"z", 1}, {"R2", 1}}, 5);
    s.add_named_row({{"R1", 1}, {"R2", 1}, {"z", 1}}, 8);
    s.add_named_row({{"z", -1}}, 0);
    s.add_named_row({{"R1", -1}}, 0);
    s.add_named_row({{"R2", -1}}, 0);
    const auto proj = eliminate(s, "z");

    int feasible_checked = 0, infeasible_checked = 0;
    for (int i = 0; i < 1000; ++i) {
        const std::vector<double> pt = {rng.uniform(-1, 12), rng.uniform(-1, 12)};
        if (satisfies(proj, pt)) {
            REQUIRE(extendable(s, "z", pt));
            ++feasible_checked;
        } else {
            REQUIRE_FALSE(extendable(s, "z", pt));
            ++infeasible_checked;
        }
    }
    CHECK(feasible_checked > 100);
    CHECK(infeasible_checked > 100);
}

TEST_CASE("elimination order does not change the projection") {
    SweepConfig cfg;
    cfg.kind = SweepKind::Weak;
    cfg.seed = 99;
    for (std::uint64_t i = 0; i < 25; ++i) {
        const auto p = draw_scenario(cfg, i);
        const auto sys = two_round_system(p, StrategyOrder::TwoRound212);
        const auto a = system_to_region(eliminate(eliminate(sys, "R1c"), "R2c"));
        const auto b = system_to_region(eliminate(eliminate(sys, "R2c"), "R1c"));
        REQUIRE(regions_equal(a, b, 1e-9));
    }
}

TEST_CASE("reduce removes redundant rows only") {
    auto s = tiny({"R1", "R2"});
    s.add_named_row({{"R1", 1}}, 1);
    s.add_named_row({{"R1", 1}}, 2);  // redundant
    s.add_named_row({{"R2", 1}}, 1);
    s.add_named_row({{"R1", -1}}, 0);
    s.add_named_row({{"R2", -1}}, 0);
    const auto out = reduce(s);
    int r1_rows = 0;
    for (const auto& row : out.rows)
        if (row.a[0] > 0.5) {
            ++r1_rows;
            CHECK(row.rhs == doctest::Approx(1.0));
        }
    CHECK(r1_rows == 1);

    auto t = tiny({"R1", "R2"});
    t.add_named_row({{"R1", 1}, {"R2", 1}}, 4);
    t.add_named_row({{"R1", 1}}, 2);
    t.add_named_row({{"R2", 1}}, 2);
    const auto kept = reduce(t);
    CHECK(kept.rows.size() == 3);  // all active

    REQUIRE(regions_equal(system_to_region(reduce(s)), system_to_region(s), 1e-9));
}

TEST_CASE("reduce rejects systems with other live variables") {
    auto s = tiny({"R1", "R2", "z"});
    s.add_named_row({{"R1", 1}, {"z", 1}}, 1);
    s.add_named_row({{"R2", 1}}, 1);
    CHECK_THROWS_AS(reduce(s), std::invalid_argument);
}

TEST_CASE("weak-regime projection matches the direct region") {
    SweepConfig cfg;
    cfg.kind = SweepKind::Weak;
    cfg.seed = 4242;
    for (std::uint64_t i = 0; i < 50; ++i) {
        const auto p = draw_scenario(cfg, i);
        for (auto order : {StrategyOrder::TwoRound212, StrategyOrder::TwoRound121}) {
            auto sys = two_round_system(p, order);
            sys = eliminate(sys, "R1c");
            sys = eliminate(sys, "R2c");
            const auto projected = system_to_region(sys);
            REQUIRE(regions_equal(projected, build_two_round(p, order), 1e-6));
        }
    }
}

TEST_CASE("mixed-regime projection matches the direct region") {
    SweepConfig cfg;
    cfg.kind = SweepKind::Mixed;
    cfg.seed = 777;
    for (std::uint64_t i = 0; i < 50; ++i) {
        const auto p = draw_scenario(cfg, i);
        const bool m12 = classify(p) == Regime::Mixed12;
        const auto order = m12 ? StrategyOrder::TwoRound212 : StrategyOrder::TwoRound121;
        auto sys = two_round_system(p, order);
        sys = eliminate(sys, m12 ? "R1c" : "R2c");
        const auto projected = system_to_region(sys);
        REQUIRE(regions_equal(projected, build_two_round(p, order), 1e-6));
    }
}

TEST_CASE("reduced weak projection has at most the listed row families") {
    SweepConfig cfg;
    cfg.kind = SweepKind::Weak;
    cfg.seed = 31337;
    for (std::uint64_t i = 0; i < 10; ++i) {
        const auto p = draw_scenario(cfg, i);
        auto sys = two_round_system(p, StrategyOrder::TwoRound212);
        sys = eliminate(eliminate(sys, "R1c"), "R2c");
        std::vector<IneqSystem::Row> with_axes = sys.rows;
        sys.add_named_row({{"R1", -1}}, 0);
        sys.add_named_row({{"R2", -1}}, 0);
        const auto red = reduce(sys);
        std::size_t active = 0;
        for (const auto& row : red.rows)
            if (row.a[0] > -1e-9 && row.a[1] > -1e-9 && (row.a[0] > 1e-9 || row.a[1] > 1e-9))
                ++active;
        // the direct construction lists 16 halfspaces; the projection's
        // non-redundant subset can never exceed it
        REQUIRE(active <= 16);
        REQUIRE(regions_equal(system_to_region(red), build_two_round(p, StrategyOrder::TwoRound212),
                              1e-6));
    }
}

}  // TEST_SUITE
