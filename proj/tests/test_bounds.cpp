#include <doctest.h>

#include <cmath>

#include "coopic/bounds.hpp"
#include "coopic/rng.hpp"
#include "coopic/sweep.hpp"
#include "support/gaussian_oracle.hpp"

using namespace coopic;
using coopic::testing::GaussianOracle;
using Obs = coopic::testing::Obs;
using Src = coopic::testing::Src;

namespace {

ChannelParams sym_params(double snr, double inr, double cb, double theta = 0.0) {
    return ChannelParams::make(snr, snr, inr, inr, theta, cb, cb);
}

RateRegion mirror(const RateRegion& r) {
    std::vector<HalfSpace> hs;
    for (const auto& h : r.halfspaces()) hs.push_back({h.a2, h.a1, h.b});
    return RateRegion(std::move(hs));
}

double support(const RateRegion& r, double a1, double a2) {
    return max_weighted(r, a1, a2).value;
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("outer bound of isolated links is a rectangle") {
    const auto p = ChannelParams::make(100, 50, 0, 0, 0, 0, 0);
    const auto outer = build_outer(p);
    CHECK(outer.max_r1() == doctest::Approx(std::log2(101.0)));
    CHECK(outer.max_r2() == doctest::Approx(std::log2(51.0)));
    CHECK(support(outer, 1, 1) == doctest::Approx(std::log2(101.0) + std::log2(51.0)));
}

TEST_CASE("symmetric outer corner at a worked point") {
    const auto p = sym_params(100, 100, 2, M_PI / 2);
    const double expected = 0.5 * std::log2(201.0) + 0.5 * std::log2(1.0 + 100.0 / 101.0) + 1.0;
    CHECK(sym_upper(p) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(sym_upper(p) == doctest::Approx(5.322).epsilon(1e-3));
    CHECK(max_symmetric_rate(build_outer(p)) <= sym_upper(p) + 1e-9);
}

TEST_CASE("outer-bound rows match the covariance-oracle assembly") {
    SweepConfig cfg;
    cfg.kind = SweepKind::Cmac;  // unrestricted draws
    cfg.seed = 2024;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        const auto p = draw_scenario(cfg, i);
        const GaussianOracle o(p, power_split(p), 1.0, 1.0);
        const auto x1 = std::vector<Src>{Src::X1C, Src::X1P};
        const auto x2 = std::vector<Src>{Src::X2C, Src::X2P};

        const double r1 = o.mi_src(x1, {Obs::Y1}, x2) +
                          std::min(p.cb21, o.mi_src(x1, {Obs::Y2}, x2, {Obs::Y1}));
        const double r2 = o.mi_src(x2, {Obs::Y2}, x1) +
                          std::min(p.cb12, o.mi_src(x2, {Obs::Y1}, x1, {Obs::Y2}));
        const double etw = o.h_cond({Obs::Y1}, {Obs::S1T}, {}) +
                           o.h_cond({Obs::Y2}, {Obs::S2T}, {}) + p.cb21 + p.cb12;
        const double z12 = o.h_cond({Obs::Y2}, {}, {}) + o.h_cond({Obs::V1}, {Obs::S1}, {}) +
                           p.cb12;
        const double z21 = o.h_cond({Obs::Y1}, {}, {}) + o.h_cond({Obs::V2}, {Obs::S2}, {}) +
                           p.cb21;
        const double mimo = o.h_cond({Obs::Y1, Obs::Y2}, {}, {});
        const double sl21 = o.h_cond({Obs::Y2}, {Obs::S2}, {}) +
                            o.h_cond({Obs::V1}, {Obs::S1}, {}) + o.h_cond({Obs::Y1}, {}, {}) +
                            p.cb21 + p.cb12;
        const double sl12 = o.h_cond({Obs::Y1}, {Obs::S1}, {}) +
                            o.h_cond({Obs::V2}, {Obs::S2}, {}) + o.h_cond({Obs::Y2}, {}, {}) +
                            p.cb12 + p.cb21;
        const double cut21 = o.h_cond({Obs::Y1, Obs::Y2}, {Obs::S2T}, {}) +
                             o.h_cond({Obs::Y1}, {}, {}) + p.cb21;
        const double cut12 = o.h_cond({Obs::Y1, Obs::Y2}, {Obs::S1T}, {}) +
                             o.h_cond({Obs::Y2}, {}, {}) + p.cb12;

        const double expect[10] = {r1, r2, etw, z12, z21, mimo, sl21, sl12, cut21, cut12};
        const auto& hs = build_outer(p).halfspaces();
        REQUIRE(hs.size() == 10);
        // rows are emitted in this order: R1, R2, ETW, Z(cb12), Z(cb21),
        // MIMO, slope(2,1), slope(1,2), cut(2,1), cut(1,2)
        for (int k = 0; k < 10; ++k)
            REQUIRE(hs[static_cast<std::size_t>(k)].b ==
                    doctest::Approx(expect[k]).epsilon(1e-9));
    }
}

TEST_CASE("weak inner region with no cooperation reduces to plain superposition") {
    SweepConfig cfg;
    cfg.kind = SweepKind::Weak;
    cfg.seed = 555;
    cfg.cb_min = cfg.cb_max = 0.0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        const auto p = draw_scenario(cfg, i);
        const auto region = build_two_round(p, StrategyOrder::TwoRound212);

        const auto s = power_split(p);
        const QuantizerConfig q1 = distortion_and_xi(p, s, 1), q2 = distortion_and_xi(p, s, 2);
        auto t = [&](MiTerm m) { return eval_mi(m, 1, p, s, q2); };
        using T = MiTerm;
        std::vector<HalfSpace> hs;
        hs.push_back({1, 0, t(T::OwnGivenCrossCommon)});
        hs.push_back({1, 0, t(T::OwnPrivate) + t(T::PeerSumGivenOwnCommon)});
        hs.push_back({0, 1, t(T::PeerGivenCrossCommon)});
        hs.push_back({0, 1, t(T::CrossCommonGivenOwn) + t(T::PeerPrivate)});
        hs.push_back({1, 1, t(T::Sum) + t(T::PeerPrivate)});
        hs.push_back({1, 1, t(T::SumGivenOwnCommon) + t(T::PeerSumGivenOwnCommon)});
        hs.push_back({1, 1, t(T::OwnPrivate) + t(T::PeerSum)});
        hs.push_back({1, 1, t(T::OwnPrivate) + t(T::CrossCommonGivenOwn) +
                             t(T::PeerSumGivenOwnCommon)});
        hs.push_back({2, 1, t(T::Sum) + t(T::OwnPrivate) + t(T::PeerSumGivenOwnCommon)});
        hs.push_back({1, 2, t(T::SumGivenOwnCommon) + t(T::PeerSum) + t(T::PeerPrivate)});
        hs.push_back({1, 2, t(T::SumGivenOwnCommon) + t(T::CrossCommonGivenOwn) +
                             t(T::PeerSumGivenOwnCommon) + t(T::PeerPrivate)});
        REQUIRE(regions_equal(region, RateRegion(hs), 1e-9));
        (void)q1;
    }
}

TEST_CASE("two-round weak sum-rate row at a worked point") {
    const auto p = sym_params(100, 10, 1);
    const auto region = build_two_round(p, StrategyOrder::TwoRound212);
    const double xi = std::log2(1.6);
    const double expected = std::log2(111.0 / 2.0) + std::log2(6.0) + (1.0 - xi);
    CHECK(expected == doctest::Approx(8.701).epsilon(1e-3));
    bool found = false;
    for (const auto& h : region.halfspaces())
        found = found || (h.a1 == 1 && h.a2 == 1 && h.b == doctest::Approx(expected).epsilon(1e-12));
    CHECK(found);
}

TEST_CASE("two-round orders mirror each other under index swap") {
    SweepConfig cfg;
    cfg.kind = SweepKind::Weak;
    cfg.seed = 888;
    for (std::uint64_t i = 0; i < 100; ++i) {
        const auto p = draw_scenario(cfg, i);
        const auto a = build_two_round(p, StrategyOrder::TwoRound121);
        const auto b = mirror(build_two_round(p.swapped(), StrategyOrder::TwoRound212));
        REQUIRE(regions_equal(a, b, 1e-9));
        // symmetric channels: the two orders are mirror images of each other
        const auto ps = sym_params(p.snr1, p.inr1, p.cb12, p.theta);
        if (classify(ps) == Regime::Weak) {
            REQUIRE(regions_equal(build_two_round(ps, StrategyOrder::TwoRound121),
                                  mirror(build_two_round(ps, StrategyOrder::TwoRound212)), 1e-9));
        }
    }
}

TEST_CASE("strong-regime inner bound at a worked point") {
    const auto p = sym_params(10, 100, 1);
    REQUIRE(classify(p) == Regime::Strong);
    const auto inner = build_inner(p);
    CHECK(inner.max_r1() == doctest::Approx(std::log2(11.0)));  // min of the four arms
    CHECK(inner.max_r2() == doctest::Approx(std::log2(11.0)));
}

TEST_CASE("two-round construction rejects out-of-scope regimes") {
    CHECK_THROWS_AS(build_two_round(sym_params(10, 100, 1), StrategyOrder::TwoRound212),
                    std::invalid_argument);
    const auto mixed12 = ChannelParams::make(100, 10, 20, 10, 0, 1, 1);
    REQUIRE(classify(mixed12) == Regime::Mixed12);
    CHECK_NOTHROW(build_two_round(mixed12, StrategyOrder::TwoRound212));
    CHECK_THROWS_AS(build_two_round(mixed12, StrategyOrder::TwoRound121),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_two_round(mixed12, StrategyOrder::OneRound), std::invalid_argument);
}

TEST_CASE("inner regions stay inside outer bounds") {
    for (auto kind : {SweepKind::Weak, SweepKind::Mixed, SweepKind::Strong}) {
        SweepConfig cfg;
        cfg.kind = kind;
        cfg.seed = 1000 + static_cast<std::uint64_t>(kind);
        for (std::uint64_t i = 0; i < 400; ++i) {
            const auto p = draw_scenario(cfg, i);
            REQUIRE(contains(build_outer(p), build_inner(p), 1e-6).contained);
        }
    }
}

TEST_CASE("regime gap constants hold on modest sweeps") {
    struct Case {
        SweepKind kind;
        double gap;
    };
    for (const auto& c : {Case{SweepKind::Weak, 2.0}, Case{SweepKind::Mixed, 1.5},
                          Case{SweepKind::Strong, 1.0}, Case{SweepKind::Cmac, 1.0}}) {
        SweepConfig cfg;
        cfg.kind = c.kind;
        cfg.count = 400;
        cfg.seed = 31 + static_cast<std::uint64_t>(c.kind);
        cfg.gap_bits = c.gap;
        const auto report = gap_sweep(cfg);
        REQUIRE(report.violations.empty());
    }
}

TEST_CASE("per-slope inner/outer gap constants in the weak regime") {
    SweepConfig cfg;
    cfg.kind = SweepKind::Weak;
    cfg.seed = 99;
    const double sum_gap = std::log2(12.0);
    const double slope21_gap = std::log2(48.0);
    const double slope12_gap = std::log2(48.0);
    for (std::uint64_t i = 0; i < 400; ++i) {
        const auto p = draw_scenario(cfg, i);
        const auto inner = build_inner(p);
        for (const auto& h : build_outer(p).halfspaces()) {
            const double gap = h.b - support(inner, h.a1, h.a2);
            double allowed = 0.0;
            if (h.a1 == 1 && h.a2 == 0) allowed = 2.0;
            else if (h.a1 == 0 && h.a2 == 1) allowed = 2.0;
            else if (h.a1 == 1 && h.a2 == 1) allowed = sum_gap;
            else if (h.a1 == 2 && h.a2 == 1) allowed = slope21_gap;
            else allowed = slope12_gap;
            REQUIRE(gap <= allowed + 1e-6);
        }
    }
}

TEST_CASE("index swap mirrors every region") {
    SweepConfig cfg;
    cfg.kind = SweepKind::Cmac;
    cfg.seed = 12;
    for (std::uint64_t i = 0; i < 200; ++i) {
        const auto p = draw_scenario(cfg, i);
        REQUIRE(regions_equal(build_outer(p.swapped()), mirror(build_outer(p)), 1e-9));
        REQUIRE(regions_equal(build_inner(p.swapped()), mirror(build_inner(p)), 1e-9));
        const auto c = build_cmac(p);
        const auto cs = build_cmac(p.swapped());
        REQUIRE(regions_equal(cs.inner, mirror(c.inner), 1e-9));
        REQUIRE(regions_equal(cs.outer, mirror(c.outer), 1e-9));
    }
}

TEST_CASE("larger cooperative links never shrink the regions") {
    SweepConfig cfg;
    cfg.kind = SweepKind::Cmac;
    cfg.seed = 77;
    SplitMix64 rng(909);
    for (std::uint64_t i = 0; i < 200; ++i) {
        const auto p = draw_scenario(cfg, i);
        const auto bigger = ChannelParams::make(p.snr1, p.snr2, p.inr1, p.inr2, p.theta,
                                                p.cb12 + rng.uniform(0, 10),
                                                p.cb21 + rng.uniform(0, 10));
        REQUIRE(contains(build_outer(bigger), build_outer(p), 1e-9).contained);
        REQUIRE(contains(build_inner(bigger), build_inner(p), 1e-9).contained);
    }
}

TEST_CASE("compound MAC regions") {
    SUBCASE("huge cooperative links pin the sum rate at the MIMO row") {
        const auto p = ChannelParams::make(100, 80, 30, 20, 1.0, 60, 60);
        const auto c = build_cmac(p);
        const double mimo = std::log2(1 + 100 + 80 + 30 + 20 + det_term(p));
        CHECK(support(c.outer, 1, 1) == doctest::Approx(mimo).epsilon(1e-12));
    }
    SUBCASE("symmetric equal-strength links collapse the individual bound") {
        const auto p = sym_params(100, 100, 3);
        const auto c = build_cmac(p);
        const double expected = std::min(std::log2(101.0) + 3.0, std::log2(201.0));
        CHECK(c.outer.max_r1() == doctest::Approx(expected).epsilon(1e-12));
    }
    SUBCASE("one-bit gap on a modest sweep") {
        SweepConfig cfg;
        cfg.kind = SweepKind::Cmac;
        cfg.seed = 5150;
        for (std::uint64_t i = 0; i < 400; ++i) {
            const auto p = draw_scenario(cfg, i);
            const auto c = build_cmac(p);
            REQUIRE(contains(inflate(c.inner, 1.0), c.outer, 1e-6).contained);
            REQUIRE(contains(c.outer, c.inner, 1e-6).contained);
        }
    }
    SUBCASE("cmac outer rows match the covariance-oracle assembly") {
        SweepConfig cfg;
        cfg.kind = SweepKind::Cmac;
        cfg.seed = 41;
        for (std::uint64_t i = 0; i < 300; ++i) {
            const auto p = draw_scenario(cfg, i);
            const GaussianOracle o(p, power_split(p), 1.0, 1.0);
            const auto x1 = std::vector<Src>{Src::X1C, Src::X1P};
            const auto x2 = std::vector<Src>{Src::X2C, Src::X2P};
            const auto& hs = build_cmac(p).outer.halfspaces();
            REQUIRE(hs.size() == 5);
            const double r1 = std::min({o.mi_src(x1, {Obs::Y1}, x2) + p.cb21,
                                        o.mi_src(x1, {Obs::Y2}, x2) + p.cb12,
                                        o.mi_src(x1, {Obs::Y1, Obs::Y2}, x2)});
            const double r2 = std::min({o.mi_src(x2, {Obs::Y2}, x1) + p.cb12,
                                        o.mi_src(x2, {Obs::Y1}, x1) + p.cb21,
                                        o.mi_src(x2, {Obs::Y1, Obs::Y2}, x1)});
            REQUIRE(hs[0].b == doctest::Approx(r1).epsilon(1e-9));
            REQUIRE(hs[1].b == doctest::Approx(r2).epsilon(1e-9));
            REQUIRE(hs[2].b ==
                    doctest::Approx(o.h_cond({Obs::Y1}, {}, {}) + p.cb21).epsilon(1e-9));
            REQUIRE(hs[3].b ==
                    doctest::Approx(o.h_cond({Obs::Y2}, {}, {}) + p.cb12).epsilon(1e-9));
            REQUIRE(hs[4].b ==
                    doctest::Approx(o.h_cond({Obs::Y1, Obs::Y2}, {}, {})).epsilon(1e-9));
        }
    }
}

TEST_CASE("symmetric upper bound branch behavior") {
    SUBCASE("no cooperation keeps the Z-style term") {
        const auto p = sym_params(100, 10, 0);
        const double t2 = std::log2(1 + 10 + 100.0 / 11.0);
        CHECK(sym_upper(p) <= t2 + 1e-12);
    }
    SUBCASE("huge cooperation pins the phase-dependent term") {
        const auto p = sym_params(100, 10, 50, M_PI / 2);
        const double t4 = 0.5 * std::log2(1 + 200 + 20 + det_term(p));
        CHECK(sym_upper(p) == doctest::Approx(t4).epsilon(1e-12));
    }
    SUBCASE("asymmetric parameters are rejected") {
        CHECK_THROWS_AS(sym_upper(ChannelParams::make(100, 50, 10, 10, 0, 1, 1)),
                        std::invalid_argument);
        CHECK_THROWS_AS(sym_one_round(ChannelParams::make(100, 100, 10, 10, 0, 1, 2)),
                        std::invalid_argument);
    }
}

TEST_CASE("one-round symmetric rate equals its constraint-by-constraint value") {
    SUBCASE("above the cross-link strength") {
        const auto p = sym_params(100, 10, 1, M_PI / 2);
        const auto s = power_split(p);
        const auto q2 = distortion_and_xi(p, s, 2);
        auto t = [&](MiTerm m) { return eval_mi(m, 1, p, s, q2); };
        const double bon = std::max(p.cb21 - q2.xi, 0.0);
        const double c1 = std::min(t(MiTerm::SumGivenOwnCommon) + bon,
                                   t(MiTerm::SumQuantGivenOwnCommon));
        const double c2 = t(MiTerm::OwnGivenCrossCommon);
        const double c3 = 0.5 * std::min(t(MiTerm::Sum) + bon, t(MiTerm::SumQuant)) +
                          0.5 * t(MiTerm::OwnPrivate);
        CHECK(sym_one_round(p) == doctest::Approx(std::min({c1, c2, c3})).epsilon(1e-12));
    }
    SUBCASE("at or below the cross-link strength") {
        const auto p = sym_params(100, 100, 1, M_PI / 2);
        CHECK(sym_one_round(p) ==
              doctest::Approx(max_symmetric_rate(build_one_round(p))).epsilon(1e-12));
    }
}

TEST_CASE("one-round symmetric rate is within the stated distance of the upper bound") {
    SplitMix64 rng(80);
    int strong_seen = 0;
    for (int i = 0; i < 2000; ++i) {
        const auto p = sym_params(db_to_linear(rng.uniform(0, 80)), db_to_linear(rng.uniform(0, 80)),
                                  rng.uniform(0, 40), rng.uniform(0.01, 6.27));
        const double upper = sym_upper(p);
        const double achieved = sym_one_round(p);
        REQUIRE(achieved <= upper + 1e-9);
        REQUIRE(upper - achieved <= 3.0 + 1e-6);
        if (p.snr1 <= p.inr1) {
            REQUIRE(upper - achieved <= 1.0 + 1e-6);
            ++strong_seen;
        }
    }
    CHECK(strong_seen > 100);
}

}  // TEST_SUITE
