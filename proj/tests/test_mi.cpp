#include <doctest.h>

#include <cmath>

#include "coopic/channel.hpp"
#include "coopic/mi.hpp"
#include "coopic/rng.hpp"
#include "support/gaussian_oracle.hpp"

using namespace coopic;
using coopic::testing::GaussianOracle;

namespace {

ChannelParams random_params(SplitMix64& rng, double db_max = 80.0) {
    return ChannelParams::make(db_to_linear(rng.uniform(0, db_max)),
                               db_to_linear(rng.uniform(0, db_max)),
                               db_to_linear(rng.uniform(0, db_max)),
                               db_to_linear(rng.uniform(0, db_max)), rng.uniform(0, 6.283),
                               rng.uniform(0, 20), rng.uniform(0, 20));
}

struct Ctx {
    ChannelParams p;
    PowerSplit s;
    QuantizerConfig q1, q2;
    Ctx(const ChannelParams& params, const PowerSplit& split)
        : p(params), s(split), q1(distortion_and_xi(p, s, 1)), q2(distortion_and_xi(p, s, 2)) {}
    double t(MiTerm m, int dir) const { return eval_mi(m, dir, p, s, dir == 1 ? q2 : q1); }
};

bool term_applicable(MiTerm m, int dir, const PowerSplit& s) {
    if (m != MiTerm::OwnQuantGivenCrossFull && m != MiTerm::CrossFullQuantGivenOwn) return true;
    return (dir == 1 ? s.q2p : s.q1p) == 0.0;
}

}  // namespace

TEST_SUITE("mi") {

TEST_CASE("quantizer distortion and rate loss at a worked point") {
    const auto p = ChannelParams::make(100, 100, 10, 10, 0, 1, 1);
    const auto s = power_split(p);
    REQUIRE(s.q2p == doctest::Approx(0.1));
    const auto q = distortion_and_xi(p, s, 2);
    CHECK(q.delta == doctest::Approx(10.0));
    CHECK(q.xi == doctest::Approx(std::log2(1.6)).epsilon(1e-12));  // ~0.678
}

TEST_CASE("rate loss is exactly one bit without a private part") {
    SplitMix64 rng(101);
    for (int i = 0; i < 2000; ++i) {
        auto p = random_params(rng);
        if (p.snr2 > p.inr1) std::swap(p.snr2, p.inr1);  // force snr2 <= inr1
        const auto p2 = ChannelParams::make(p.snr1, p.snr2, p.inr1, p.inr2, p.theta, p.cb12,
                                            p.cb21);
        const auto q = distortion_and_xi(p2, power_split(p2), 2);
        REQUIRE(q.delta == 1.0);
        REQUIRE(q.xi == 1.0);  // bit-exact
    }
}

TEST_CASE("rate loss never exceeds log2(3)") {
    SplitMix64 rng(103);
    for (int i = 0; i < 5000; ++i) {
        const auto p = random_params(rng);
        const auto s = power_split(p);
        REQUIRE(distortion_and_xi(p, s, 1).xi <= std::log2(3.0) + 1e-12);
        REQUIRE(distortion_and_xi(p, s, 2).xi <= std::log2(3.0) + 1e-12);
    }
}

TEST_CASE("worked closed-form values") {
    SUBCASE("weak direct-link rate") {
        const auto p = ChannelParams::make(100, 100, 10, 10, 0, 1, 1);
        const Ctx c(p, power_split(p));  // inr1p = 1
        CHECK(c.t(MiTerm::OwnGivenCrossCommon, 1) == doctest::Approx(std::log2(51.0)));
    }
    SUBCASE("no private message means zero private rate") {
        const auto p = ChannelParams::make(10, 10, 100, 100, 0, 1, 1);
        const Ctx c(p, power_split(p));
        CHECK(c.t(MiTerm::OwnPrivate, 1) == 0.0);
    }
    SUBCASE("strong-regime quantized observation") {
        const auto p = ChannelParams::make(10, 10, 100, 100, 0, 1, 1);
        const Ctx c(p, all_common_split());
        CHECK(c.t(MiTerm::OwnQuantGivenCrossFull, 1) == doctest::Approx(std::log2(61.0)));
        CHECK(c.t(MiTerm::CrossFullQuantGivenOwn, 1) ==
              doctest::Approx(std::log2((2 + 2 * 100 + 10) / 2.0)));
    }
}

TEST_CASE("full-conditioning terms reject a private interferer") {
    const auto p = ChannelParams::make(100, 100, 10, 10, 0, 1, 1);
    const Ctx c(p, power_split(p));  // weak: both sides have private parts
    CHECK_THROWS_AS(c.t(MiTerm::OwnQuantGivenCrossFull, 1), std::invalid_argument);
    CHECK_THROWS_AS(c.t(MiTerm::CrossFullQuantGivenOwn, 2), std::invalid_argument);
}

TEST_CASE("all catalogued values are nonnegative") {
    SplitMix64 rng(107);
    for (int i = 0; i < 1000; ++i) {
        const auto p = random_params(rng);
        for (const auto& s : {power_split(p), all_common_split()}) {
            const Ctx c(p, s);
            for (MiTerm m : kAllMiTerms) {
                for (int dir : {1, 2}) {
                    if (!term_applicable(m, dir, s)) continue;
                    REQUIRE(c.t(m, dir) >= -1e-12);
                }
            }
        }
    }
}

TEST_CASE("degradation ordering of nested conditionings") {
    SplitMix64 rng(109);
    for (int i = 0; i < 2000; ++i) {
        const auto p = random_params(rng);
        const Ctx c(p, power_split(p));
        for (int dir : {1, 2}) {
            // fewer unknowns or more conditioning can only lower the rate
            REQUIRE(c.t(MiTerm::OwnPrivate, dir) <= c.t(MiTerm::OwnGivenCrossCommon, dir) + 1e-9);
            REQUIRE(c.t(MiTerm::SumGivenOwnCommon, dir) <= c.t(MiTerm::Sum, dir) + 1e-9);
            REQUIRE(c.t(MiTerm::OwnGivenCrossCommon, dir) <= c.t(MiTerm::Sum, dir) + 1e-9);
            REQUIRE(c.t(MiTerm::PeerPrivate, dir) <= c.t(MiTerm::PeerGivenCrossCommon, dir) + 1e-9);
            REQUIRE(c.t(MiTerm::PeerSumGivenOwnCommon, dir) <= c.t(MiTerm::PeerSum, dir) + 1e-9);
        }
    }
}

TEST_CASE("a quantized observation never hurts") {
    SplitMix64 rng(113);
    for (int i = 0; i < 2000; ++i) {
        const auto p = random_params(rng);
        const auto splits = {power_split(p), all_common_split()};
        for (const auto& s : splits) {
            const Ctx c(p, s);
            for (int dir : {1, 2}) {
                REQUIRE(c.t(MiTerm::SumQuant, dir) >= c.t(MiTerm::Sum, dir) - 1e-9);
                REQUIRE(c.t(MiTerm::SumQuantGivenOwnCommon, dir) >=
                        c.t(MiTerm::SumGivenOwnCommon, dir) - 1e-9);
            }
        }
    }
}

TEST_CASE("closed forms match the covariance-determinant oracle") {
    SplitMix64 rng(127);
    for (int i = 0; i < 1000; ++i) {
        const auto p = random_params(rng);
        for (const auto& s : {power_split(p), all_common_split()}) {
            const Ctx c(p, s);
            const GaussianOracle fwd(p, s, c.q1.delta, c.q2.delta);
            const GaussianOracle rev(p.swapped(), s.swapped(), c.q2.delta, c.q1.delta);
            for (MiTerm m : kAllMiTerms) {
                for (int dir : {1, 2}) {
                    if (!term_applicable(m, dir, s)) continue;
                    const double mine = c.t(m, dir);
                    const double ref = (dir == 1 ? fwd : rev).eval_term(m, 1);
                    REQUIRE(mine ==
                            doctest::Approx(ref).epsilon(1e-9).scale(std::max(1.0, ref)));
                }
            }
            // the rate-loss terms come from the same channel equations
            REQUIRE(c.q2.xi == doctest::Approx(fwd.xi(2)).epsilon(1e-9));
            REQUIRE(c.q1.xi == doctest::Approx(fwd.xi(1)).epsilon(1e-9));
        }
    }
}

}  // TEST_SUITE
