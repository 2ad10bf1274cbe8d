// coopic — rate-region toolkit for the two-user Gaussian interference channel
// with conferencing decoders
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "coopic/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace coopic {

namespace {

double pos(double x) { return std::max(x, 0.0); }

double lg(double x) { return std::log2(x); }

// Direction-resolved term evaluation for one two-round order. Direction 1
// corresponds to TwoRound212 (quantizer at receiver 2, "own" = user 1).
struct TermEval {
    const ChannelParams& p;
    PowerSplit s;
    QuantizerConfig q1, q2;

    explicit TermEval(const ChannelParams& params, const PowerSplit& split)
        : p(params),
          s(split),
          q1(distortion_and_xi(params, split, 1)),
          q2(distortion_and_xi(params, split, 2)) {}

    double t(MiTerm term, int dir) const { return eval_mi(term, dir, p, s, dir == 1 ? q2 : q1); }
    double cb_fwd(int dir) const { return dir == 1 ? p.cb12 : p.cb21; }  // own -> peer
    double bonus(int dir) const {  // (C^B peer->own - xi_own)^+
        return dir == 1 ? pos(p.cb21 - q2.xi) : pos(p.cb12 - q1.xi);
    }
};

// Push a halfspace with coefficients written as (own, other) for direction 1;
// direction 2 mirrors the user roles.
void add(std::vector<HalfSpace>& hs, int dir, double a_own, double a_other, double b) {
    if (dir == 1) {
        hs.push_back({a_own, a_other, b});
    } else {
        hs.push_back({a_other, a_own, b});
    }
}

std::vector<HalfSpace> weak_two_round_halfspaces(const TermEval& e, int dir) {
    using T = MiTerm;
    std::vector<HalfSpace> hs;
    const double cbf = e.cb_fwd(dir);
    const double bon = e.bonus(dir);
    auto t = [&](T m) { return e.t(m, dir); };

    add(hs, dir, 1, 0, t(T::OwnGivenCrossCommon));
    add(hs, dir, 1, 0, t(T::OwnPrivate) + t(T::PeerSumGivenOwnCommon) + cbf);
    add(hs, dir, 0, 1, t(T::PeerGivenCrossCommon) + cbf);
    add(hs, dir, 0, 1, t(T::CrossCommonGivenOwn) + t(T::PeerPrivate));
    add(hs, dir, 1, 1, t(T::Sum) + t(T::PeerPrivate) + bon);
    add(hs, dir, 1, 1, t(T::SumQuant) + t(T::PeerPrivate));
    add(hs, dir, 1, 1, t(T::SumGivenOwnCommon) + t(T::PeerSumGivenOwnCommon) + cbf + bon);
    add(hs, dir, 1, 1, t(T::SumQuantGivenOwnCommon) + t(T::PeerSumGivenOwnCommon) + cbf);
    add(hs, dir, 1, 1, t(T::OwnPrivate) + t(T::PeerSum) + cbf);
    add(hs, dir, 1, 1,
        t(T::OwnPrivate) + t(T::CrossCommonGivenOwn) + t(T::PeerSumGivenOwnCommon) + cbf);
    add(hs, dir, 2, 1, t(T::Sum) + t(T::OwnPrivate) + t(T::PeerSumGivenOwnCommon) + cbf + bon);
    add(hs, dir, 2, 1, t(T::SumQuant) + t(T::OwnPrivate) + t(T::PeerSumGivenOwnCommon) + cbf);
    add(hs, dir, 1, 2, t(T::SumGivenOwnCommon) + t(T::PeerSum) + t(T::PeerPrivate) + cbf + bon);
    add(hs, dir, 1, 2,
        t(T::SumGivenOwnCommon) + t(T::CrossCommonGivenOwn) + t(T::PeerSumGivenOwnCommon) +
            t(T::PeerPrivate) + cbf + bon);
    add(hs, dir, 1, 2, t(T::SumQuantGivenOwnCommon) + t(T::PeerSum) + t(T::PeerPrivate) + cbf);
    add(hs, dir, 1, 2,
        t(T::SumQuantGivenOwnCommon) + t(T::CrossCommonGivenOwn) + t(T::PeerSumGivenOwnCommon) +
            t(T::PeerPrivate) + cbf);
    return hs;
}

std::vector<HalfSpace> mixed_two_round_halfspaces(const TermEval& e, int dir) {
    using T = MiTerm;
    std::vector<HalfSpace> hs;
    const double cbf = e.cb_fwd(dir);
    const double bon = e.bonus(dir);
    auto t = [&](T m) { return e.t(m, dir); };

    add(hs, dir, 1, 0, t(T::OwnGivenCrossCommon));
    add(hs, dir, 1, 0, t(T::OwnPrivate) + t(T::CrossCommonAtPeer) + cbf);
    add(hs, dir, 0, 1, t(T::CrossCommonGivenOwn));
    add(hs, dir, 0, 1, t(T::PeerGivenCrossCommon) + cbf);
    add(hs, dir, 1, 1, t(T::Sum) + bon);
    add(hs, dir, 1, 1, t(T::SumQuant));
    add(hs, dir, 1, 1, t(T::OwnPrivate) + t(T::PeerSum) + cbf);
    add(hs, dir, 1, 1, t(T::SumGivenOwnCommon) + t(T::CrossCommonAtPeer) + cbf + bon);
    add(hs, dir, 1, 1, t(T::SumQuantGivenOwnCommon) + t(T::CrossCommonAtPeer) + cbf);
    add(hs, dir, 1, 2, t(T::SumGivenOwnCommon) + t(T::PeerSum) + cbf + bon);
    add(hs, dir, 1, 2, t(T::SumQuantGivenOwnCommon) + t(T::PeerSum) + cbf);
    return hs;
}

// One-round constraints written at one receiver ("own" side of dir).
void one_round_receiver(std::vector<HalfSpace>& hs, const TermEval& e, int dir) {
    using T = MiTerm;
    const double bon = e.bonus(dir);
    auto t = [&](T m) { return e.t(m, dir); };
    add(hs, dir, 1, 0, t(T::OwnGivenCrossCommon) + bon);
    add(hs, dir, 1, 0, t(T::OwnQuantGivenCrossFull));
    add(hs, dir, 0, 1, t(T::CrossCommonGivenOwn) + bon);
    add(hs, dir, 0, 1, t(T::CrossFullQuantGivenOwn));
    add(hs, dir, 1, 1, t(T::Sum) + bon);
    add(hs, dir, 1, 1, t(T::SumQuant));
}

void require_two_round(const ChannelParams& p, StrategyOrder order, Regime* out_regime) {
    if (order == StrategyOrder::OneRound)
        throw std::invalid_argument("build_two_round: order must be a two-round tag");
    const Regime r = classify(p);
    if (r == Regime::Strong)
        throw std::invalid_argument("build_two_round: no two-round region in the strong regime");
    if (r == Regime::Mixed12 && order != StrategyOrder::TwoRound212)
        throw std::invalid_argument("build_two_round: Mixed12 requires the 2-1-2 order");
    if (r == Regime::Mixed21 && order != StrategyOrder::TwoRound121)
        throw std::invalid_argument("build_two_round: Mixed21 requires the 1-2-1 order");
    *out_regime = r;
}

}  // namespace

const char* to_string(StrategyOrder o) {
    switch (o) {
        case StrategyOrder::TwoRound212: return "2-1-2";
        case StrategyOrder::TwoRound121: return "1-2-1";
        case StrategyOrder::OneRound: return "one-round";
    }
    return "?";
}

RateRegion build_outer(const ChannelParams& p) {
    const double s1 = p.snr1, s2 = p.snr2, i1 = p.inr1, i2 = p.inr2;
    const double d2 = det_term(p);
    std::vector<HalfSpace> hs;
    hs.push_back({1, 0, lg(1 + s1) + std::min(p.cb21, lg(1 + i2 / (1 + s1)))});
    hs.push_back({0, 1, lg(1 + s2) + std::min(p.cb12, lg(1 + i1 / (1 + s2)))});
    hs.push_back({1, 1,
                  lg(1 + i1 + s1 / (1 + i2)) + lg(1 + i2 + s2 / (1 + i1)) + p.cb21 + p.cb12});
    hs.push_back({1, 1, lg(1 + s2 + i2) + lg(1 + s1 / (1 + i2)) + p.cb12});
    hs.push_back({1, 1, lg(1 + s1 + i1) + lg(1 + s2 / (1 + i1)) + p.cb21});
    hs.push_back({1, 1, lg(1 + s1 + s2 + i1 + i2 + d2)});
    hs.push_back({2, 1,
                  lg(1 + i2 + s2 / (1 + i1)) + lg(1 + s1 / (1 + i2)) + lg(1 + s1 + i1) +
                      p.cb21 + p.cb12});
    hs.push_back({1, 2,
                  lg(1 + i1 + s1 / (1 + i2)) + lg(1 + s2 / (1 + i1)) + lg(1 + s2 + i2) +
                      p.cb12 + p.cb21});
    hs.push_back({2, 1,
                  lg(1 + s2 / (1 + i1) + i2 + s1 + i1 / (1 + i1) + d2 / (1 + i1)) +
                      lg(1 + s1 + i1) + p.cb21});
    hs.push_back({1, 2,
                  lg(1 + s1 / (1 + i2) + i1 + s2 + i2 / (1 + i2) + d2 / (1 + i2)) +
                      lg(1 + s2 + i2) + p.cb12});
    return RateRegion(std::move(hs));
}

RateRegion build_two_round(const ChannelParams& p, StrategyOrder order) {
    Regime regime;
    require_two_round(p, order, &regime);
    const TermEval e(p, power_split(p));
    const int dir = (order == StrategyOrder::TwoRound212) ? 1 : 2;
    if (regime == Regime::Weak) return RateRegion(weak_two_round_halfspaces(e, dir));
    return RateRegion(mixed_two_round_halfspaces(e, dir));
}

RateRegion build_one_round(const ChannelParams& p) {
    const TermEval e(p, all_common_split());
    std::vector<HalfSpace> hs;
    one_round_receiver(hs, e, 1);
    one_round_receiver(hs, e, 2);
    return RateRegion(std::move(hs));
}

RateRegion build_inner(const ChannelParams& p) {
    switch (classify(p)) {
        case Regime::Weak:
            return conv_union(build_two_round(p, StrategyOrder::TwoRound212),
                              build_two_round(p, StrategyOrder::TwoRound121));
        case Regime::Mixed12:
            return build_two_round(p, StrategyOrder::TwoRound212);
        case Regime::Mixed21:
            return build_two_round(p, StrategyOrder::TwoRound121);
        case Regime::Strong:
            return build_one_round(p);
    }
    throw std::logic_error("build_inner: unreachable");
}

CmacRegions build_cmac(const ChannelParams& p) {
    const double s1 = p.snr1, s2 = p.snr2, i1 = p.inr1, i2 = p.inr2;
    std::vector<HalfSpace> hs;
    hs.push_back({1, 0, std::min({lg(1 + s1) + p.cb21, lg(1 + i2) + p.cb12, lg(1 + s1 + i2)})});
    hs.push_back({0, 1, std::min({lg(1 + s2) + p.cb12, lg(1 + i1) + p.cb21, lg(1 + s2 + i1)})});
    hs.push_back({1, 1, lg(1 + s1 + i1) + p.cb21});
    hs.push_back({1, 1, lg(1 + s2 + i2) + p.cb12});
    hs.push_back({1, 1, lg(1 + s1 + i1 + s2 + i2 + det_term(p))});
    return CmacRegions{build_one_round(p), RateRegion(std::move(hs))};
}

double sym_upper(const ChannelParams& p) {
    if (!p.symmetric()) throw std::invalid_argument("sym_upper: symmetric parameters required");
    const double snr = p.snr1, inr = p.inr1, cb = p.cb12;
    const double d2 = det_term(p);
    const double t1 = lg(1 + snr) + std::min(cb, lg(1 + inr / (1 + snr)));
    const double t2 = lg(1 + inr + snr / (1 + inr)) + cb;
    const double t3 = 0.5 * lg(1 + snr + inr) + 0.5 * lg(1 + snr / (1 + inr)) + 0.5 * cb;
    const double t4 = 0.5 * lg(1 + 2 * snr + 2 * inr + d2);
    return std::min({t1, t2, t3, t4});
}

double sym_one_round(const ChannelParams& p) {
    if (!p.symmetric())
        throw std::invalid_argument("sym_one_round: symmetric parameters required");
    if (p.snr1 <= p.inr1) return max_symmetric_rate(build_one_round(p));

    using T = MiTerm;
    const TermEval e(p, power_split(p));
    const double bon = e.bonus(1);
    const double c1 = std::min(e.t(T::SumGivenOwnCommon, 1) + bon,
                               e.t(T::SumQuantGivenOwnCommon, 1));
    const double c2 = e.t(T::OwnGivenCrossCommon, 1);
    const double c3 = 0.5 * std::min(e.t(T::Sum, 1) + bon, e.t(T::SumQuant, 1)) +
                      0.5 * e.t(T::OwnPrivate, 1);
    return std::min({c1, c2, c3});
}

IneqSystem two_round_system(const ChannelParams& p, StrategyOrder order) {
    Regime regime;
    require_two_round(p, order, &regime);
    const TermEval e(p, power_split(p));
    const int dir = (order == StrategyOrder::TwoRound212) ? 1 : 2;
    const double cbf = e.cb_fwd(dir);
    const double bon = e.bonus(dir);
    auto t = [&](MiTerm m) { return e.t(m, dir); };

    // Variable names are fixed as R1, R2 plus the common rates; "own" is the
    // user whose receiver decodes in the middle round.
    const std::string own = (dir == 1) ? "R1" : "R2";
    const std::string other = (dir == 1) ? "R2" : "R1";
    const std::string own_c = (dir == 1) ? "R1c" : "R2c";
    const std::string other_c = (dir == 1) ? "R2c" : "R1c";

    using T = MiTerm;
    IneqSystem sys;
    if (regime == Regime::Weak) {
        sys.vars = {"R1", "R2", "R1c", "R2c"};
        // Middle receiver: private, cross-common, their sum, own message, all.
        sys.add_named_row({{own, 1}, {own_c, -1}}, t(T::OwnPrivate));
        sys.add_named_row({{other_c, 1}}, t(T::CrossCommonGivenOwn));
        sys.add_named_row({{own, 1}, {own_c, -1}, {other_c, 1}}, t(T::SumGivenOwnCommon) + bon);
        sys.add_named_row({{own, 1}, {own_c, -1}, {other_c, 1}}, t(T::SumQuantGivenOwnCommon));
        sys.add_named_row({{own, 1}}, t(T::OwnGivenCrossCommon));
        sys.add_named_row({{own, 1}, {other_c, 1}}, t(T::Sum) + bon);
        sys.add_named_row({{own, 1}, {other_c, 1}}, t(T::SumQuant));
        // Final receiver: private, forwarded-common combinations.
        sys.add_named_row({{other, 1}, {other_c, -1}}, t(T::PeerPrivate));
        sys.add_named_row({{other, 1}, {other_c, -1}, {own_c, 1}},
                          t(T::PeerSumGivenOwnCommon) + cbf);
        sys.add_named_row({{other, 1}}, t(T::PeerGivenCrossCommon) + cbf);
        sys.add_named_row({{other, 1}, {own_c, 1}}, t(T::PeerSum) + cbf);
        // Nonnegative common and private rates.
        sys.add_named_row({{own_c, -1}}, 0.0);
        sys.add_named_row({{other_c, -1}}, 0.0);
        sys.add_named_row({{own_c, 1}, {own, -1}}, 0.0);
        sys.add_named_row({{other_c, 1}, {other, -1}}, 0.0);
    } else {
        // Mixed orientation: the "other" user is entirely common.
        sys.vars = {"R1", "R2", own_c};
        sys.add_named_row({{own, 1}, {own_c, -1}}, t(T::OwnPrivate));
        sys.add_named_row({{other, 1}}, t(T::CrossCommonGivenOwn));
        sys.add_named_row({{own, 1}, {own_c, -1}, {other, 1}}, t(T::SumGivenOwnCommon) + bon);
        sys.add_named_row({{own, 1}, {own_c, -1}, {other, 1}}, t(T::SumQuantGivenOwnCommon));
        sys.add_named_row({{own, 1}}, t(T::OwnGivenCrossCommon));
        sys.add_named_row({{own, 1}, {other, 1}}, t(T::Sum) + bon);
        sys.add_named_row({{own, 1}, {other, 1}}, t(T::SumQuant));
        sys.add_named_row({{own_c, 1}}, t(T::CrossCommonAtPeer) + cbf);
        sys.add_named_row({{other, 1}}, t(T::PeerGivenCrossCommon) + cbf);
        sys.add_named_row({{other, 1}, {own_c, 1}}, t(T::PeerSum) + cbf);
        sys.add_named_row({{own_c, -1}}, 0.0);
        sys.add_named_row({{own_c, 1}, {own, -1}}, 0.0);
    }
    return sys;
}

}  // namespace coopic
