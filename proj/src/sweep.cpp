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

#include "coopic/sweep.hpp"

#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "coopic/rng.hpp"

namespace coopic {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr std::uint64_t kDrawCap = 100000;  // resampling cap per sample

bool kind_matches(SweepKind kind, Regime r) {
    switch (kind) {
        case SweepKind::Weak: return r == Regime::Weak;
        case SweepKind::Mixed: return r == Regime::Mixed12 || r == Regime::Mixed21;
        case SweepKind::Strong: return r == Regime::Strong;
        case SweepKind::Cmac: return true;
    }
    return false;
}

ChannelParams draw_impl(const SweepConfig& cfg, std::uint64_t index, std::uint64_t* draws) {
    SplitMix64 rng = SplitMix64::stream(cfg.seed, index);
    for (std::uint64_t attempt = 0; attempt < kDrawCap; ++attempt) {
        const double snr1 = db_to_linear(rng.uniform(cfg.snr_db_min, cfg.snr_db_max));
        const double snr2 = db_to_linear(rng.uniform(cfg.snr_db_min, cfg.snr_db_max));
        const double inr1 = db_to_linear(rng.uniform(cfg.inr_db_min, cfg.inr_db_max));
        const double inr2 = db_to_linear(rng.uniform(cfg.inr_db_min, cfg.inr_db_max));
        const double theta = rng.uniform(0.0, kTwoPi);
        const double cb12 = rng.uniform(cfg.cb_min, cfg.cb_max);
        const double cb21 = rng.uniform(cfg.cb_min, cfg.cb_max);
        const auto p = ChannelParams::make(snr1, snr2, inr1, inr2, theta, cb12, cb21);
        ++*draws;
        if (kind_matches(cfg.kind, classify(p))) return p;
    }
    throw std::runtime_error("draw_scenario: regime filter not matched within the draw cap");
}

}  // namespace

const char* to_string(SweepKind k) {
    switch (k) {
        case SweepKind::Weak: return "weak";
        case SweepKind::Mixed: return "mixed";
        case SweepKind::Strong: return "strong";
        case SweepKind::Cmac: return "cmac";
    }
    return "?";
}

SweepKind sweep_kind_from_string(const std::string& s) {
    if (s == "weak") return SweepKind::Weak;
    if (s == "mixed") return SweepKind::Mixed;
    if (s == "strong") return SweepKind::Strong;
    if (s == "cmac") return SweepKind::Cmac;
    throw std::invalid_argument("unknown regime: " + s);
}

void SweepConfig::validate() const {
    if (count < 1) throw std::invalid_argument("SweepConfig: count must be >= 1");
    if (!(gap_bits >= 0.0)) throw std::invalid_argument("SweepConfig: gap must be >= 0");
    if (!(tol_bits >= 0.0)) throw std::invalid_argument("SweepConfig: tol must be >= 0");
    if (snr_db_max < snr_db_min || inr_db_max < inr_db_min || cb_max < cb_min)
        throw std::invalid_argument("SweepConfig: empty sampling range");
}

ChannelParams draw_scenario(const SweepConfig& cfg, std::uint64_t index) {
    std::uint64_t draws = 0;
    return draw_impl(cfg, index, &draws);
}

std::uint64_t draw_cost(const SweepConfig& cfg, std::uint64_t index) {
    std::uint64_t draws = 0;
    draw_impl(cfg, index, &draws);
    return draws;
}

RegionPair regions_for(SweepKind kind, const ChannelParams& p) {
    if (kind == SweepKind::Cmac) {
        auto [inner, outer] = build_cmac(p);
        return RegionPair{std::move(inner), std::move(outer)};
    }
    return RegionPair{build_inner(p), build_outer(p)};
}

GapReport gap_sweep(const SweepConfig& cfg) {
    cfg.validate();
    GapReport report;
    report.config = cfg;
    report.max_observed_excess = -std::numeric_limits<double>::infinity();
    for (std::uint64_t i = 0; i < cfg.count; ++i) {
        std::uint64_t draws = 0;
        const ChannelParams p = draw_impl(cfg, i, &draws);
        report.draws_used += draws;
        const RegionPair pair = regions_for(cfg.kind, p);
        const ContainsResult res =
            contains(inflate(pair.inner, cfg.gap_bits), pair.outer, cfg.tol_bits);
        report.max_observed_excess = std::max(report.max_observed_excess, res.excess_bits);
        if (!res.contained)
            report.violations.push_back({i, p, res.witness, res.violated, res.excess_bits});
        ++report.samples_checked;
    }
    return report;
}

nlohmann::json report_to_json(const GapReport& report) {
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : report.violations) {
        violations.push_back({{"sample_index", v.sample_index},
                              {"params", scenario_to_json(v.params)},
                              {"witness", {v.witness.r1, v.witness.r2}},
                              {"halfspace", {{"a1", v.violated.a1}, {"a2", v.violated.a2},
                                             {"b", v.violated.b}}},
                              {"excess_bits", v.excess_bits}});
    }
    return nlohmann::json{{"algorithm", report.algorithm},
                          {"seed", report.config.seed},
                          {"regime", to_string(report.config.kind)},
                          {"count", report.config.count},
                          {"gap_bits", report.config.gap_bits},
                          {"tol_bits", report.config.tol_bits},
                          {"snr_db_range", {report.config.snr_db_min, report.config.snr_db_max}},
                          {"inr_db_range", {report.config.inr_db_min, report.config.inr_db_max}},
                          {"cb_bits_range", {report.config.cb_min, report.config.cb_max}},
                          {"samples_checked", report.samples_checked},
                          {"draws_used", report.draws_used},
                          {"max_observed_excess", report.max_observed_excess},
                          {"violations", std::move(violations)}};
}

}  // namespace coopic
