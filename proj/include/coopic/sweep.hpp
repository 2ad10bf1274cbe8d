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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "coopic/bounds.hpp"
#include "coopic/channel.hpp"
#include "coopic/region2d.hpp"

namespace coopic {

/// Which pair of regions a gap sweep compares.
enum class SweepKind { Weak, Mixed, Strong, Cmac };

const char* to_string(SweepKind k);
SweepKind sweep_kind_from_string(const std::string& s);

/// Randomized gap-verification sweep: `count` scenarios drawn log-uniformly
/// in dB (theta uniform), each checked for outer ⊆ inner ⊕ [0, gap]².
/// Identical configs (including seed) give byte-identical reports.
struct SweepConfig {
    SweepKind kind = SweepKind::Weak;
    std::uint64_t count = 10000;
    std::uint64_t seed = 1;
    double gap_bits = 2.0;
    double tol_bits = 1e-6;
    double snr_db_min = 0.0, snr_db_max = 80.0;
    double inr_db_min = 0.0, inr_db_max = 80.0;
    double cb_min = 0.0, cb_max = 40.0;

    void validate() const;  ///< throws std::invalid_argument
};

struct GapViolation {
    std::uint64_t sample_index = 0;
    ChannelParams params;
    RatePoint witness;
    HalfSpace violated;
    double excess_bits = 0.0;
};

struct GapReport {
    std::string algorithm = "splitmix64";
    SweepConfig config;
    std::uint64_t samples_checked = 0;
    std::uint64_t draws_used = 0;  ///< resampling cost of the regime filter
    std::vector<GapViolation> violations;
    double max_observed_excess = 0.0;  ///< worst normalized slack, signed
};

/// Scenario of sample `index` under this config: a pure function of
/// (seed, index), resampling until the regime filter matches.
ChannelParams draw_scenario(const SweepConfig& cfg, std::uint64_t index);

/// Number of draws `draw_scenario` consumed for this index.
std::uint64_t draw_cost(const SweepConfig& cfg, std::uint64_t index);

/// Inner/outer pair the sweep kind compares at these parameters.
struct RegionPair {
    RateRegion inner;
    RateRegion outer;
};
RegionPair regions_for(SweepKind kind, const ChannelParams& p);

GapReport gap_sweep(const SweepConfig& cfg);

nlohmann::json report_to_json(const GapReport& report);

}  // namespace coopic
