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

#include "coopic/channel.hpp"
#include "coopic/fm.hpp"
#include "coopic/mi.hpp"
#include "coopic/region2d.hpp"

namespace coopic {

/// Cooperative processing order. TwoRound_2_1_2: receiver 2 quantize-bins,
/// receiver 1 decodes and bin-forwards the common messages, receiver 2
/// decodes last. OneRound: both receivers quantize-bin simultaneously.
enum class StrategyOrder { TwoRound212, TwoRound121, OneRound };

const char* to_string(StrategyOrder o);

/// Capacity outer bound: individual-rate cut-set bounds, the bidirectional
/// genie sum bound, two Z-channel sum bounds, the full-cooperation MIMO sum
/// bound, and two bounds each of slope 2R1+R2 and R1+2R2. Exactly ten
/// halfspaces, some possibly redundant.
RateRegion build_outer(const ChannelParams& p);

/// Achievable region of the stated two-round order, as the explicit
/// halfspace list obtained by eliminating the common-rate variables.
/// Defined in the weak regime (both orders) and in the matching mixed
/// orientation (TwoRound212 for Mixed12, TwoRound121 for Mixed21); throws
/// std::invalid_argument otherwise.
RateRegion build_two_round(const ChannelParams& p, StrategyOrder order);

/// Achievable region of the one-round strategy with both messages common.
RateRegion build_one_round(const ChannelParams& p);

/// Regime-dispatched achievable region: weak -> convex hull of the union of
/// the two two-round regions; mixed -> the single matching two-round region;
/// strong -> the one-round region.
RateRegion build_inner(const ChannelParams& p);

struct CmacRegions {
    RateRegion inner;
    RateRegion outer;
};

/// Compound MAC with conferencing decoders (both receivers decode both
/// messages): cut-set outer bounds and the all-common one-round inner
/// region. Defined for every regime.
CmacRegions build_cmac(const ChannelParams& p);

/// Symmetric-capacity upper bound: the minimum of four closed-form terms.
/// Requires snr1 == snr2, inr1 == inr2, cb12 == cb21.
double sym_upper(const ChannelParams& p);

/// Largest symmetric rate the one-round strategy guarantees, via the
/// simplified sufficient conditions (superposition split when snr > inr,
/// all-common otherwise). Within 3 bits of sym_upper, within 1 bit when
/// snr <= inr. Requires symmetric parameters.
double sym_one_round(const ChannelParams& p);

/// Pre-elimination achievable-rate system over (R1, R2, R1c[, R2c]) for a
/// two-round order, with the three per-receiver constraints already replaced
/// by their first-argument lower bounds and every remaining min expanded
/// into two rows. Eliminating the common-rate variables must reproduce
/// build_two_round. Same domain restrictions as build_two_round.
IneqSystem two_round_system(const ChannelParams& p, StrategyOrder order);

}  // namespace coopic
