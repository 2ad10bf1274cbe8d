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

namespace coopic {

/// Identifiers for the closed-form Gaussian mutual-information expressions
/// the rate regions are assembled from. Names read in the direction-1
/// orientation: "own" is receiver 1 / user 1, "peer" is receiver 2, the
/// quantized observation yhat comes from receiver 2 at distortion delta2.
/// Direction 2 evaluates the same expression with all indices exchanged.
enum class MiTerm {
    OwnPrivate,              ///< I(x1; y1 | x1c, x2c)
    OwnGivenCrossCommon,     ///< I(x1; y1 | x2c)
    CrossCommonGivenOwn,     ///< I(x2c; y1 | x1)
    Sum,                     ///< I(x1, x2c; y1)
    SumGivenOwnCommon,       ///< I(x1, x2c; y1 | x1c)
    SumQuant,                ///< I(x1, x2c; y1, yhat2)
    SumQuantGivenOwnCommon,  ///< I(x1, x2c; y1, yhat2 | x1c)
    PeerPrivate,             ///< I(x2; y2 | x1c, x2c)
    PeerGivenCrossCommon,    ///< I(x2; y2 | x1c)
    PeerSumGivenOwnCommon,   ///< I(x1c, x2; y2 | x2c)
    PeerSum,                 ///< I(x1c, x2; y2)
    CrossCommonAtPeer,       ///< I(x1c; y2 | x2)
    OwnQuantGivenCrossFull,  ///< I(x1; y1, yhat2 | x2), needs q2p == 0
    CrossFullQuantGivenOwn,  ///< I(x2; y1, yhat2 | x1), needs q2p == 0
};

constexpr MiTerm kAllMiTerms[] = {
    MiTerm::OwnPrivate,          MiTerm::OwnGivenCrossCommon,
    MiTerm::CrossCommonGivenOwn, MiTerm::Sum,
    MiTerm::SumGivenOwnCommon,   MiTerm::SumQuant,
    MiTerm::SumQuantGivenOwnCommon, MiTerm::PeerPrivate,
    MiTerm::PeerGivenCrossCommon, MiTerm::PeerSumGivenOwnCommon,
    MiTerm::PeerSum,             MiTerm::CrossCommonAtPeer,
    MiTerm::OwnQuantGivenCrossFull, MiTerm::CrossFullQuantGivenOwn,
};

const char* to_string(MiTerm t);

/// Quantize-forward configuration of one receiver: distortion fixed at
/// delta = max{snr_p, 1} of the quantizing receiver, and the resulting
/// rate loss xi charged against the cooperative link towards the other
/// receiver. xi is exactly 1 bit when the quantizer has no private part,
/// and never exceeds log2(3).
struct QuantizerConfig {
    int quantizing_receiver = 2;  ///< 1 or 2: whose signal yhat describes
    double delta = 1.0;           ///< quantization distortion, linear power
    double xi = 1.0;              ///< rate loss, bits
};

QuantizerConfig distortion_and_xi(const ChannelParams& p, const PowerSplit& s,
                                  int quantizing_receiver);

/// Value in bits of a catalogued expression. `direction` selects the
/// orientation (1 = as documented on MiTerm, 2 = indices exchanged); the
/// quantizer config must describe receiver 2 for direction 1 and receiver 1
/// for direction 2 when the term involves yhat. Terms conditioning on the
/// full interfering input require that input to be all-common and throw
/// std::invalid_argument otherwise.
double eval_mi(MiTerm term, int direction, const ChannelParams& p, const PowerSplit& s,
               const QuantizerConfig& quant);

}  // namespace coopic
