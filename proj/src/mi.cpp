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

#include "coopic/mi.hpp"

#include <cmath>
#include <stdexcept>

namespace coopic {

namespace {

double log2_ratio(double num, double den) { return std::log2(num / den); }

// Direction-resolved view of a scenario: "own" quantities are those of the
// receiver the constraints are written at, "peer" the other side. The
// quantized observation comes from the peer receiver.
struct SideView {
    double snr_o, inr_o, snr_p_o, inr_p_o;  // own receiver
    double snr_x, inr_x, snr_p_x, inr_p_x;  // peer receiver
    double q_own_priv;                      // private power fraction of own user
    double q_peer_priv;                     // private power fraction of peer user
    double delta;                           // peer quantizer distortion
    double det2;                            // |h11 h22 - h12 h21|^2
};

SideView make_view(int direction, const ChannelParams& p, const PowerSplit& s,
                   const QuantizerConfig& quant) {
    if (direction != 1 && direction != 2)
        throw std::invalid_argument("eval_mi: direction must be 1 or 2");
    const int expected_quantizer = (direction == 1) ? 2 : 1;
    if (quant.quantizing_receiver != expected_quantizer)
        throw std::invalid_argument("eval_mi: quantizer config does not match direction");
    SideView v{};
    if (direction == 1) {
        v = {p.snr1, p.inr1, s.snr1p, s.inr1p, p.snr2, p.inr2, s.snr2p, s.inr2p,
             s.q1p,  s.q2p,  quant.delta, 0.0};
    } else {
        v = {p.snr2, p.inr2, s.snr2p, s.inr2p, p.snr1, p.inr1, s.snr1p, s.inr1p,
             s.q2p,  s.q1p,  quant.delta, 0.0};
    }
    v.det2 = det_term(p);
    return v;
}

}  // namespace

const char* to_string(MiTerm t) {
    switch (t) {
        case MiTerm::OwnPrivate: return "I(x1;y1|x1c,x2c)";
        case MiTerm::OwnGivenCrossCommon: return "I(x1;y1|x2c)";
        case MiTerm::CrossCommonGivenOwn: return "I(x2c;y1|x1)";
        case MiTerm::Sum: return "I(x1,x2c;y1)";
        case MiTerm::SumGivenOwnCommon: return "I(x1,x2c;y1|x1c)";
        case MiTerm::SumQuant: return "I(x1,x2c;y1,yh2)";
        case MiTerm::SumQuantGivenOwnCommon: return "I(x1,x2c;y1,yh2|x1c)";
        case MiTerm::PeerPrivate: return "I(x2;y2|x1c,x2c)";
        case MiTerm::PeerGivenCrossCommon: return "I(x2;y2|x1c)";
        case MiTerm::PeerSumGivenOwnCommon: return "I(x1c,x2;y2|x2c)";
        case MiTerm::PeerSum: return "I(x1c,x2;y2)";
        case MiTerm::CrossCommonAtPeer: return "I(x1c;y2|x2)";
        case MiTerm::OwnQuantGivenCrossFull: return "I(x1;y1,yh2|x2)";
        case MiTerm::CrossFullQuantGivenOwn: return "I(x2;y1,yh2|x1)";
    }
    return "?";
}

QuantizerConfig distortion_and_xi(const ChannelParams& p, const PowerSplit& s,
                                  int quantizing_receiver) {
    QuantizerConfig q;
    q.quantizing_receiver = quantizing_receiver;
    if (quantizing_receiver == 2) {
        q.delta = std::max(s.snr2p, 1.0);
        q.xi = (p.snr2 > p.inr1)
                   ? std::log2((1.0 + q.delta) / q.delta +
                               s.snr2p / ((1.0 + s.inr1p) * q.delta))
                   : std::log2((1.0 + q.delta) / q.delta);
    } else if (quantizing_receiver == 1) {
        q.delta = std::max(s.snr1p, 1.0);
        q.xi = (p.snr1 > p.inr2)
                   ? std::log2((1.0 + q.delta) / q.delta +
                               s.snr1p / ((1.0 + s.inr2p) * q.delta))
                   : std::log2((1.0 + q.delta) / q.delta);
    } else {
        throw std::invalid_argument("distortion_and_xi: receiver must be 1 or 2");
    }
    return q;
}

double eval_mi(MiTerm term, int direction, const ChannelParams& p, const PowerSplit& s,
               const QuantizerConfig& quant) {
    const SideView v = make_view(direction, p, s, quant);
    const double d = v.delta;
    switch (term) {
        case MiTerm::OwnPrivate:
            return std::log2(1.0 + v.snr_p_o / (1.0 + v.inr_p_o));
        case MiTerm::OwnGivenCrossCommon:
            return std::log2(1.0 + v.snr_o / (1.0 + v.inr_p_o));
        case MiTerm::CrossCommonGivenOwn:
            return log2_ratio(1.0 + v.inr_o, 1.0 + v.inr_p_o);
        case MiTerm::Sum:
            return log2_ratio(1.0 + v.snr_o + v.inr_o, 1.0 + v.inr_p_o);
        case MiTerm::SumGivenOwnCommon:
            return log2_ratio(1.0 + v.snr_p_o + v.inr_o, 1.0 + v.inr_p_o);
        case MiTerm::SumQuant:
            return log2_ratio(
                (1.0 + d) * (1.0 + v.snr_o + v.inr_o) + v.snr_x + v.inr_x + v.det2,
                (1.0 + d) * (1.0 + v.inr_p_o) + v.snr_p_x);
        case MiTerm::SumQuantGivenOwnCommon:
            return log2_ratio(
                (1.0 + d) * (1.0 + v.snr_p_o + v.inr_o) + v.snr_x + v.inr_p_x +
                    v.det2 * v.q_own_priv,
                (1.0 + d) * (1.0 + v.inr_p_o) + v.snr_p_x);
        case MiTerm::PeerPrivate:
            return std::log2(1.0 + v.snr_p_x / (1.0 + v.inr_p_x));
        case MiTerm::PeerGivenCrossCommon:
            return std::log2(1.0 + v.snr_x / (1.0 + v.inr_p_x));
        case MiTerm::PeerSumGivenOwnCommon:
            return log2_ratio(1.0 + v.snr_p_x + v.inr_x, 1.0 + v.inr_p_x);
        case MiTerm::PeerSum:
            return log2_ratio(1.0 + v.snr_x + v.inr_x, 1.0 + v.inr_p_x);
        case MiTerm::CrossCommonAtPeer:
            return log2_ratio(1.0 + v.inr_x, 1.0 + v.inr_p_x);
        case MiTerm::OwnQuantGivenCrossFull:
            if (v.q_peer_priv != 0.0)
                throw std::invalid_argument(
                    "eval_mi: conditioning on the full interfering input requires it "
                    "to be all-common");
            return log2_ratio((1.0 + d) * (1.0 + v.snr_o) + v.inr_x, 1.0 + d);
        case MiTerm::CrossFullQuantGivenOwn:
            if (v.q_peer_priv != 0.0)
                throw std::invalid_argument(
                    "eval_mi: decoding the full interfering input requires it to be "
                    "all-common");
            return log2_ratio((1.0 + d) * (1.0 + v.inr_o) + v.snr_x, 1.0 + d);
    }
    throw std::invalid_argument("eval_mi: unknown term");
}

}  // namespace coopic
