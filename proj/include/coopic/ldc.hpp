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
#include <string>
#include <vector>

namespace coopic {

/// Bit-level deterministic channel with q signal levels per user. Receiver i
/// observes y_i = S^(q - n_ii) x_i xor S^(q - n_ij) x_j over GF(2)^q, S the
/// down-shift matrix, so the top n levels of a signal land at the bottom n
/// positions. n_ij counts the levels of user j visible at receiver i. k12 and
/// k21 are the cooperation budgets in bits per use (receiver 1 -> 2, 2 -> 1).
struct LdcChannel {
    int q = 1;
    int n11 = 0, n22 = 0;  ///< direct links
    int n12 = 0, n21 = 0;  ///< cross links: user j's levels at receiver i
    int k12 = 0, k21 = 0;

    static LdcChannel make(int q, int n11, int n22, int n12, int n21, int k12, int k21);
    /// Parses "q=3 n11=3 n22=3 n12=2 n21=2 k12=1 k21=1" (spaces or commas).
    static LdcChannel parse(const std::string& text);
    std::string format() const;
};

/// Processing order of a scheme. OneRound: both receivers forward raw signal
/// combinations, then decode. TwoRound212: receiver 2 forwards raw
/// combinations first, receiver 1 decodes and may forward decoded bits, then
/// receiver 2 decodes (TwoRound121 mirrored).
enum class LdcOrder { OneRound, TwoRound212, TwoRound121 };

/// One bit sent over a cooperative link: either a GF(2) combination of the
/// sender's received-vector rows (RAW), or of bits the sender has decoded by
/// that point (DECODED; two-round second leg only).
struct LdcCoopBit {
    enum class Mode { Raw, Decoded } mode = Mode::Raw;
    std::vector<int> rows;      ///< RAW: 1-based row indices of the sender's y
    std::vector<int> bit_cols;  ///< DECODED: global bit columns (see LdcScheme)
};

/// A candidate linear transmission and cooperation scheme. Message bits are
/// named a1..aq (user 1, top-down) and b1..bq (user 2); globally bit a<l> is
/// column l-1 and b<l> is column q+l-1.
struct LdcScheme {
    LdcOrder order = LdcOrder::OneRound;
    std::uint32_t place1 = 0;  ///< bitmask over levels 1..q of user 1
    std::uint32_t place2 = 0;
    std::vector<LdcCoopBit> coop1;  ///< sent by receiver 1 (budget k12)
    std::vector<LdcCoopBit> coop2;  ///< sent by receiver 2 (budget k21)

    /// Textual form, one directive per line:
    ///   order one-round | 2-1-2 | 1-2-1
    ///   place1 a1 a3            (omit or leave empty for no bits)
    ///   place2 b1
    ///   coop1 raw 2+3           (xor of rows 2 and 3 of y1)
    ///   coop2 decoded a3        (xor of decoded bits)
    /// Lines starting with '#' are comments.
    static LdcScheme parse(const std::string& text, int q);
    std::string format(int q) const;
};

struct LdcCheckResult {
    bool ok = false;
    int r1 = 0, r2 = 0;  ///< bits per use decoded for each user
    std::string error;   ///< first failure (budget, staging, or undecodable bit)
};

/// Verifies a scheme by staged Gaussian elimination over GF(2): each receiver
/// in the declared order must uniquely resolve its own placed bits (and, for
/// a decoded-forwarding receiver, every bit its outgoing combinations
/// reference) from its received rows plus incoming cooperation bits.
LdcCheckResult check_scheme(const LdcChannel& ch, const LdcScheme& scheme);

struct LdcSearchResult {
    int sum = 0;
    int r1 = 0, r2 = 0;
    LdcScheme scheme;
};

/// Exhaustive search over bit placements and RAW cooperation combinations in
/// the one-round order, maximizing the sum rate. Placements are capped at
/// max_bits_per_user bits per user. Tractability bound q <= 6, k <= 2 is
/// enforced (throws std::invalid_argument beyond it).
LdcSearchResult search_raw(const LdcChannel& ch, int max_bits_per_user);

/// min{ n11 + n22 + k12 + k21, rank of the stacked 2q x 2q transfer matrix }:
/// a simple upper bound on any one-round sum rate.
int ldc_sum_upper_bound(const LdcChannel& ch);

}  // namespace coopic
