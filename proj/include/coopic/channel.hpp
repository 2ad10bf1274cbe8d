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

#include <complex>
#include <string>

#include <nlohmann/json_fwd.hpp>

namespace coopic {

/// A channel scenario: direct/cross link power ratios (linear scale), the
/// aggregate phase of the 2x2 gain matrix, and the capacities of the two
/// noiseless receiver-cooperative links (bits per channel use).
///
/// All rate computations downstream depend on the four gain phases only
/// through theta = ang(h11) + ang(h22) - ang(h12) - ang(h21), so seven real
/// numbers describe a scenario completely.
struct ChannelParams {
    double snr1 = 1.0;  ///< |h11|^2
    double snr2 = 1.0;  ///< |h22|^2
    double inr1 = 0.0;  ///< |h12|^2, interference power seen at receiver 1
    double inr2 = 0.0;  ///< |h21|^2, interference power seen at receiver 2
    double theta = 0.0; ///< aggregate phase, normalized into [0, 2*pi)
    double cb12 = 0.0;  ///< link capacity receiver 1 -> receiver 2, bits/use
    double cb21 = 0.0;  ///< link capacity receiver 2 -> receiver 1, bits/use

    /// Validates ranges and normalizes theta. Throws std::invalid_argument.
    static ChannelParams make(double snr1, double snr2, double inr1, double inr2,
                              double theta, double cb12, double cb21);

    /// Same scenario expressed in dB for the power ratios.
    static ChannelParams from_db(double snr1_db, double snr2_db, double inr1_db,
                                 double inr2_db, double theta, double cb12, double cb21);

    /// Convenience constructor from the four complex gains.
    static ChannelParams from_gains(std::complex<double> h11, std::complex<double> h12,
                                    std::complex<double> h21, std::complex<double> h22,
                                    double cb12, double cb21);

    /// User indices 1 and 2 exchanged (theta is invariant).
    ChannelParams swapped() const;

    bool symmetric(double rel_tol = 1e-12) const;
};

/// Interference regime. Ties SNR == INR fall into the mixed/strong side.
enum class Regime { Weak, Mixed12, Mixed21, Strong };

const char* to_string(Regime r);

/// Regime of a scenario; exactly one tag applies for any parameters.
Regime classify(const ChannelParams& p);

/// Private/common power fractions and the derived private-signal powers.
/// q_ip = min{1, 1/inr_j} when snr_i > inr_j (private interference lands at
/// or below the noise floor), otherwise the whole message is common.
struct PowerSplit {
    double q1p = 0.0, q2p = 0.0;
    double snr1p = 0.0, snr2p = 0.0; ///< snr_i * q_ip
    double inr1p = 0.0, inr2p = 0.0; ///< inr_i * q_jp, always <= 1

    PowerSplit swapped() const;
};

PowerSplit power_split(const ChannelParams& p);

/// Split with both messages entirely common, regardless of regime.
PowerSplit all_common_split();

/// |h11*h22 - h12*h21|^2 as a function of the magnitudes and theta.
double det_term(const ChannelParams& p);

double db_to_linear(double db);
double linear_to_db(double lin);

/// Scenario JSON uses dB keys: snr1_db, snr2_db, inr1_db, inr2_db,
/// theta_rad, cb12_bits, cb21_bits.
ChannelParams scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const ChannelParams& p);

}  // namespace coopic
