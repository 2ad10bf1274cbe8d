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

#include "coopic/gdof.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "coopic/bounds.hpp"
#include "coopic/channel.hpp"

namespace coopic {

double gdof(const GdofQuery& q) {
    if (!(q.alpha >= 0.0) || !(q.kappa >= 0.0) || !std::isfinite(q.alpha) ||
        !std::isfinite(q.kappa))
        throw std::invalid_argument("gdof: alpha, kappa must be finite and >= 0");
    if (q.alpha < 1.0) {
        return std::min({1.0, std::max(q.alpha, 1.0 - q.alpha) + q.kappa,
                         1.0 - (q.alpha - q.kappa) / 2.0});
    }
    return std::min({q.alpha, 1.0 + q.kappa, (q.alpha + q.kappa) / 2.0});
}

ConvergenceReport verify_limit(const GdofQuery& q, const std::vector<double>& snr_db_grid,
                               double theta) {
    if (snr_db_grid.empty()) throw std::invalid_argument("verify_limit: empty SNR grid");
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    const double t = std::fmod(std::fmod(theta, kTwoPi) + kTwoPi, kTwoPi);
    if (std::abs(t) < 1e-12 || std::abs(t - kTwoPi) < 1e-12)
        throw std::invalid_argument(
            "verify_limit: theta = 0 is excluded (the limit may differ there)");

    ConvergenceReport rep;
    rep.query = q;
    rep.theta = t;
    rep.d_formula = gdof(q);
    for (double db : snr_db_grid) {
        const double snr = db_to_linear(db);
        if (snr <= 1.0) throw std::invalid_argument("verify_limit: SNR grid must stay above 0 dB");
        const double inr = std::pow(snr, q.alpha);
        const double cb = q.kappa * std::log2(snr);
        const auto p = ChannelParams::make(snr, snr, inr, inr, t, cb, cb);
        const double ratio = sym_upper(p) / std::log2(snr);
        rep.points.push_back({db, ratio, std::abs(ratio - rep.d_formula)});
    }
    rep.terminal_deviation = rep.points.back().deviation;
    return rep;
}

}  // namespace coopic
