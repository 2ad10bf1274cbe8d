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

#include <vector>

namespace coopic {

/// Scaling exponents of the symmetric high-power limit: alpha is the limit
/// of log INR / log SNR, kappa the limit of C^B / log SNR.
struct GdofQuery {
    double alpha = 0.0;
    double kappa = 0.0;
};

/// Generalized degrees of freedom per user:
///   alpha <  1: min{ 1, max(alpha, 1-alpha) + kappa, 1 - (alpha-kappa)/2 }
///   alpha >= 1: min{ alpha, 1 + kappa, (alpha+kappa)/2 }
/// Continuous in (alpha, kappa); both branches agree at alpha = 1.
double gdof(const GdofQuery& q);

struct ConvergencePoint {
    double snr_db = 0.0;
    double ratio = 0.0;      ///< sym_upper / log2(SNR)
    double deviation = 0.0;  ///< |ratio - gdof|
};

struct ConvergenceReport {
    GdofQuery query;
    double theta = 0.0;
    double d_formula = 0.0;
    std::vector<ConvergencePoint> points;  ///< in grid order
    double terminal_deviation = 0.0;       ///< deviation at the last grid point
};

/// Evaluates sym_upper / log2(SNR) along the SNR grid with INR = SNR^alpha
/// and C^B = kappa * log2(SNR) at a fixed phase. theta = 0 is excluded: on
/// that null event the alpha = 1 limit differs. Throws std::invalid_argument
/// for theta == 0 (mod 2*pi) or an empty grid.
ConvergenceReport verify_limit(const GdofQuery& q, const std::vector<double>& snr_db_grid,
                               double theta);

}  // namespace coopic
