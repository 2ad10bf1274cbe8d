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

#include "coopic/channel.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace coopic {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("ChannelParams: ") + what);
}

double normalize_angle(double theta) {
    require(std::isfinite(theta), "theta must be finite");
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (t >= kTwoPi) t = 0.0;
    return t;
}

}  // namespace

ChannelParams ChannelParams::make(double snr1, double snr2, double inr1, double inr2,
                                  double theta, double cb12, double cb21) {
    ChannelParams p;
    require(std::isfinite(snr1) && snr1 >= 0.0, "snr1 must be finite and >= 0");
    require(std::isfinite(snr2) && snr2 >= 0.0, "snr2 must be finite and >= 0");
    require(std::isfinite(inr1) && inr1 >= 0.0, "inr1 must be finite and >= 0");
    require(std::isfinite(inr2) && inr2 >= 0.0, "inr2 must be finite and >= 0");
    require(std::isfinite(cb12) && cb12 >= 0.0, "cb12 must be finite and >= 0");
    require(std::isfinite(cb21) && cb21 >= 0.0, "cb21 must be finite and >= 0");
    p.snr1 = snr1;
    p.snr2 = snr2;
    p.inr1 = inr1;
    p.inr2 = inr2;
    p.theta = normalize_angle(theta);
    p.cb12 = cb12;
    p.cb21 = cb21;
    return p;
}

ChannelParams ChannelParams::from_db(double snr1_db, double snr2_db, double inr1_db,
                                     double inr2_db, double theta, double cb12, double cb21) {
    return make(db_to_linear(snr1_db), db_to_linear(snr2_db), db_to_linear(inr1_db),
                db_to_linear(inr2_db), theta, cb12, cb21);
}

ChannelParams ChannelParams::from_gains(std::complex<double> h11, std::complex<double> h12,
                                        std::complex<double> h21, std::complex<double> h22,
                                        double cb12, double cb21) {
    const double theta = std::arg(h11) + std::arg(h22) - std::arg(h12) - std::arg(h21);
    return make(std::norm(h11), std::norm(h22), std::norm(h12), std::norm(h21),
                theta, cb12, cb21);
}

ChannelParams ChannelParams::swapped() const {
    ChannelParams p = *this;
    std::swap(p.snr1, p.snr2);
    std::swap(p.inr1, p.inr2);
    std::swap(p.cb12, p.cb21);
    return p;
}

bool ChannelParams::symmetric(double rel_tol) const {
    auto close = [rel_tol](double a, double b) {
        return std::abs(a - b) <= rel_tol * std::max({1.0, std::abs(a), std::abs(b)});
    };
    return close(snr1, snr2) && close(inr1, inr2) && close(cb12, cb21);
}

const char* to_string(Regime r) {
    switch (r) {
        case Regime::Weak: return "weak";
        case Regime::Mixed12: return "mixed12";
        case Regime::Mixed21: return "mixed21";
        case Regime::Strong: return "strong";
    }
    return "?";
}

Regime classify(const ChannelParams& p) {
    const bool strong1 = p.snr1 <= p.inr2;  // user 1's cross link at least as strong
    const bool strong2 = p.snr2 <= p.inr1;
    if (!strong1 && !strong2) return Regime::Weak;
    if (!strong1 && strong2) return Regime::Mixed12;
    if (strong1 && !strong2) return Regime::Mixed21;
    return Regime::Strong;
}

PowerSplit PowerSplit::swapped() const {
    PowerSplit s = *this;
    std::swap(s.q1p, s.q2p);
    std::swap(s.snr1p, s.snr2p);
    std::swap(s.inr1p, s.inr2p);
    return s;
}

PowerSplit power_split(const ChannelParams& p) {
    PowerSplit s;
    // inr_j == 0 makes 1/inr_j infinite; min{1, inf} = 1 is the intended value.
    s.q1p = (p.snr1 > p.inr2) ? std::min(1.0, 1.0 / p.inr2) : 0.0;
    s.q2p = (p.snr2 > p.inr1) ? std::min(1.0, 1.0 / p.inr1) : 0.0;
    s.snr1p = p.snr1 * s.q1p;
    s.snr2p = p.snr2 * s.q2p;
    s.inr1p = p.inr1 * s.q2p;
    s.inr2p = p.inr2 * s.q1p;
    return s;
}

PowerSplit all_common_split() { return PowerSplit{}; }

double det_term(const ChannelParams& p) {
    const double cross = std::sqrt(p.snr1 * p.snr2 * p.inr1 * p.inr2);
    const double v = p.snr1 * p.snr2 + p.inr1 * p.inr2 - 2.0 * std::cos(p.theta) * cross;
    return std::max(v, 0.0);
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

ChannelParams scenario_from_json(const nlohmann::json& j) {
    return ChannelParams::from_db(j.at("snr1_db").get<double>(), j.at("snr2_db").get<double>(),
                                  j.at("inr1_db").get<double>(), j.at("inr2_db").get<double>(),
                                  j.value("theta_rad", 0.0), j.value("cb12_bits", 0.0),
                                  j.value("cb21_bits", 0.0));
}

nlohmann::json scenario_to_json(const ChannelParams& p) {
    return nlohmann::json{{"snr1_db", linear_to_db(p.snr1)}, {"snr2_db", linear_to_db(p.snr2)},
                          {"inr1_db", linear_to_db(p.inr1)}, {"inr2_db", linear_to_db(p.inr2)},
                          {"theta_rad", p.theta},            {"cb12_bits", p.cb12},
                          {"cb21_bits", p.cb21}};
}

}  // namespace coopic
