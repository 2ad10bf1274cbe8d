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

#include "coopic/region2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace coopic {

namespace {

constexpr double kCoefEps = 1e-12;   // coefficient treated as zero below this
constexpr double kMergeTol = 1e-9;   // vertices closer than this are one point
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Line {
    double m = 0.0;  // slope, <= 0
    double c = 0.0;  // intercept, >= 0
};

double line_eval(const Line& l, double x) { return l.m * x + l.c; }

double intersect_x(const Line& a, const Line& b) { return (b.c - a.c) / (a.m - b.m); }

std::vector<HalfSpace> sanitize(std::vector<HalfSpace> hs) {
    for (auto& h : hs) {
        if (!std::isfinite(h.a1) || !std::isfinite(h.a2) || !std::isfinite(h.b))
            throw std::invalid_argument("RateRegion: non-finite halfspace");
        if (h.a1 < -kCoefEps || h.a2 < -kCoefEps)
            throw std::invalid_argument("RateRegion: negative halfspace coefficient");
        h.a1 = std::max(h.a1, 0.0);
        h.a2 = std::max(h.a2, 0.0);
        if (h.a1 <= kCoefEps && h.a2 <= kCoefEps)
            throw std::invalid_argument("RateRegion: zero halfspace coefficients");
        if (h.b < -kMergeTol)
            throw std::invalid_argument("RateRegion: halfspace with b < 0 makes the region empty");
        h.b = std::max(h.b, 0.0);
    }
    return hs;
}

// Extreme points of the upper-right boundary, from (0, max R2) to (max R1, 0).
// The boundary is the lower envelope of the lines R2 = (b - a1*R1)/a2, clipped
// to R1 in [0, cap] and R2 >= 0; the envelope is built by slope order.
std::vector<RatePoint> enumerate_vertices(const std::vector<HalfSpace>& hs) {
    bool bounds_r1 = false;
    double x_cap = kInf;
    std::vector<Line> lines;
    lines.reserve(hs.size());
    for (const auto& h : hs) {
        if (h.a1 > kCoefEps) bounds_r1 = true;
        if (h.a2 > kCoefEps) {
            lines.push_back({-h.a1 / h.a2, h.b / h.a2});
        } else {
            x_cap = std::min(x_cap, h.b / h.a1);
        }
    }
    if (!bounds_r1) throw std::domain_error("RateRegion: R1 is unbounded");
    if (lines.empty()) throw std::domain_error("RateRegion: R2 is unbounded");

    std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
        if (a.m != b.m) return a.m > b.m;
        return a.c < b.c;
    });

    std::vector<Line> env;
    for (const auto& l : lines) {
        if (!env.empty() && std::abs(env.back().m - l.m) <= kCoefEps) continue;  // keep lower intercept
        while (env.size() >= 2) {
            const Line& l1 = env[env.size() - 2];
            const Line& l2 = env.back();
            if (intersect_x(l1, l) <= intersect_x(l1, l2)) {
                env.pop_back();
            } else {
                break;
            }
        }
        if (env.size() == 1 && env[0].c >= l.c) env.pop_back();  // new line is lower everywhere left
        env.push_back(l);
    }

    std::vector<RatePoint> verts;
    auto push = [&verts](double x, double y) {
        x = std::max(x, 0.0);
        y = std::max(y, 0.0);
        if (!verts.empty() && std::abs(verts.back().r1 - x) <= kMergeTol &&
            std::abs(verts.back().r2 - y) <= kMergeTol)
            return;
        verts.push_back({x, y});
    };

    // Skip envelope segments that end left of x = 0.
    std::size_t j = 0;
    while (j + 1 < env.size() && intersect_x(env[j], env[j + 1]) <= 0.0) ++j;

    push(0.0, line_eval(env[j], 0.0));
    for (;; ++j) {
        const Line& l = env[j];
        const double seg_end = (j + 1 < env.size()) ? intersect_x(env[j], env[j + 1]) : kInf;
        if (l.m < -kCoefEps) {
            const double x_zero = -l.c / l.m;
            if (x_zero <= std::min(seg_end, x_cap) + kMergeTol) {
                push(std::min(x_zero, x_cap), 0.0);
                break;
            }
        }
        if (x_cap <= seg_end) {
            const double y = std::max(line_eval(l, x_cap), 0.0);
            push(x_cap, y);
            if (y > kMergeTol) push(x_cap, 0.0);
            break;
        }
        push(seg_end, line_eval(l, seg_end));
    }

    if (verts.empty()) verts.push_back({0.0, 0.0});
    verts.front().r1 = 0.0;
    verts.back().r2 = 0.0;
    return verts;
}

double cross(const RatePoint& o, const RatePoint& a, const RatePoint& b) {
    return (a.r1 - o.r1) * (b.r2 - o.r2) - (a.r2 - o.r2) * (b.r1 - o.r1);
}

// Concave chain over the union's vertices, from (0, ymax) down to (xmax, 0).
std::vector<RatePoint> concave_chain(std::vector<RatePoint> pts) {
    double xmax = 0.0, ymax = 0.0;
    for (const auto& p : pts) {
        xmax = std::max(xmax, p.r1);
        ymax = std::max(ymax, p.r2);
    }
    if (xmax <= kMergeTol && ymax <= kMergeTol) return {{0.0, 0.0}};
    if (xmax <= kMergeTol) return {{0.0, ymax}, {0.0, 0.0}};
    if (ymax <= kMergeTol) return {{0.0, 0.0}, {xmax, 0.0}};

    // Keep the highest point per x, sorted by x; anchor the axis endpoints.
    std::sort(pts.begin(), pts.end(), [](const RatePoint& a, const RatePoint& b) {
        if (a.r1 != b.r1) return a.r1 < b.r1;
        return a.r2 > b.r2;
    });
    std::vector<RatePoint> top;
    for (const auto& p : pts) {
        if (!top.empty() && p.r1 - top.back().r1 <= kMergeTol) continue;
        top.push_back(p);
    }
    if (top.back().r1 < xmax - kMergeTol) top.push_back({xmax, 0.0});

    std::vector<RatePoint> chain;
    for (const auto& p : top) {
        while (chain.size() >= 2 &&
               cross(chain[chain.size() - 2], chain.back(), p) >= -kMergeTol)
            chain.pop_back();
        // A later point at least as high makes the earlier one interior.
        while (chain.size() == 1 && p.r2 >= chain.back().r2 - kMergeTol) chain.pop_back();
        chain.push_back(p);
    }
    if (chain.front().r1 > kMergeTol) chain.insert(chain.begin(), {0.0, chain.front().r2});
    chain.front().r1 = 0.0;
    if (chain.back().r2 > kMergeTol) chain.push_back({chain.back().r1, 0.0});
    chain.back().r2 = 0.0;
    return chain;
}

RateRegion region_from_chain(const std::vector<RatePoint>& chain) {
    std::vector<HalfSpace> hs;
    const double xmax = chain.back().r1;
    const double ymax = chain.front().r2;
    hs.push_back({1.0, 0.0, xmax});
    hs.push_back({0.0, 1.0, ymax});
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const RatePoint& p = chain[i];
        const RatePoint& q = chain[i + 1];
        double a1 = p.r2 - q.r2;
        double a2 = q.r1 - p.r1;
        if (a1 <= kCoefEps && a2 <= kCoefEps) continue;
        a1 = std::max(a1, 0.0);
        a2 = std::max(a2, 0.0);
        const double scale = std::max(a1, a2);
        a1 /= scale;
        a2 /= scale;
        hs.push_back({a1, a2, a1 * p.r1 + a2 * p.r2});
    }
    return RateRegion(std::move(hs));
}

}  // namespace

RateRegion::RateRegion(std::vector<HalfSpace> halfspaces)
    : halfspaces_(sanitize(std::move(halfspaces))), vertices_(enumerate_vertices(halfspaces_)) {}

bool RateRegion::contains_point(const RatePoint& p, double tol) const {
    if (p.r1 < -tol || p.r2 < -tol) return false;
    for (const auto& h : halfspaces_) {
        if (h.a1 * p.r1 + h.a2 * p.r2 > h.b + tol * std::max(h.a1, h.a2)) return false;
    }
    return true;
}

RateRegion conv_union(const RateRegion& a, const RateRegion& b) {
    std::vector<RatePoint> pts = a.vertices();
    pts.insert(pts.end(), b.vertices().begin(), b.vertices().end());
    return region_from_chain(concave_chain(std::move(pts)));
}

RateRegion inflate(const RateRegion& region, double g) {
    if (!(g >= 0.0)) throw std::invalid_argument("inflate: gap must be >= 0");
    std::vector<HalfSpace> hs = region.halfspaces();
    for (auto& h : hs) h.b += g * (h.a1 + h.a2);
    return RateRegion(std::move(hs));
}

ContainsResult contains(const RateRegion& outer, const RateRegion& inner, double tol) {
    ContainsResult res;
    res.excess_bits = -kInf;
    for (const auto& v : inner.vertices()) {
        for (const auto& h : outer.halfspaces()) {
            const double slack = (h.a1 * v.r1 + h.a2 * v.r2 - h.b) / std::max(h.a1, h.a2);
            if (slack > res.excess_bits) {
                res.excess_bits = slack;
                res.witness = v;
                res.violated = h;
            }
        }
    }
    res.contained = res.excess_bits <= tol;
    return res;
}

bool regions_equal(const RateRegion& a, const RateRegion& b, double tol) {
    return contains(a, b, tol).contained && contains(b, a, tol).contained;
}

WeightedMax max_weighted(const RateRegion& region, double mu1, double mu2) {
    if (!(mu1 >= 0.0) || !(mu2 >= 0.0) || (mu1 == 0.0 && mu2 == 0.0))
        throw std::invalid_argument("max_weighted: weights must be >= 0 and not both zero");
    WeightedMax best{-kInf, {0.0, 0.0}};
    for (const auto& v : region.vertices()) {
        const double val = mu1 * v.r1 + mu2 * v.r2;
        if (val > best.value) best = {val, v};
    }
    return best;
}

double max_symmetric_rate(const RateRegion& region) {
    double r = kInf;
    for (const auto& h : region.halfspaces()) r = std::min(r, h.b / (h.a1 + h.a2));
    return std::max(r, 0.0);
}

nlohmann::json region_to_json(const RateRegion& region) {
    nlohmann::json hs = nlohmann::json::array();
    for (const auto& h : region.halfspaces())
        hs.push_back({{"a1", h.a1}, {"a2", h.a2}, {"b", h.b}});
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : region.vertices()) vs.push_back({v.r1, v.r2});
    return nlohmann::json{{"halfspaces", std::move(hs)}, {"vertices", std::move(vs)}};
}

RateRegion region_from_json(const nlohmann::json& j) {
    std::vector<HalfSpace> hs;
    for (const auto& e : j.at("halfspaces"))
        hs.push_back({e.at("a1").get<double>(), e.at("a2").get<double>(), e.at("b").get<double>()});
    return RateRegion(std::move(hs));
}

}  // namespace coopic
