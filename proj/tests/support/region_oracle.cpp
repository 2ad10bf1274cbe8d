#include "support/region_oracle.hpp"

#include <algorithm>
#include <cmath>

namespace coopic::testing {

namespace {

struct Line {  // a1 x + a2 y = b
    double a1, a2, b;
};

bool intersect(const Line& p, const Line& q, RatePoint* out) {
    const double d = p.a1 * q.a2 - p.a2 * q.a1;
    if (std::abs(d) < 1e-12) return false;
    out->r1 = (p.b * q.a2 - p.a2 * q.b) / d;
    out->r2 = (p.a1 * q.b - p.b * q.a1) / d;
    return true;
}

double cross(const RatePoint& o, const RatePoint& a, const RatePoint& b) {
    return (a.r1 - o.r1) * (b.r2 - o.r2) - (a.r2 - o.r2) * (b.r1 - o.r1);
}

// Monotone-chain convex hull, collinear points dropped.
std::vector<RatePoint> hull(std::vector<RatePoint> pts) {
    std::sort(pts.begin(), pts.end(), [](const RatePoint& a, const RatePoint& b) {
        return a.r1 != b.r1 ? a.r1 < b.r1 : a.r2 < b.r2;
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const RatePoint& a, const RatePoint& b) {
                              return std::abs(a.r1 - b.r1) < 1e-9 && std::abs(a.r2 - b.r2) < 1e-9;
                          }),
              pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<RatePoint> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {  // lower
        while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 1e-9) --k;
        h[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {  // upper
        while (k >= lower && cross(h[k - 2], h[k - 1], *it) <= 1e-9) --k;
        h[k++] = *it;
    }
    h.resize(k - 1);
    return h;
}

}  // namespace

std::vector<RatePoint> brute_force_extremes(const std::vector<HalfSpace>& hs) {
    std::vector<Line> lines;
    for (const auto& h : hs) lines.push_back({h.a1, h.a2, h.b});
    lines.push_back({1.0, 0.0, 0.0});  // R1 = 0
    lines.push_back({0.0, 1.0, 0.0});  // R2 = 0

    auto feasible = [&hs](const RatePoint& p) {
        if (p.r1 < -1e-7 || p.r2 < -1e-7) return false;
        for (const auto& h : hs)
            if (h.a1 * p.r1 + h.a2 * p.r2 > h.b + 1e-7 * std::max(h.a1, h.a2)) return false;
        return true;
    };

    std::vector<RatePoint> pts;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            RatePoint p;
            if (intersect(lines[i], lines[j], &p) && feasible(p))
                pts.push_back({std::max(p.r1, 0.0), std::max(p.r2, 0.0)});
        }
    }
    if (pts.empty()) pts.push_back({0.0, 0.0});
    return hull(std::move(pts));
}

bool same_point_set(const std::vector<RatePoint>& a, const std::vector<RatePoint>& b,
                    double tol) {
    auto covered = [tol](const std::vector<RatePoint>& xs, const std::vector<RatePoint>& ys) {
        for (const auto& x : xs) {
            bool found = false;
            for (const auto& y : ys)
                found = found ||
                        (std::abs(x.r1 - y.r1) <= tol && std::abs(x.r2 - y.r2) <= tol);
            if (!found) return false;
        }
        return true;
    };
    return covered(a, b) && covered(b, a);
}

}  // namespace coopic::testing
