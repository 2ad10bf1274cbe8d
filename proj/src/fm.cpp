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

#include "coopic/fm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coopic {

namespace {

constexpr double kEps = 1e-11;

bool is_zero(double x) { return std::abs(x) <= kEps; }

// Scale so the largest |coefficient| is 1; rows with no coefficients left
// untouched (their rhs sign is all that matters).
IneqSystem::Row normalized(IneqSystem::Row r) {
    double m = 0.0;
    for (double c : r.a) m = std::max(m, std::abs(c));
    if (m > kEps) {
        for (double& c : r.a) c /= m;
        r.rhs /= m;
    }
    return r;
}

bool same_coeffs(const IneqSystem::Row& a, const IneqSystem::Row& b) {
    for (std::size_t i = 0; i < a.a.size(); ++i)
        if (std::abs(a.a[i] - b.a[i]) > 1e-9) return false;
    return true;
}

void drop_dominated(std::vector<IneqSystem::Row>& rows) {
    std::vector<IneqSystem::Row> kept;
    for (auto& r : rows) {
        bool dominated = false;
        for (auto& k : kept) {
            if (same_coeffs(k, r)) {
                dominated = true;
                k.rhs = std::min(k.rhs, r.rhs);
                break;
            }
        }
        if (!dominated) kept.push_back(std::move(r));
    }
    rows = std::move(kept);
}

}  // namespace

int IneqSystem::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

void IneqSystem::add_row(std::vector<double> a, double rhs) {
    if (a.size() != vars.size())
        throw std::invalid_argument("IneqSystem: row width does not match variable count");
    rows.push_back({std::move(a), rhs});
}

void IneqSystem::add_named_row(const std::vector<std::pair<std::string, double>>& terms,
                               double rhs) {
    std::vector<double> a(vars.size(), 0.0);
    for (const auto& [name, coef] : terms) {
        const int idx = var_index(name);
        if (idx < 0) throw std::invalid_argument("IneqSystem: unknown variable " + name);
        a[static_cast<std::size_t>(idx)] += coef;
    }
    add_row(std::move(a), rhs);
}

IneqSystem eliminate(const IneqSystem& system, const std::string& var) {
    const int idx = system.var_index(var);
    if (idx < 0) throw std::invalid_argument("eliminate: unknown variable " + var);
    const auto ui = static_cast<std::size_t>(idx);

    std::vector<IneqSystem::Row> pos, neg, keep;
    for (const auto& r : system.rows) {
        const double c = r.a[ui];
        if (c > kEps) {
            pos.push_back(r);
        } else if (c < -kEps) {
            neg.push_back(r);
        } else {
            keep.push_back(r);
        }
    }

    IneqSystem out;
    out.vars = system.vars;
    out.vars.erase(out.vars.begin() + idx);

    auto strip = [ui](IneqSystem::Row r) {
        r.a.erase(r.a.begin() + static_cast<std::ptrdiff_t>(ui));
        return r;
    };

    std::vector<IneqSystem::Row> rows;
    for (auto& r : keep) rows.push_back(normalized(strip(std::move(r))));
    for (const auto& rp : pos) {
        for (const auto& rn : neg) {
            const double cp = rp.a[ui];
            const double cn = -rn.a[ui];
            IneqSystem::Row combined;
            combined.a.resize(system.vars.size());
            for (std::size_t k = 0; k < combined.a.size(); ++k)
                combined.a[k] = cn * rp.a[k] + cp * rn.a[k];
            combined.a[ui] = 0.0;
            combined.rhs = cn * rp.rhs + cp * rn.rhs;
            combined = normalized(strip(std::move(combined)));
            bool all_zero = true;
            for (double c : combined.a) all_zero = all_zero && is_zero(c);
            if (all_zero && combined.rhs >= 0.0) continue;  // vacuous
            rows.push_back(std::move(combined));
        }
    }
    drop_dominated(rows);
    out.rows = std::move(rows);
    return out;
}

RateRegion system_to_region(const IneqSystem& system) {
    const int i1 = system.var_index("R1");
    const int i2 = system.var_index("R2");
    if (i1 < 0 || i2 < 0)
        throw std::invalid_argument("system_to_region: variables R1, R2 required");
    for (std::size_t k = 0; k < system.vars.size(); ++k) {
        if (static_cast<int>(k) == i1 || static_cast<int>(k) == i2) continue;
        for (const auto& r : system.rows)
            if (!is_zero(r.a[k]))
                throw std::invalid_argument("system_to_region: system not reduced to {R1, R2}");
    }

    std::vector<HalfSpace> hs;
    std::vector<IneqSystem::Row> deferred;
    for (const auto& r : system.rows) {
        const double a1 = r.a[static_cast<std::size_t>(i1)];
        const double a2 = r.a[static_cast<std::size_t>(i2)];
        if (is_zero(a1) && is_zero(a2)) {
            if (r.rhs < -kEps)
                throw std::invalid_argument("system_to_region: infeasible system");
            continue;
        }
        if (a1 >= -kEps && a2 >= -kEps) {
            hs.push_back({std::max(a1, 0.0), std::max(a2, 0.0), r.rhs});
        } else {
            deferred.push_back(r);  // must be implied, e.g. -R1 <= 0
        }
    }
    if (hs.empty()) throw std::domain_error("system_to_region: region is unbounded");
    RateRegion region{hs};

    for (const auto& r : deferred) {
        const double a1 = r.a[static_cast<std::size_t>(i1)];
        const double a2 = r.a[static_cast<std::size_t>(i2)];
        bool implied = true;
        for (const auto& v : region.vertices())
            implied = implied && (a1 * v.r1 + a2 * v.r2 <= r.rhs + 1e-9);
        implied = implied && (a1 * 0.0 + a2 * 0.0 <= r.rhs + 1e-9);
        if (!implied)
            throw std::invalid_argument(
                "system_to_region: mixed-sign row actually constrains the region");
    }
    return region;
}

IneqSystem reduce(const IneqSystem& system) {
    const RateRegion full = system_to_region(system);

    IneqSystem out;
    out.vars = system.vars;
    const auto i1 = static_cast<std::size_t>(system.var_index("R1"));
    const auto i2 = static_cast<std::size_t>(system.var_index("R2"));

    std::vector<IneqSystem::Row> candidates, nonneg;
    for (const auto& r : system.rows) {
        const double a1 = r.a[i1];
        const double a2 = r.a[i2];
        if (is_zero(a1) && is_zero(a2)) continue;
        if (a1 >= -kEps && a2 >= -kEps) {
            candidates.push_back(r);
        } else {
            nonneg.push_back(r);  // already verified implied by system_to_region
        }
    }

    // Greedy removal: a row goes when the region without it is unchanged.
    std::vector<bool> alive(candidates.size(), true);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        std::vector<HalfSpace> hs;
        for (std::size_t k = 0; k < candidates.size(); ++k) {
            if (k == i || !alive[k]) continue;
            hs.push_back({std::max(candidates[k].a[i1], 0.0), std::max(candidates[k].a[i2], 0.0),
                          candidates[k].rhs});
        }
        if (hs.empty()) continue;
        bool removable = false;
        try {
            removable = regions_equal(RateRegion{hs}, full, 1e-9);
        } catch (const std::domain_error&) {
            removable = false;  // row was the only cap in some direction
        }
        if (removable) alive[i] = false;
    }
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (alive[i]) out.rows.push_back(candidates[i]);
    for (const auto& r : nonneg) out.rows.push_back(r);
    return out;
}

}  // namespace coopic
