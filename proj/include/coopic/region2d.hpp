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

#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace coopic {

/// One linear rate constraint a1*R1 + a2*R2 <= b with a1, a2 >= 0,
/// (a1, a2) != (0, 0). Every bound in this library has this shape.
struct HalfSpace {
    double a1 = 0.0;
    double a2 = 0.0;
    double b = 0.0;
};

struct RatePoint {
    double r1 = 0.0;
    double r2 = 0.0;
};

/// A bounded, downward-closed rate polytope in the first quadrant:
/// the intersection of the stored halfspaces with R1 >= 0, R2 >= 0.
///
/// Regions are immutable values. The extreme points of the upper-right
/// boundary are enumerated at construction, ordered from (0, max R2) to
/// (max R1, 0). Redundant halfspaces are retained in storage but do not
/// contribute vertices. Construction throws std::invalid_argument on a
/// malformed halfspace or an empty region (some b < 0), and
/// std::domain_error when the region is unbounded (no halfspace caps R1,
/// or none caps R2).
class RateRegion {
  public:
    explicit RateRegion(std::vector<HalfSpace> halfspaces);

    const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }
    const std::vector<RatePoint>& vertices() const { return vertices_; }

    double max_r1() const { return vertices_.back().r1; }
    double max_r2() const { return vertices_.front().r2; }

    bool contains_point(const RatePoint& p, double tol = 1e-9) const;

  private:
    std::vector<HalfSpace> halfspaces_;
    std::vector<RatePoint> vertices_;
};

/// Smallest downward-closed convex region containing both arguments
/// (convex hull of the union, as achieved by time-sharing).
RateRegion conv_union(const RateRegion& a, const RateRegion& b);

/// Minkowski sum with the box [0, g] x [0, g]: every halfspace rhs grows
/// by g * (a1 + a2).
RateRegion inflate(const RateRegion& region, double g);

/// Outcome of a containment test; `excess_bits` is the worst halfspace
/// violation normalized by max(a1, a2), so slope-2 rows report per-user bits.
struct ContainsResult {
    bool contained = true;
    double excess_bits = 0.0;  ///< most positive normalized slack observed
    RatePoint witness;         ///< vertex attaining it
    HalfSpace violated;        ///< halfspace attaining it
};

/// True iff every vertex of `inner` satisfies every halfspace of `outer`
/// within +tol (normalized). On failure the witness vertex and halfspace
/// are reported.
ContainsResult contains(const RateRegion& outer, const RateRegion& inner, double tol = 1e-9);

/// Mutual containment at tolerance.
bool regions_equal(const RateRegion& a, const RateRegion& b, double tol = 1e-9);

struct WeightedMax {
    double value = 0.0;
    RatePoint argmax;
};

/// max over the region of mu1*R1 + mu2*R2 and one achieving vertex.
/// Requires mu1, mu2 >= 0, not both zero.
WeightedMax max_weighted(const RateRegion& region, double mu1, double mu2);

/// Largest R with (R, R) in the region.
double max_symmetric_rate(const RateRegion& region);

/// JSON form: { "halfspaces": [{"a1","a2","b"}...], "vertices": [[r1,r2]...] }.
/// Vertices are optional on input and always included on output.
nlohmann::json region_to_json(const RateRegion& region);
RateRegion region_from_json(const nlohmann::json& j);

}  // namespace coopic
