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

#include <string>
#include <vector>

#include "coopic/region2d.hpp"

namespace coopic {

/// A finite system of linear inequalities <c, x> <= rhs over named variables.
struct IneqSystem {
    struct Row {
        std::vector<double> a;  ///< one coefficient per variable
        double rhs = 0.0;
    };

    std::vector<std::string> vars;
    std::vector<Row> rows;

    int var_index(const std::string& name) const;  ///< -1 when absent
    void add_row(std::vector<double> a, double rhs);
    /// Row expressed over a subset of the variables by name.
    void add_named_row(const std::vector<std::pair<std::string, double>>& terms, double rhs);
};

/// Projects the system onto the remaining variables: every pair of a
/// positive- and a negative-coefficient row on `var` is combined to cancel
/// it, rows not involving `var` pass through. Rows with all-zero
/// coefficients are kept only when infeasible (0 <= rhs < 0), so
/// infeasibility survives projection. Coefficient-wise dominated rows are
/// dropped to control blowup.
IneqSystem eliminate(const IneqSystem& system, const std::string& var);

/// For a system whose rows involve only {R1, R2}: drops rows that are
/// redundant for the downward-closed region (verified by mutual containment
/// before/after). Throws if a row has a nonnegativity-incompatible shape
/// that actually constrains the region.
IneqSystem reduce(const IneqSystem& system);

/// Region described by a system over exactly {R1, R2}. Rows with negative
/// coefficients must be implied by the rest (nonnegativity rows always are).
RateRegion system_to_region(const IneqSystem& system);

}  // namespace coopic
