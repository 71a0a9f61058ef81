// SPDX-License-Identifier: Apache-2.0
//
// maee - energy-efficiency optimization for movable-antenna receivers
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

#ifndef MAEE_ORACLE_HPP
#define MAEE_ORACLE_HPP

#include <maee/channel.hpp>
#include <maee/ee.hpp>
#include <maee/search.hpp>

#include <algorithm>
#include <limits>
#include <utility>

namespace maee
{
    inline constexpr double default_oracle_resolution_fraction = 1.0 / 500.0; // of lambda
    inline constexpr double oracle_golden_tolerance_fraction = 1e-9;         // of lambda

    struct OracleResult
    {
        EEBreakdown best; // x0 breakdown when nothing is feasible
        bool feasible = false;
    };

    /// Exhaustive search of the true energy efficiency over [0, A] under the
    /// throughput requirement: uniform grid, the kink at x0, then golden-section polish.
    inline OracleResult grid_global_ee(const GainExpansion &e, const SystemParams &p, double resolution)
    {
        if (!(resolution > 0.0))
            throw invalid_parameter("oracle resolution must be > 0");
        constexpr double ninf = -std::numeric_limits<double>::infinity();
        auto objective = [&](double x)
        {
            const auto b = energy_efficiency(e, p, x);
            return b.feasible ? b.ee : ninf;
        };

        ScalarMax best = grid_argmax(objective, 0.0, p.region_length, resolution);
        const double at_start = objective(p.initial_position);
        if (at_start > best.value || (at_start == best.value && p.initial_position < best.x))
            best = {p.initial_position, at_start};

        if (!best.found())
            return {energy_efficiency(e, p, p.initial_position), false};

        const double a = std::max(0.0, best.x - resolution);
        const double b = std::min(p.region_length, best.x + resolution);
        const double tol = e.wavelength * oracle_golden_tolerance_fraction;
        // The EE curve has a kink at x0; polish each side separately so golden
        // section always sees a smooth unimodal piece.
        for (auto [lo, hi] : {std::pair{a, std::min(b, p.initial_position)}, std::pair{std::max(a, p.initial_position), b}})
        {
            if (hi - lo <= tol)
                continue;
            const auto polished = golden_section_max(objective, lo, hi, tol);
            if (polished.value > best.value)
                best = polished;
        }
        return {energy_efficiency(e, p, best.x), true};
    }

    inline OracleResult grid_global_ee(const GainExpansion &e, const SystemParams &p)
    {
        return grid_global_ee(e, p, p.wavelength * default_oracle_resolution_fraction);
    }

} // namespace maee

#endif // MAEE_ORACLE_HPP
