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

#ifndef MAEE_SEARCH_HPP
#define MAEE_SEARCH_HPP

// Bounded scalar maximization: uniform grid scan and golden-section polish.
// Objectives may return -infinity to mark infeasible points.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>

namespace maee
{
    struct ScalarMax
    {
        double x = 0.0;
        double value = -std::numeric_limits<double>::infinity();

        bool found() const { return value > -std::numeric_limits<double>::infinity(); }
    };

    /// Evaluates f on a uniform grid over [lo, hi] whose spacing does not exceed step.
    /// Ties go to the smallest x.
    template <std::invocable<double> F>
    ScalarMax grid_argmax(F &&f, double lo, double hi, double step)
    {
        ScalarMax best;
        best.x = lo;
        const double span = hi - lo;
        const auto intervals = span > 0.0 ? static_cast<std::size_t>(std::ceil(span / step - 1e-9)) : std::size_t{0};
        for (std::size_t i = 0; i <= intervals; ++i)
        {
            const double x = intervals ? lo + span * static_cast<double>(i) / static_cast<double>(intervals) : lo;
            const double v = f(x);
            if (v > best.value)
                best = {x, v};
        }
        return best;
    }

    /// Golden-section search for the maximum of a unimodal f on [lo, hi].
    template <std::invocable<double> F>
    ScalarMax golden_section_max(F &&f, double lo, double hi, double tol)
    {
        constexpr double inv_phi = 0.6180339887498949; // (sqrt(5) - 1) / 2
        double a = lo, b = hi;
        double c = b - inv_phi * (b - a);
        double d = a + inv_phi * (b - a);
        double fc = f(c), fd = f(d);
        while (b - a > tol)
        {
            // >= keeps the left bracket on ties
            if (fc >= fd)
            {
                b = d;
                d = c;
                fd = fc;
                c = b - inv_phi * (b - a);
                fc = f(c);
            }
            else
            {
                a = c;
                c = d;
                fc = fd;
                d = a + inv_phi * (b - a);
                fd = f(d);
            }
        }
        return fc >= fd ? ScalarMax{c, fc} : ScalarMax{d, fd};
    }

    /// Grid scan followed by a golden-section pass over the neighbouring cells of the
    /// best grid point. The polished point replaces the grid point only if strictly better.
    template <std::invocable<double> F>
    ScalarMax grid_then_golden(F &&f, double lo, double hi, double step, double tol)
    {
        ScalarMax best = grid_argmax(f, lo, hi, step);
        if (!best.found() || hi <= lo)
            return best;
        const double a = std::max(lo, best.x - step);
        const double b = std::min(hi, best.x + step);
        const ScalarMax polished = golden_section_max(f, a, b, tol);
        if (polished.value > best.value)
            best = polished;
        return best;
    }

} // namespace maee

#endif // MAEE_SEARCH_HPP
