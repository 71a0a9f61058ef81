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

#ifndef MAEE_BENCH_HPP
#define MAEE_BENCH_HPP

// Comparison schemes evaluated on one channel instance.

#include <maee/channel.hpp>
#include <maee/ee.hpp>
#include <maee/oracle.hpp>
#include <maee/solver.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <utility>
#include <string_view>

namespace maee
{
    enum class Scheme
    {
        proposed,
        upper_bound,
        max_throughput,
        max_snr,
        fpa,
        oracle // exhaustive search, reference only
    };

    inline constexpr std::array<Scheme, 5> default_schemes{Scheme::proposed, Scheme::upper_bound, Scheme::max_throughput,
                                                         Scheme::max_snr, Scheme::fpa};

    inline std::string_view to_string(Scheme s)
    {
        switch (s)
        {
        case Scheme::proposed:
            return "proposed";
        case Scheme::upper_bound:
            return "upper_bound";
        case Scheme::max_throughput:
            return "max_throughput";
        case Scheme::max_snr:
            return "max_snr";
        case Scheme::fpa:
            return "fpa";
        case Scheme::oracle:
            return "oracle";
        }
        return "?";
    }

    inline std::optional<Scheme> parse_scheme(std::string_view name)
    {
        for (Scheme s : {Scheme::proposed, Scheme::upper_bound, Scheme::max_throughput, Scheme::max_snr, Scheme::fpa,
                         Scheme::oracle})
            if (to_string(s) == name)
                return s;
        return std::nullopt;
    }

    struct SchemeResult
    {
        Scheme scheme = Scheme::fpa;
        double x = 0.0;
        double ee = 0.0;
        double throughput = 0.0;
        double energy = 0.0;
        bool feasible = false;
    };

    namespace detail
    {
        inline SchemeResult from_breakdown(Scheme s, const EEBreakdown &b)
        {
            return {s, b.x, b.ee, b.throughput, b.energy, b.feasible};
        }
    } // namespace detail

    inline SchemeResult grid_global_scheme(const GainExpansion &e, const SystemParams &p, double resolution)
    {
        if (resolution > p.wavelength / 100.0)
            throw invalid_parameter("oracle resolution must not exceed lambda/100");
        const auto r = grid_global_ee(e, p, resolution);
        return detail::from_breakdown(Scheme::oracle, r.best);
    }

    /// Movement-free idealization at the best-gain position: x = x0 = x_bar.
    inline SchemeResult scheme_upper_bound(const GainExpansion &e, const SystemParams &p)
    {
        const auto ub = ee_upper_bound(e, p);
        SchemeResult r;
        r.scheme = Scheme::upper_bound;
        r.x = ub.x_bar;
        r.ee = ub.ee;
        r.throughput = p.block_duration * std::log2(1.0 + mrc_snr(ub.gain, p));
        r.energy = p.max_tx_power * p.block_duration;
        r.feasible = r.throughput >= p.min_throughput;
        return r;
    }

    /// Position maximizing throughput; ignores R_TH during selection.
    inline SchemeResult scheme_max_throughput(const GainExpansion &e, const SystemParams &p, double resolution)
    {
        auto rate = [&](double x) { return throughput(x, gain_eval(e, x), p); };
        ScalarMax best = grid_argmax(rate, 0.0, p.region_length, resolution);
        const double at_start = rate(p.initial_position);
        if (at_start > best.value)
            best = {p.initial_position, at_start};
        const double a = std::max(0.0, best.x - resolution), b = std::min(p.region_length, best.x + resolution);
        const double tol = e.wavelength * oracle_golden_tolerance_fraction;
        for (auto [lo, hi] : {std::pair{a, std::min(b, p.initial_position)}, std::pair{std::max(a, p.initial_position), b}})
        {
            if (hi - lo <= tol)
                continue;
            const auto polished = golden_section_max(rate, lo, hi, tol);
            if (polished.value > best.value)
                best = polished;
        }
        return detail::from_breakdown(Scheme::max_throughput, energy_efficiency(e, p, best.x));
    }

    /// Moves to the best-gain position regardless of the movement cost.
    inline SchemeResult scheme_max_snr(const GainExpansion &e, const SystemParams &p)
    {
        const auto ub = ee_upper_bound(e, p);
        return detail::from_breakdown(Scheme::max_snr, energy_efficiency(e, p, ub.x_bar));
    }

    inline SchemeResult scheme_fpa(const GainExpansion &e, const SystemParams &p)
    {
        return detail::from_breakdown(Scheme::fpa, energy_efficiency(e, p, p.initial_position));
    }

    inline SchemeResult scheme_proposed(const GainExpansion &e, const SystemParams &p, const SolverOptions &opt = {})
    {
        const auto rep = optimize(e, p, opt);
        auto r = detail::from_breakdown(Scheme::proposed, rep.result);
        if (rep.status == SolverStatus::infeasible)
            r.feasible = false;
        return r;
    }

    inline SchemeResult run_scheme(Scheme s, const GainExpansion &e, const SystemParams &p, double resolution,
                                   const SolverOptions &opt = {})
    {
        switch (s)
        {
        case Scheme::proposed:
            return scheme_proposed(e, p, opt);
        case Scheme::upper_bound:
            return scheme_upper_bound(e, p);
        case Scheme::max_throughput:
            return scheme_max_throughput(e, p, resolution);
        case Scheme::max_snr:
            return scheme_max_snr(e, p);
        case Scheme::fpa:
            return scheme_fpa(e, p);
        case Scheme::oracle:
            return grid_global_scheme(e, p, resolution);
        }
        throw invalid_parameter("unknown scheme");
    }

} // namespace maee

#endif // MAEE_BENCH_HPP
