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

#ifndef MAEE_EE_HPP
#define MAEE_EE_HPP

// Energy, throughput and energy efficiency of one transmission block.
//
// A block of length T starts with the antenna moving from x0 to x at speed v
// (no data, driver draws P), followed by transmission with the MRC beamformer
// at full power P_t for the remaining T - |x - x0| / v seconds.

#include <maee/channel.hpp>
#include <maee/params.hpp>
#include <maee/search.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace maee
{
    /// Requested position would need more than a whole block to reach.
    class infeasible_movement : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    struct EEBreakdown
    {
        double x = 0.0;
        double move_time = 0.0;  // [s]
        double throughput = 0.0; // [bits/Hz]
        double energy = 0.0;     // [J]
        double ee = 0.0;         // [(bits/Hz)/J]
        double snr = 0.0;        // linear
        bool feasible = false;   // x in [0, A] and throughput >= R_TH
    };

    /// Receive SNR with MRC transmit beamforming, P_t |h|^2 / sigma^2.
    inline double mrc_snr(double gain, const SystemParams &p) { return p.max_tx_power * gain / p.noise_power; }

    inline double movement_energy(double x, const SystemParams &p)
    {
        if (!(x >= 0.0 && x <= p.region_length))
            throw std::domain_error("position " + std::to_string(x) + " m lies outside the moving region");
        return p.movement_rate() * std::abs(x - p.initial_position);
    }

    namespace detail
    {
        inline double transmit_time(double x, const SystemParams &p)
        {
            const double t = p.block_duration - std::abs(x - p.initial_position) / p.speed;
            if (t < 0.0)
                throw infeasible_movement("moving to " + std::to_string(x) + " m takes longer than one block");
            return t;
        }
    } // namespace detail

    /// Movement energy plus transmit energy, E0 |x - x0| + P_t (T - |x - x0| / v).
    inline double total_energy(double x, const SystemParams &p)
    {
        const double t = detail::transmit_time(x, p);
        return movement_energy(x, p) + p.max_tx_power * t;
    }

    inline double throughput(double x, double gain, const SystemParams &p)
    {
        const double t = detail::transmit_time(x, p);
        return t * std::log2(1.0 + mrc_snr(gain, p));
    }

    inline EEBreakdown energy_efficiency(double x, double gain, const SystemParams &p)
    {
        EEBreakdown out;
        out.x = x;
        out.move_time = std::abs(x - p.initial_position) / p.speed;
        out.snr = mrc_snr(gain, p);
        out.throughput = throughput(x, gain, p);
        out.energy = total_energy(x, p);
        out.ee = out.energy > 0.0 ? out.throughput / out.energy : 0.0;
        out.feasible = x >= 0.0 && x <= p.region_length && out.throughput >= p.min_throughput;
        return out;
    }

    inline EEBreakdown energy_efficiency(const GainExpansion &e, const SystemParams &p, double x)
    {
        return energy_efficiency(x, gain_eval(e, x), p);
    }

    inline constexpr double default_ub_resolution_fraction = 1.0 / 200.0; // of lambda
    inline constexpr double golden_tolerance_fraction = 1e-6;             // of lambda

    /// Maximum channel gain over the moving region.
    struct GainPeak
    {
        double x = 0.0;
        double gain = 0.0;
    };

    /// argmax of |h(x)|^2 over [0, A]: uniform grid plus one golden-section refinement.
    /// Ties resolve to the smallest x.
    inline GainPeak max_gain_position(const GainExpansion &e, const SystemParams &p, double resolution)
    {
        if (!(resolution > 0.0))
            throw invalid_parameter("grid resolution must be > 0");
        const auto best = grid_then_golden([&](double x) { return gain_eval(e, x); }, 0.0, p.region_length, resolution,
                                           e.wavelength * golden_tolerance_fraction);
        return {best.x, best.value};
    }

    struct UpperBound
    {
        double ee = 0.0;     // log2(1 + P_t |h(xbar)|^2 / sigma^2) / P_t
        double x_bar = 0.0;  // position of maximum gain
        double gain = 0.0;   // |h(xbar)|^2
    };

    /// Energy efficiency attainable with no movement cost at the best-gain position.
    /// Dominates energy_efficiency(x).ee for every x in [0, A]; equal when x0 = x_bar.
    inline UpperBound ee_upper_bound(const GainExpansion &e, const SystemParams &p, double resolution)
    {
        const auto peak = max_gain_position(e, p, resolution);
        return {std::log2(1.0 + mrc_snr(peak.gain, p)) / p.max_tx_power, peak.x, peak.gain};
    }

    inline UpperBound ee_upper_bound(const GainExpansion &e, const SystemParams &p)
    {
        return ee_upper_bound(e, p, p.wavelength * default_ub_resolution_fraction);
    }

} // namespace maee

#endif // MAEE_EE_HPP
