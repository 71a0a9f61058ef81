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

#ifndef MAEE_PARAMS_HPP
#define MAEE_PARAMS_HPP

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>

namespace maee
{
    inline constexpr double two_pi = 2.0 * std::numbers::pi;

    /// Thrown when a parameter set or argument violates its documented domain.
    class invalid_parameter : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
    inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

    /// Scalar constants of one downlink scenario. All powers are linear watts,
    /// all lengths meters. Defaults reproduce the reference simulation setup.
    struct SystemParams
    {
        double wavelength = 0.01;              // lambda [m]
        double region_length = 0.02;           // A [m], moving region is [0, A]
        std::size_t num_bs_antennas = 16;      // N
        std::size_t num_paths = 10;            // L
        double max_tx_power = dbm_to_watt(10); // P_t [W]
        double movement_power = 0.5;           // P [W], driver power draw
        double speed = 0.2;                    // v [m/s]
        double block_duration = 5.0;           // T [s]
        double min_throughput = 5.0;           // R_TH [bits/Hz]
        double noise_power = dbm_to_watt(-70); // sigma^2 [W]
        double initial_position = 0.01;        // x0 [m]
        double pathloss_ref = db_to_linear(-40);
        double distance = 50.0;                // BS-user distance [m]
        double pathloss_exp = 2.8;
        double tolerance = 1e-4;               // convergence tolerance of the optimizer

        /// Movement energy per meter, E0 = P / v [J/m].
        double movement_rate() const { return movement_power / speed; }

        /// Variance of each path-response coefficient, rho0 * d^-alpha / L.
        double path_variance() const
        {
            return pathloss_ref * std::pow(distance, -pathloss_exp) / static_cast<double>(num_paths);
        }

        /// Throws invalid_parameter naming the first violated constraint.
        void validate() const
        {
            auto require = [](bool ok, const char *what)
            {
                if (!ok)
                    throw invalid_parameter(std::string("invalid parameter: ") + what);
            };
            require(std::isfinite(wavelength) && wavelength > 0.0, "wavelength must be > 0");
            require(std::isfinite(region_length) && region_length > 0.0, "region length A must be > 0");
            require(num_bs_antennas >= 1, "N must be >= 1");
            require(num_paths >= 1, "L must be >= 1");
            require(std::isfinite(max_tx_power) && max_tx_power > 0.0, "P_t must be > 0");
            require(std::isfinite(movement_power) && movement_power >= 0.0, "P must be >= 0");
            require(std::isfinite(speed) && speed > 0.0, "v must be > 0");
            require(std::isfinite(block_duration) && block_duration > 0.0, "T must be > 0");
            require(std::isfinite(min_throughput), "R_TH must be finite");
            require(std::isfinite(noise_power) && noise_power > 0.0, "sigma2 must be > 0");
            require(initial_position >= 0.0 && initial_position <= region_length, "x0 must lie in [0, A]");
            require(std::isfinite(pathloss_ref) && pathloss_ref > 0.0, "rho0 must be > 0");
            require(std::isfinite(distance) && distance > 0.0, "d must be > 0");
            require(std::isfinite(pathloss_exp), "path loss exponent must be finite");
            require(tolerance > 0.0 && tolerance < 1.0, "tolerance must lie in (0, 1)");
        }
    };

} // namespace maee

#endif // MAEE_PARAMS_HPP
