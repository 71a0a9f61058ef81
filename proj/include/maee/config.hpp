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

#ifndef MAEE_CONFIG_HPP
#define MAEE_CONFIG_HPP

// Line-oriented `key = value` scenario files.
//
//   # comment
//   lambda = 0.01 m
//   P_t    = 10 dBm
//   rho_0  = -40 dB
//
// Values are SI numbers with an optional unit. `dBm` converts to watts and `dB`
// to a linear ratio; other units (m, W, s, m/s, bits/Hz) are accepted and ignored.
// Missing keys keep their defaults; x0 defaults to A/2.

#include <maee/params.hpp>

#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>

namespace maee
{
    class config_error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    namespace detail
    {
        inline std::string trim(const std::string &s)
        {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos)
                return {};
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        }

        inline double parse_quantity(const std::string &key, const std::string &text)
        {
            std::size_t used = 0;
            double v = 0.0;
            try
            {
                v = std::stod(text, &used);
            }
            catch (const std::logic_error &)
            {
                throw config_error("config: value of '" + key + "' is not a number: '" + text + "'");
            }
            const std::string unit = trim(text.substr(used));
            if (unit.empty() || unit == "m" || unit == "W" || unit == "s" || unit == "m/s" || unit == "bits/Hz")
                return v;
            if (unit == "dBm")
                return dbm_to_watt(v);
            if (unit == "dB")
                return db_to_linear(v);
            throw config_error("config: unknown unit '" + unit + "' for '" + key + "'");
        }

        inline std::size_t parse_count(const std::string &key, double v)
        {
            if (!(v >= 1.0) || v != std::floor(v))
                throw config_error("config: '" + key + "' must be a positive integer");
            return static_cast<std::size_t>(v);
        }
    } // namespace detail

    /// Applies `key = value` lines on top of `base`. Throws config_error on unknown
    /// keys, malformed lines or invalid resulting parameters.
    inline SystemParams parse_config(std::istream &is, SystemParams base = {})
    {
        std::map<std::string, double> values;
        std::string line;
        int lineno = 0;
        while (std::getline(is, line))
        {
            ++lineno;
            if (const auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            line = detail::trim(line);
            if (line.empty())
                continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw config_error("config line " + std::to_string(lineno) + ": expected key = value");
            const std::string key = detail::trim(line.substr(0, eq));
            const std::string val = detail::trim(line.substr(eq + 1));
            if (key.empty() || val.empty())
                throw config_error("config line " + std::to_string(lineno) + ": empty key or value");
            values[key] = detail::parse_quantity(key, val);
        }

        SystemParams p = base;
        bool x0_given = false;
        for (const auto &[key, v] : values)
        {
            if (key == "lambda")
                p.wavelength = v;
            else if (key == "A")
                p.region_length = v;
            else if (key == "N")
                p.num_bs_antennas = detail::parse_count(key, v);
            else if (key == "L")
                p.num_paths = detail::parse_count(key, v);
            else if (key == "rho_0")
                p.pathloss_ref = v;
            else if (key == "d")
                p.distance = v;
            else if (key == "alpha_tilde")
                p.pathloss_exp = v;
            else if (key == "epsilon")
                p.tolerance = v;
            else if (key == "P_t")
                p.max_tx_power = v;
            else if (key == "P")
                p.movement_power = v;
            else if (key == "v")
                p.speed = v;
            else if (key == "T")
                p.block_duration = v;
            else if (key == "R_TH")
                p.min_throughput = v;
            else if (key == "sigma2")
                p.noise_power = v;
            else if (key == "x0")
            {
                p.initial_position = v;
                x0_given = true;
            }
            else
                throw config_error("config: unknown key '" + key + "'");
        }
        if (!x0_given)
            p.initial_position = p.region_length / 2.0;

        try
        {
            p.validate();
        }
        catch (const invalid_parameter &ex)
        {
            throw config_error(std::string("config: ") + ex.what());
        }
        return p;
    }

    inline SystemParams load_config(const std::string &path, SystemParams base = {})
    {
        std::ifstream f(path);
        if (!f)
            throw config_error("config: cannot open '" + path + "'");
        return parse_config(f, base);
    }

} // namespace maee

#endif // MAEE_CONFIG_HPP
