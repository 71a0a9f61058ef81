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

#ifndef MAEE_HARNESS_HPP
#define MAEE_HARNESS_HPP

// Seeded Monte-Carlo sweeps over region size or driver power, and their CSV output.

#include <maee/bench.hpp>
#include <maee/channel.hpp>
#include <maee/params.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace maee
{
    enum class SweepVariable
    {
        region_size, // values are A / lambda; x0 = A / 2
        movement_power
    };

    struct SweepConfig
    {
        SystemParams base;
        SweepVariable variable = SweepVariable::region_size;
        std::vector<double> values{0.5, 1.0, 1.5, 2.0};
        std::size_t trials = 200;
        std::uint64_t master_seed = 1;
        std::vector<Scheme> schemes{default_schemes.begin(), default_schemes.end()};
        double resolution = 0.0; // oracle / max-throughput grid step; 0 selects lambda/500
        unsigned workers = 1;

        void validate() const
        {
            base.validate();
            if (values.empty())
                throw invalid_parameter("sweep needs at least one value");
            for (std::size_t i = 1; i < values.size(); ++i)
                if (!(values[i] > values[i - 1]))
                    throw invalid_parameter("sweep values must be strictly increasing");
            for (double v : values)
                if (!(std::isfinite(v) && (variable == SweepVariable::region_size ? v > 0.0 : v >= 0.0)))
                    throw invalid_parameter("sweep value out of range");
            if (trials < 1)
                throw invalid_parameter("trials must be >= 1");
            if (schemes.empty())
                throw invalid_parameter("no schemes requested");
            if (resolution < 0.0 || resolution > base.wavelength / 100.0)
                throw invalid_parameter("resolution must lie in (0, lambda/100]");
        }

        double grid_step() const
        {
            return resolution > 0.0 ? resolution : base.wavelength * default_oracle_resolution_fraction;
        }

        /// Scenario at one sweep point.
        SystemParams params_at(double value) const
        {
            SystemParams p = base;
            if (variable == SweepVariable::region_size)
            {
                p.region_length = value * p.wavelength;
                p.initial_position = p.region_length / 2.0;
            }
            else
                p.movement_power = value;
            return p;
        }
    };

    struct TrialRecord
    {
        double sweep_value = 0.0;
        std::size_t value_index = 0;
        std::size_t trial = 0;
        std::uint64_t seed = 0;
        std::vector<SchemeResult> results;
    };

    struct Aggregate
    {
        double sweep_value = 0.0;
        Scheme scheme = Scheme::fpa;
        double mean_ee = std::numeric_limits<double>::quiet_NaN(); // over feasible trials
        double std_ee = std::numeric_limits<double>::quiet_NaN();
        double feasible_frac = 0.0;
        std::size_t n = 0; // trials at this sweep value
    };

    struct SweepResult
    {
        std::vector<TrialRecord> records; // ordered by (value index, trial)
        std::vector<Aggregate> aggregates;
    };

    inline std::uint64_t splitmix64(std::uint64_t z)
    {
        z += 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Channel seed of one trial. Depends on the trial index only, so every sweep
    /// value sees the same channel draws (common random numbers).
    inline std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t trial)
    {
        return splitmix64(splitmix64(master_seed) ^ (0xD1B54A32D192ED03ull * (static_cast<std::uint64_t>(trial) + 1)));
    }

    inline PathResponseMatrix instance_for_seed(const SystemParams &p, std::uint64_t seed)
    {
        std::mt19937_64 rng(seed);
        return sample_instance(p, rng);
    }

    inline std::vector<Aggregate> aggregate(const std::vector<TrialRecord> &records, const std::vector<double> &values,
                                            const std::vector<Scheme> &schemes)
    {
        std::vector<Aggregate> out;
        for (std::size_t vi = 0; vi < values.size(); ++vi)
            for (Scheme s : schemes)
            {
                Aggregate a;
                a.sweep_value = values[vi];
                a.scheme = s;
                std::vector<double> ee;
                for (const auto &rec : records)
                {
                    if (rec.value_index != vi)
                        continue;
                    for (const auto &r : rec.results)
                        if (r.scheme == s)
                        {
                            ++a.n;
                            if (r.feasible)
                                ee.push_back(r.ee);
                        }
                }
                if (a.n > 0)
                    a.feasible_frac = static_cast<double>(ee.size()) / static_cast<double>(a.n);
                if (!ee.empty())
                {
                    double sum = 0.0;
                    for (double v : ee)
                        sum += v;
                    a.mean_ee = sum / static_cast<double>(ee.size());
                    double ss = 0.0;
                    for (double v : ee)
                        ss += (v - a.mean_ee) * (v - a.mean_ee);
                    a.std_ee = ee.size() > 1 ? std::sqrt(ss / static_cast<double>(ee.size() - 1)) : 0.0;
                }
                out.push_back(a);
            }
        return out;
    }

    inline TrialRecord run_trial(const SweepConfig &cfg, std::size_t value_index, std::size_t trial)
    {
        TrialRecord rec;
        rec.value_index = value_index;
        rec.sweep_value = cfg.values[value_index];
        rec.trial = trial;
        rec.seed = trial_seed(cfg.master_seed, trial);

        const SystemParams p = cfg.params_at(rec.sweep_value);
        const auto G = instance_for_seed(p, rec.seed);
        const auto e = build_expansion(G, p.wavelength);
        for (Scheme s : cfg.schemes)
            rec.results.push_back(run_scheme(s, e, p, cfg.grid_step()));
        return rec;
    }

    /// Runs every (value, trial) pair, possibly on several threads. Output order and
    /// content do not depend on the worker count.
    inline SweepResult run_sweep(const SweepConfig &cfg)
    {
        cfg.validate();
        const std::size_t jobs = cfg.values.size() * cfg.trials;
        SweepResult out;
        out.records.resize(jobs);

        std::atomic<std::size_t> next{0};
        auto work = [&]
        {
            for (std::size_t j = next++; j < jobs; j = next++)
                out.records[j] = run_trial(cfg, j / cfg.trials, j % cfg.trials);
        };
        const unsigned workers = std::max(1u, std::min<unsigned>(cfg.workers, static_cast<unsigned>(jobs)));
        if (workers == 1)
            work();
        else
        {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back(work);
        }
        out.aggregates = aggregate(out.records, cfg.values, cfg.schemes);
        return out;
    }

    // ---- CSV -----------------------------------------------------------------

    inline constexpr const char *raw_csv_header = "sweep_value,trial,scheme,x,ee,throughput,energy,feasible,seed";
    inline constexpr const char *aggregate_csv_header = "sweep_value,scheme,mean_ee,std_ee,feasible_frac,n";
    inline constexpr const char *raw_csv_name = "trials.csv";
    inline constexpr const char *aggregate_csv_name = "summary.csv";

    /// Decimal text with 12 significant digits.
    inline std::string fmt12(double v)
    {
        if (std::isnan(v))
            return "nan";
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", v);
        return buf;
    }

    inline void write_raw_csv(std::ostream &os, const std::vector<TrialRecord> &records)
    {
        os << raw_csv_header << '\n';
        for (const auto &rec : records)
            for (const auto &r : rec.results)
                os << fmt12(rec.sweep_value) << ',' << rec.trial << ',' << to_string(r.scheme) << ',' << fmt12(r.x) << ','
                   << fmt12(r.ee) << ',' << fmt12(r.throughput) << ',' << fmt12(r.energy) << ',' << (r.feasible ? 1 : 0)
                   << ',' << rec.seed << '\n';
    }

    inline void write_aggregate_csv(std::ostream &os, const std::vector<Aggregate> &aggregates)
    {
        os << aggregate_csv_header << '\n';
        for (const auto &a : aggregates)
            os << fmt12(a.sweep_value) << ',' << to_string(a.scheme) << ',' << fmt12(a.mean_ee) << ','
               << fmt12(a.std_ee) << ',' << fmt12(a.feasible_frac) << ',' << a.n << '\n';
    }

    class io_error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Writes trials.csv and summary.csv into `dir`, creating it if needed.
    inline void emit_csv(const std::vector<TrialRecord> &records, const std::vector<Aggregate> &aggregates,
                         const std::filesystem::path &dir)
    {
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec)
            throw io_error("cannot create output directory '" + dir.string() + "': " + ec.message());

        auto write = [](const std::filesystem::path &path, auto &&body)
        {
            std::ofstream f(path, std::ios::binary);
            if (!f)
                throw io_error("cannot open '" + path.string() + "' for writing");
            body(f);
            f.flush();
            if (!f)
                throw io_error("write to '" + path.string() + "' failed");
        };
        write(dir / raw_csv_name, [&](std::ostream &os) { write_raw_csv(os, records); });
        write(dir / aggregate_csv_name, [&](std::ostream &os) { write_aggregate_csv(os, aggregates); });
    }

    /// One parsed row of trials.csv.
    struct RawRow
    {
        double sweep_value = 0.0;
        std::size_t trial = 0;
        Scheme scheme = Scheme::fpa;
        double x = 0.0, ee = 0.0, throughput = 0.0, energy = 0.0;
        bool feasible = false;
        std::uint64_t seed = 0;
    };

    inline std::vector<RawRow> read_raw_csv(std::istream &is)
    {
        std::vector<RawRow> rows;
        std::string line;
        if (!std::getline(is, line) || line != raw_csv_header)
            throw io_error("trials csv: unexpected header");
        while (std::getline(is, line))
        {
            if (line.empty())
                continue;
            std::vector<std::string> f;
            std::stringstream ss(line);
            for (std::string cell; std::getline(ss, cell, ',');)
                f.push_back(cell);
            if (f.size() != 9)
                throw io_error("trials csv: expected 9 fields in '" + line + "'");
            const auto scheme = parse_scheme(f[2]);
            if (!scheme)
                throw io_error("trials csv: unknown scheme '" + f[2] + "'");
            rows.push_back({std::stod(f[0]), std::stoul(f[1]), *scheme, std::stod(f[3]), std::stod(f[4]),
                            std::stod(f[5]), std::stod(f[6]), f[7] == "1", std::stoull(f[8])});
        }
        return rows;
    }

} // namespace maee

#endif // MAEE_HARNESS_HPP
