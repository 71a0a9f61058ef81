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

// maee_cli: solve single instances, run the grid oracle, run parameter sweeps
// and self-checks from the command line.
//
// Exit codes: 0 success, 1 only infeasible results (or a failed check), 2 usage or
// configuration error.

#include <maee/maee.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace
{
    constexpr int exit_ok = 0;
    constexpr int exit_infeasible = 1;
    constexpr int exit_usage = 2;

    struct Options
    {
        std::string config;
        std::uint64_t seed = 1;
        std::size_t trials = 200;
        std::string sweep = "region";
        std::string values;
        std::string out;
        double resolution = 0.0;
        bool trace = false;
        unsigned workers = 1;
        std::string instance;
        std::string save_instance;
        std::vector<std::string> schemes;
    };

    maee::SystemParams load_params(const Options &o)
    {
        return o.config.empty() ? maee::SystemParams{} : maee::load_config(o.config);
    }

    double grid_step(const Options &o, const maee::SystemParams &p)
    {
        const double step = o.resolution > 0.0 ? o.resolution : p.wavelength * maee::default_oracle_resolution_fraction;
        if (step > p.wavelength / 100.0)
            throw maee::config_error("--resolution must not exceed lambda/100");
        return step;
    }

    /// Channel used by `solve`, `oracle`: a fixture file or trial 0 of the seed.
    maee::GainExpansion load_channel(const Options &o, maee::SystemParams &p)
    {
        maee::PathResponseMatrix G;
        if (!o.instance.empty())
        {
            std::ifstream f(o.instance);
            if (!f)
                throw maee::config_error("cannot open instance '" + o.instance + "'");
            auto inst = maee::read_instance(f);
            p.wavelength = inst.wavelength;
            p.num_paths = inst.G.num_paths();
            p.num_bs_antennas = inst.G.num_antennas();
            G = std::move(inst.G);
        }
        else
            G = maee::instance_for_seed(p, maee::trial_seed(o.seed, 0));

        if (!o.save_instance.empty())
        {
            std::ofstream f(o.save_instance);
            if (!f)
                throw maee::io_error("cannot write instance '" + o.save_instance + "'");
            maee::write_instance(f, G, p.wavelength);
        }
        return maee::build_expansion(G, p.wavelength);
    }

    void print_results(const std::vector<maee::SchemeResult> &results)
    {
        std::cout << "scheme,x,ee,throughput,energy,feasible\n";
        for (const auto &r : results)
            std::cout << maee::to_string(r.scheme) << ',' << maee::fmt12(r.x) << ',' << maee::fmt12(r.ee) << ','
                      << maee::fmt12(r.throughput) << ',' << maee::fmt12(r.energy) << ',' << (r.feasible ? 1 : 0)
                      << '\n';
    }

    int cmd_solve(const Options &o)
    {
        auto p = load_params(o);
        const auto e = load_channel(o, p);
        const double step = grid_step(o, p);

        const auto rep = maee::optimize(e, p);
        std::vector<maee::SchemeResult> results;
        auto proposed = maee::detail::from_breakdown(maee::Scheme::proposed, rep.result);
        proposed.feasible = proposed.feasible && rep.status != maee::SolverStatus::infeasible;
        results.push_back(proposed);
        for (auto s : {maee::Scheme::upper_bound, maee::Scheme::max_throughput, maee::Scheme::max_snr, maee::Scheme::fpa,
                       maee::Scheme::oracle})
            results.push_back(maee::run_scheme(s, e, p, step));
        print_results(results);

        std::cout << "status=" << maee::to_string(rep.status) << " iterations=" << rep.iterations
                  << " sca_steps=" << rep.sca_steps << " restarted_from_oracle=" << rep.restarted_from_oracle
                  << " movement_rewarded=" << rep.movement_rewarded << '\n';
        if (o.trace)
            maee::write_trace_csv(std::cout, rep.trace);
        if (!o.out.empty())
        {
            std::filesystem::create_directories(o.out);
            std::ofstream f(std::filesystem::path(o.out) / "trace.csv");
            if (!f)
                throw maee::io_error("cannot write trace into '" + o.out + "'");
            maee::write_trace_csv(f, rep.trace);
        }
        return proposed.feasible ? exit_ok : exit_infeasible;
    }

    int cmd_oracle(const Options &o)
    {
        auto p = load_params(o);
        const auto e = load_channel(o, p);
        const auto r = maee::grid_global_scheme(e, p, grid_step(o, p));
        print_results({r});
        return r.feasible ? exit_ok : exit_infeasible;
    }

    std::vector<double> parse_values(const std::string &text)
    {
        std::vector<double> out;
        std::stringstream ss(text);
        for (std::string cell; std::getline(ss, cell, ',');)
        {
            std::size_t used = 0;
            double v = 0.0;
            try
            {
                v = std::stod(cell, &used);
            }
            catch (const std::logic_error &)
            {
                throw maee::config_error("--values: '" + cell + "' is not a number");
            }
            if (used != cell.size())
                throw maee::config_error("--values: '" + cell + "' is not a number");
            out.push_back(v);
        }
        return out;
    }

    int cmd_sweep(const Options &o)
    {
        maee::SweepConfig cfg;
        cfg.base = load_params(o);
        if (o.sweep == "region")
        {
            cfg.variable = maee::SweepVariable::region_size;
            cfg.values = {0.5, 1.0, 1.5, 2.0};
        }
        else if (o.sweep == "power")
        {
            cfg.variable = maee::SweepVariable::movement_power;
            cfg.values = {0.1, 0.5, 1.0, 2.0, 5.0};
        }
        else
            throw maee::config_error("--sweep must be region or power");
        if (!o.values.empty())
            cfg.values = parse_values(o.values);
        cfg.trials = o.trials;
        cfg.master_seed = o.seed;
        cfg.resolution = o.resolution;
        cfg.workers = o.workers;
        if (!o.schemes.empty())
        {
            cfg.schemes.clear();
            for (const auto &name : o.schemes)
            {
                const auto s = maee::parse_scheme(name);
                if (!s)
                    throw maee::config_error("unknown scheme '" + name + "'");
                cfg.schemes.push_back(*s);
            }
        }
        try
        {
            cfg.validate();
        }
        catch (const maee::invalid_parameter &ex)
        {
            throw maee::config_error(ex.what());
        }

        const auto res = maee::run_sweep(cfg);
        maee::emit_csv(res.records, res.aggregates, o.out.empty() ? "results" : o.out);
        maee::write_aggregate_csv(std::cout, res.aggregates);

        for (const auto &rec : res.records)
            for (const auto &r : rec.results)
                if (r.feasible)
                    return exit_ok;
        return exit_infeasible;
    }

    // ---- check ---------------------------------------------------------------

    double direct_gain(const maee::PathResponseMatrix &G, double wavelength, double x)
    {
        double s = 0.0;
        for (const auto &h : maee::channel_vector(G, wavelength, x))
            s += std::norm(h);
        return s;
    }

    int cmd_check(const Options &o)
    {
        const auto p = load_params(o);
        const std::size_t trials = o.trials;
        struct Check
        {
            const char *name;
            double worst = 0.0;
            double limit;
        };
        Check closed{"closed-form gain vs G^H f(x)", 0.0, 1e-9};
        Check first{"first derivative vs central difference", 0.0, 1e-4};
        Check second{"second derivative vs central difference", 0.0, 1e-3};
        Check curvature{"curvature bound dominates d2h/dx2", 0.0, 0.0};
        Check ub_check{"grid EE <= upper bound", 0.0, 1e-9};
        Check sandwich{"Taylor sandwich at x0", 0.0, 1e-12};
        Check bracket{"solver EE within [EE(x0), oracle]", 0.0, 1e-9};
        Check ascent{"Dinkelbach values nondecreasing", 0.0, 1e-9};

        const double step = grid_step(o, p);
        for (std::size_t t = 0; t < trials; ++t)
        {
            const auto G = maee::instance_for_seed(p, maee::trial_seed(o.seed, t));
            const auto e = maee::build_expansion(G, p.wavelength);
            const double eps = maee::curvature_bound(e, p.max_tx_power);
            double slope_scale = 0.0;
            for (const auto &term : e.terms)
                slope_scale += 2.0 * maee::two_pi / p.wavelength * p.max_tx_power * term.magnitude * std::abs(term.dvartheta);
            const auto tb = maee::taylor_bounds(e, p, p.initial_position);

            for (int i = 0; i <= 1000; ++i)
            {
                const double x = p.region_length * i / 1000.0;
                const double direct = direct_gain(G, p.wavelength, x);
                const double g = maee::gain_eval(e, x);
                closed.worst = std::max(closed.worst, std::abs(g - direct) / std::max(std::abs(direct), 1e-300));

                const auto h = [&](double y) { return maee::h_of_x(e, p, y); };
                const double d1 = maee::gain_derivative(e, p.max_tx_power, x);
                const double fd1 = (h(x + 1e-8) - h(x - 1e-8)) / 2e-8;
                first.worst = std::max(first.worst, std::abs(d1 - fd1) / std::max({std::abs(fd1), slope_scale, 1e-300}));
                const double d2 = maee::gain_second_derivative(e, p.max_tx_power, x);
                const double fd2 = (h(x + 1e-6) - 2.0 * h(x) + h(x - 1e-6)) / 1e-12;
                second.worst = std::max(second.worst, std::abs(d2 - fd2) / std::max({std::abs(fd2), eps, 1e-300}));
                curvature.worst = std::max(curvature.worst, d2 - eps);

                const double hx = h(x);
                sandwich.worst = std::max({sandwich.worst, (tb.lower(x) - hx) / std::max(hx, 1e-300),
                                           (hx - tb.upper(x)) / std::max(hx, 1e-300)});
            }

            const auto ub = maee::ee_upper_bound(e, p);
            for (int i = 0; i <= 1000; ++i)
            {
                const double x = p.region_length * i / 1000.0;
                ub_check.worst = std::max(ub_check.worst, maee::energy_efficiency(e, p, x).ee / ub.ee - 1.0);
            }

            const auto rep = maee::optimize(e, p);
            const auto x0 = maee::energy_efficiency(e, p, p.initial_position);
            const auto oracle = maee::grid_global_ee(e, p, step);
            if (x0.feasible)
                bracket.worst = std::max(bracket.worst, x0.ee - rep.result.ee);
            if (oracle.feasible)
                bracket.worst = std::max(bracket.worst, rep.result.ee - oracle.best.ee);
            for (std::size_t i = 1; i < rep.alphas.size(); ++i)
                ascent.worst = std::max(ascent.worst, rep.alphas[i - 1] - rep.alphas[i]);
        }

        bool ok = true;
        for (const auto *c : {&closed, &first, &second, &curvature, &ub_check, &sandwich, &bracket, &ascent})
        {
            const bool pass = c->worst <= c->limit;
            ok = ok && pass;
            std::printf("%s %-42s worst=%.3e limit=%.1e\n", pass ? "PASS" : "FAIL", c->name, c->worst, c->limit);
        }
        return ok ? exit_ok : exit_infeasible;
    }

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Energy-efficiency optimization of a movable receive antenna"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App *cmd)
    {
        cmd->add_option("--config", o.config, "Scenario file (key = value)");
        cmd->add_option("--seed", o.seed, "Master seed");
        cmd->add_option("--resolution", o.resolution, "Grid step of the oracle searches [m]");
    };

    auto *solve = app.add_subcommand("solve", "Optimize one channel instance and compare all schemes");
    common(solve);
    solve->add_flag("--trace", o.trace, "Print the per-iteration solver trace as CSV");
    solve->add_option("--out", o.out, "Directory for trace.csv");
    solve->add_option("--instance", o.instance, "Read the channel from a fixture file");
    solve->add_option("--save-instance", o.save_instance, "Write the channel to a fixture file");

    auto *oracle = app.add_subcommand("oracle", "Exhaustive grid search of the energy efficiency");
    common(oracle);
    oracle->add_option("--instance", o.instance, "Read the channel from a fixture file");
    oracle->add_option("--save-instance", o.save_instance, "Write the channel to a fixture file");

    auto *sweep = app.add_subcommand("sweep", "Monte-Carlo sweep over region size or movement power");
    common(sweep);
    sweep->add_option("--sweep", o.sweep, "region (values are A/lambda) or power (values are P in W)");
    sweep->add_option("--values", o.values, "Comma-separated sweep values");
    sweep->add_option("--trials", o.trials, "Trials per sweep value");
    sweep->add_option("--out", o.out, "Output directory for trials.csv and summary.csv");
    sweep->add_option("--workers", o.workers, "Worker threads");
    sweep->add_option("--schemes", o.schemes, "Schemes to evaluate")->delimiter(',');

    auto *check = app.add_subcommand("check", "Run the invariant checks on random instances");
    common(check);
    o.trials = 200;
    check->add_option("--trials", o.trials, "Number of random instances");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return exit_usage;
    }

    try
    {
        if (*solve)
            return cmd_solve(o);
        if (*oracle)
            return cmd_oracle(o);
        if (*sweep)
            return cmd_sweep(o);
        if (*check)
        {
            if (check->count("--trials") == 0)
                o.trials = 20;
            return cmd_check(o);
        }
    }
    catch (const maee::config_error &e)
    {
        std::cerr << "configuration error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const maee::invalid_parameter &e)
    {
        std::cerr << "configuration error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const maee::instance_format_error &e)
    {
        std::cerr << "configuration error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
