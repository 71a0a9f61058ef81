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

#ifndef MAEE_SOLVER_HPP
#define MAEE_SOLVER_HPP

// Antenna position optimizer: Dinkelbach iteration on the energy-efficiency
// ratio, with successive convex approximation of each parametric subproblem.
//
// For a fixed Dinkelbach value alpha the subproblem, in variables
// (x, beta, gamma, delta), is
//
//   max  T log2(1 + beta/sigma^2) - (delta gamma)/v - (delta/v) alpha (P - P_t)
//   s.t. x in [0, A]
//        T log2(1 + beta/sigma^2) - (delta gamma)/v >= R_TH
//        beta  <= h(x),  gamma >= log2(1 + h(x)/sigma^2),  delta >= |x - x0|
//
// with h(x) = P_t |h(x)|^2. Around a local point (x_i, gamma_i, delta_i) the
// bilinear term is replaced by its arithmetic-geometric upper bound, h(x) by
// quadratic Taylor bounds of curvature eps, and sigma^2 2^gamma by its tangent.
// The convexified subproblem has scalar x; for a fixed x every slack has a
// closed-form optimum (see Surrogate::slacks), so the subproblem reduces to a
// concave 1D maximization over a trust window around x_i.

#include <maee/channel.hpp>
#include <maee/ee.hpp>
#include <maee/oracle.hpp>
#include <maee/params.hpp>
#include <maee/search.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <string_view>
#include <utility>
#include <vector>

namespace maee
{
    struct SolverOptions
    {
        int max_outer = 100;                  // Dinkelbach updates
        int max_inner = 50;                   // SCA steps per Dinkelbach value
        double trust_radius_fraction = 0.25;  // of lambda
        int window_samples = 64;              // grid cells per trust window before golden polish
        double delta_floor_fraction = 1e-6;   // of lambda, absolute lower limit of delta_i
        double gamma_floor = 1e-12;
        double oracle_resolution_fraction = default_oracle_resolution_fraction;
    };

    /// Smallest local distance used in the bilinear surrogate. At delta = 0 the
    /// surrogate overestimates delta * gamma by delta_floor * gamma / 2, which this
    /// choice keeps at half the convergence tolerance (after division by v).
    inline double delta_floor(double gamma_local, const SystemParams &p, const SolverOptions &opt)
    {
        const double by_tolerance = gamma_local > 0.0 ? p.tolerance * p.speed / gamma_local : 0.0;
        return std::clamp(by_tolerance, p.wavelength * opt.delta_floor_fraction,
                          p.wavelength * opt.trust_radius_fraction);
    }

    struct SolverState
    {
        int iter = 0;
        double x = 0.0;
        double beta = 0.0;  // <= h(x)
        double gamma = 0.0; // >= log2(1 + h(x)/sigma^2)
        double delta = 0.0; // >= |x - x0|
        double alpha = 0.0; // Dinkelbach value
        double objective = 0.0;
        bool converged = false;
    };

    enum class SolverStatus
    {
        converged,
        iteration_cap,
        infeasible
    };

    inline std::string_view to_string(SolverStatus s)
    {
        switch (s)
        {
        case SolverStatus::converged:
            return "converged";
        case SolverStatus::iteration_cap:
            return "iteration-cap";
        case SolverStatus::infeasible:
            return "infeasible";
        }
        return "?";
    }

    struct TraceRow
    {
        int outer = 0;
        int inner = 0;
        double x = 0.0;
        double alpha = 0.0;
        double surrogate = 0.0;
        double true_ee = 0.0;
    };

    struct SolverReport
    {
        double x = 0.0;
        EEBreakdown result; // recomputed from scratch at x
        int iterations = 0; // Dinkelbach updates performed
        int sca_steps = 0;
        SolverStatus status = SolverStatus::converged;
        bool restarted_from_oracle = false;
        bool movement_rewarded = false; // P < P_t: moving lowers the energy bill
        std::vector<double> alphas;     // alpha^0, alpha^1, ...
        std::vector<TraceRow> trace;
    };

    inline void write_trace_csv(std::ostream &os, const std::vector<TraceRow> &trace)
    {
        const auto old = os.precision(12);
        os << "iteration,inner,x,alpha,surrogate,true_ee\n";
        for (const auto &r : trace)
            os << r.outer << ',' << r.inner << ',' << r.x << ',' << r.alpha << ',' << r.surrogate << ',' << r.true_ee
               << '\n';
        os.precision(old);
    }

    /// P_t |h(x)|^2.
    inline double h_of_x(const GainExpansion &e, const SystemParams &p, double x)
    {
        return p.max_tx_power * gain_eval(e, x);
    }

    /// Next Dinkelbach value: the true energy efficiency at x.
    inline double dinkelbach_update(double x, const GainExpansion &e, const SystemParams &p)
    {
        return energy_efficiency(e, p, x).ee;
    }

    /// Convex upper bound of delta * gamma, tight at (delta_i, gamma_i).
    inline double bilinear_upper(double delta, double gamma, double delta_i, double gamma_i)
    {
        if (!(delta_i > 0.0 && gamma_i > 0.0))
            throw invalid_parameter("bilinear surrogate needs a positive local point");
        return 0.5 * (gamma_i / delta_i * delta * delta + delta_i / gamma_i * gamma * gamma);
    }

    /// Quadratic minorant and majorant of h around x_i.
    struct TaylorBounds
    {
        double x_local = 0.0;
        double value = 0.0;     // h(x_i)
        double slope = 0.0;     // h'(x_i)
        double curvature = 0.0; // eps

        double lower(double x) const
        {
            const double dx = x - x_local;
            return value + slope * dx - 0.5 * curvature * dx * dx;
        }
        double upper(double x) const
        {
            const double dx = x - x_local;
            return value + slope * dx + 0.5 * curvature * dx * dx;
        }
    };

    inline TaylorBounds taylor_bounds(const GainExpansion &e, const SystemParams &p, double x_local)
    {
        return {x_local, h_of_x(e, p, x_local), gain_derivative(e, p.max_tx_power, x_local),
                std::max(curvature_bound(e, p.max_tx_power), curvature_floor)};
    }

    struct SlackSolution
    {
        double beta = 0.0;
        double gamma = 0.0;
        double delta = 0.0;
        double objective = -std::numeric_limits<double>::infinity();
        bool feasible = false;
    };

    /// Convexified subproblem around one local point, for a fixed Dinkelbach value.
    class Surrogate
    {
    public:
        Surrogate(const SolverState &local, const GainExpansion &e, const SystemParams &p, double alpha,
                  const SolverOptions &opt = {})
            : p_(p), alpha_(alpha), bounds_(taylor_bounds(e, p, local.x)),
              gamma_i_(std::max(local.gamma, opt.gamma_floor)),
              delta_i_(std::max(local.delta, delta_floor(gamma_i_, p, opt))),
              two_pow_gamma_i_(std::exp2(gamma_i_))
        {
        }

        const TaylorBounds &bounds() const { return bounds_; }
        double gamma_local() const { return gamma_i_; }
        double delta_local() const { return delta_i_; }

        /// Surrogate objective for explicit slacks (no feasibility check).
        double objective(double beta, double gamma, double delta) const
        {
            return rate_term(beta) - bilinear_upper(delta, gamma, delta_i_, gamma_i_) / p_.speed -
                   delta / p_.speed * alpha_ * (p_.movement_power - p_.max_tx_power);
        }

        // Constraint residuals, feasible when >= 0.
        double rate_margin(double beta, double gamma, double delta) const
        {
            return rate_term(beta) - bilinear_upper(delta, gamma, delta_i_, gamma_i_) / p_.speed - p_.min_throughput;
        }
        double gain_lower_margin(double x, double beta) const { return bounds_.lower(x) - beta; }
        double gain_upper_margin(double x, double gamma) const { return linearized_power(gamma) - bounds_.upper(x); }
        double distance_margin(double x, double delta) const { return delta - std::abs(x - p_.initial_position); }

        bool admissible(double x, double beta, double gamma, double delta, double slack = 0.0) const
        {
            return x >= 0.0 && x <= p_.region_length && beta > -p_.noise_power &&
                   rate_margin(beta, gamma, delta) >= -slack && gain_lower_margin(x, beta) >= -slack &&
                   gain_upper_margin(x, gamma) >= -slack && distance_margin(x, delta) >= -slack;
        }

        /// Optimal slacks at fixed x.
        ///
        /// beta:  the objective and the rate constraint increase with beta, so beta <= h_lb(x) binds.
        /// gamma: both decrease in |gamma| and only the linearized gain constraint bounds it from
        ///        below, so gamma = max(0, smallest value meeting that constraint).
        /// delta: concave quadratic with peak at -alpha (P - P_t) delta_i / gamma_i, clamped to
        ///        [|x - x0|, largest delta meeting the rate constraint].
        SlackSolution slacks(double x) const
        {
            SlackSolution s;
            if (!(x >= 0.0 && x <= p_.region_length))
                return s;
            s.beta = bounds_.lower(x);
            if (!(s.beta > -p_.noise_power))
                return s;

            const double sigma2 = p_.noise_power;
            const double scale = sigma2 * two_pow_gamma_i_;
            const double gamma_min = gamma_i_ + (bounds_.upper(x) - (scale - sigma2)) / (scale * std::numbers::ln2);
            s.gamma = std::max(gamma_min, 0.0);

            const double distance = std::abs(x - p_.initial_position);
            // rate margin as a function of delta: budget - 0.5 (gamma_i/delta_i) delta^2 / v >= 0
            const double budget =
                rate_term(s.beta) - p_.min_throughput - 0.5 * delta_i_ / gamma_i_ * s.gamma * s.gamma / p_.speed;
            if (budget < 0.0)
                return s;
            const double delta_max = std::sqrt(2.0 * p_.speed * budget * delta_i_ / gamma_i_);
            if (delta_max < distance)
                return s;
            const double delta_peak = -alpha_ * (p_.movement_power - p_.max_tx_power) * delta_i_ / gamma_i_;
            s.delta = std::clamp(delta_peak, distance, delta_max);

            s.objective = objective(s.beta, s.gamma, s.delta);
            s.feasible = true;
            return s;
        }

    private:
        double rate_term(double beta) const { return p_.block_duration * std::log2(1.0 + beta / p_.noise_power); }

        double linearized_power(double gamma) const
        {
            const double scale = p_.noise_power * two_pow_gamma_i_;
            return scale - p_.noise_power + scale * (gamma - gamma_i_) * std::numbers::ln2;
        }

        SystemParams p_;
        double alpha_;
        TaylorBounds bounds_;
        double gamma_i_;
        double delta_i_;
        double two_pow_gamma_i_;
    };

    /// Optimal slacks of the convexified subproblem at a fixed x.
    inline SlackSolution eliminate_slacks(double x, const SolverState &local, const GainExpansion &e,
                                          const SystemParams &p, double alpha, const SolverOptions &opt = {})
    {
        return Surrogate(local, e, p, alpha, opt).slacks(x);
    }

    /// Solves the convexified subproblem around `local` for the given alpha. The local
    /// point itself is always a candidate, so the returned objective never drops below
    /// the surrogate value there. Returns a state with converged = false and
    /// objective = -inf when no admissible x exists in the window.
    inline SolverState solve_subproblem(const SolverState &local, const GainExpansion &e, const SystemParams &p,
                                        double alpha, const SolverOptions &opt = {})
    {
        const Surrogate sur(local, e, p, alpha, opt);
        auto value = [&](double x) { return sur.slacks(x).objective; };

        const double radius = p.wavelength * opt.trust_radius_fraction;
        const double lo = std::max(0.0, local.x - radius);
        const double hi = std::min(p.region_length, local.x + radius);
        const double step = (hi - lo) / std::max(opt.window_samples, 1);
        const double tol = p.wavelength * golden_tolerance_fraction;

        ScalarMax best = grid_argmax(value, lo, hi, step);
        if (best.found() && hi > lo)
        {
            // The surrogate is concave in x but, like the true objective, has a kink at x0.
            const double a = std::max(lo, best.x - step), b = std::min(hi, best.x + step);
            for (auto [l, h] : {std::pair{a, std::min(b, p.initial_position)}, std::pair{std::max(a, p.initial_position), b}})
            {
                if (h - l <= tol)
                    continue;
                const auto polished = golden_section_max(value, l, h, tol);
                if (polished.value > best.value)
                    best = polished;
            }
        }
        const double at_local = value(local.x);
        if (at_local >= best.value)
            best = {local.x, at_local};

        SolverState out = local;
        out.iter = local.iter + 1;
        out.alpha = alpha;
        if (!best.found())
        {
            out.objective = -std::numeric_limits<double>::infinity();
            out.converged = false;
            return out;
        }
        const auto s = sur.slacks(best.x);
        out.x = best.x;
        out.beta = s.beta;
        out.gamma = s.gamma;
        out.delta = s.delta;
        out.objective = s.objective;
        return out;
    }

    namespace detail
    {
        inline SolverState initial_state(const GainExpansion &e, const SystemParams &p, double x,
                                         const SolverOptions &opt)
        {
            SolverState s;
            s.x = x;
            s.beta = h_of_x(e, p, x);
            s.gamma = std::log2(1.0 + s.beta / p.noise_power);
            s.delta = std::max(std::abs(x - p.initial_position), delta_floor(s.gamma, p, opt));
            s.alpha = dinkelbach_update(x, e, p);
            return s;
        }
    } // namespace detail

    /// Maximizes the true energy efficiency over the antenna position, starting at x0.
    ///
    /// Outer loop: alpha is set to the energy efficiency of the current position. Inner
    /// loop: SCA steps on the alpha-parametric subproblem until the surrogate objective
    /// gains less than the tolerance. A position is accepted only if its true energy
    /// efficiency does not fall below alpha. The run stops once an inner loop gains
    /// less than the tolerance in total.
    ///
    /// If x0 violates the throughput requirement, the grid oracle decides: status
    /// infeasible if no position in [0, A] meets it, else SCA restarts from the oracle's
    /// best feasible point.
    inline SolverReport optimize(const GainExpansion &e, const SystemParams &p, const SolverOptions &opt = {})
    {
        p.validate();
        SolverReport rep;
        rep.movement_rewarded = p.movement_power < p.max_tx_power;
        const double eps = p.tolerance;

        double start = p.initial_position;
        if (!energy_efficiency(e, p, start).feasible)
        {
            const auto oracle = grid_global_ee(e, p, p.wavelength * opt.oracle_resolution_fraction);
            if (!oracle.feasible)
            {
                rep.x = p.initial_position;
                rep.result = energy_efficiency(e, p, rep.x);
                rep.status = SolverStatus::infeasible;
                rep.alphas.push_back(rep.result.ee);
                return rep;
            }
            start = oracle.best.x;
            rep.restarted_from_oracle = true;
        }

        SolverState state = detail::initial_state(e, p, start, opt);
        double alpha = state.alpha;
        rep.alphas.push_back(alpha);
        rep.status = SolverStatus::iteration_cap;

        for (int outer = 1; outer <= opt.max_outer; ++outer)
        {
            SolverState local = state;
            const double first = Surrogate(local, e, p, alpha, opt).slacks(local.x).objective;
            double previous = first;
            for (int inner = 1; inner <= opt.max_inner; ++inner)
            {
                SolverState next = solve_subproblem(local, e, p, alpha, opt);
                ++rep.sca_steps;
                if (!std::isfinite(next.objective))
                    break;
                rep.trace.push_back({outer, inner, next.x, alpha, next.objective, dinkelbach_update(next.x, e, p)});
                const double gain = next.objective - previous;
                local = next;
                previous = next.objective;
                if (gain < eps)
                    break;
            }
            rep.iterations = outer;

            const double candidate_ee = dinkelbach_update(local.x, e, p);
            const bool improves = candidate_ee >= alpha && energy_efficiency(e, p, local.x).feasible;
            if (improves)
            {
                state = local;
                alpha = candidate_ee;
                state.alpha = alpha;
                rep.alphas.push_back(alpha);
            }
            if (!improves || !(previous - first >= eps))
            {
                rep.status = SolverStatus::converged;
                state.converged = true;
                break;
            }
        }

        rep.x = state.x;
        rep.result = energy_efficiency(e, p, rep.x);
        return rep;
    }

} // namespace maee

#endif // MAEE_SOLVER_HPP
