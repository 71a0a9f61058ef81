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

#ifndef MAEE_CHANNEL_HPP
#define MAEE_CHANNEL_HPP

// Field-response channel of a single movable antenna on a line segment.
//
// The receive antenna sits at x in [0, A]. Path l arrives with virtual angle
// vartheta_l = sin(theta_l) cos(phi_l), so its phase at x is 2 pi x vartheta_l / lambda.
// The channel towards the N transmit antennas is h(x) = G^H f(x) with G an
// L x N path-response matrix. Its power gain has the closed form
//
//   |h(x)|^2 = X + sum_{a<b} 2 |Y_ab| cos(2 pi x dvartheta_ab / lambda + arg Y_ab)
//
// which is what the optimizer works on.

#include <maee/params.hpp>

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <span>
#include <vector>

namespace maee
{
    using cplx = std::complex<double>;

    /// Per-path arrival angles. vartheta is stored, never recomputed, so that a
    /// serialized instance replays bit-exactly.
    struct PathAngles
    {
        std::vector<double> theta;    // elevation [rad]
        std::vector<double> phi;      // azimuth [rad]
        std::vector<double> vartheta; // sin(theta) * cos(phi)

        std::size_t size() const { return vartheta.size(); }

        static PathAngles from_elevation_azimuth(std::vector<double> theta, std::vector<double> phi)
        {
            if (theta.size() != phi.size())
                throw invalid_parameter("theta and phi must have equal length");
            PathAngles out;
            out.vartheta.resize(theta.size());
            for (std::size_t l = 0; l < theta.size(); ++l)
                out.vartheta[l] = std::sin(theta[l]) * std::cos(phi[l]);
            out.theta = std::move(theta);
            out.phi = std::move(phi);
            return out;
        }

        /// Angles for which only the virtual angle matters (theta = pi/2, phi = acos(vartheta)).
        static PathAngles from_virtual(std::span<const double> vartheta)
        {
            PathAngles out;
            for (double v : vartheta)
            {
                if (!(v >= -1.0 && v <= 1.0))
                    throw invalid_parameter("virtual angle must lie in [-1, 1]");
                out.theta.push_back(std::numbers::pi / 2.0);
                out.phi.push_back(std::acos(v));
                out.vartheta.push_back(v);
            }
            return out;
        }
    };

    /// L x N complex path-response matrix, row-major.
    class PathResponseMatrix
    {
    public:
        PathResponseMatrix() = default;

        PathResponseMatrix(std::size_t num_paths, std::size_t num_antennas, PathAngles angles)
            : paths_(num_paths), antennas_(num_antennas), g_(num_paths * num_antennas), angles_(std::move(angles))
        {
            if (num_paths < 1 || num_antennas < 1)
                throw invalid_parameter("path-response matrix needs L >= 1 and N >= 1");
            if (angles_.size() != num_paths || angles_.theta.size() != num_paths || angles_.phi.size() != num_paths)
                throw invalid_parameter("angle arrays must have length L");
        }

        std::size_t num_paths() const { return paths_; }
        std::size_t num_antennas() const { return antennas_; }

        cplx &operator()(std::size_t l, std::size_t n) { return g_[l * antennas_ + n]; }
        const cplx &operator()(std::size_t l, std::size_t n) const { return g_[l * antennas_ + n]; }

        std::span<const cplx> row(std::size_t l) const { return {g_.data() + l * antennas_, antennas_}; }
        std::span<const cplx> entries() const { return g_; }

        const PathAngles &angles() const { return angles_; }

        bool all_finite() const
        {
            for (const auto &v : g_)
                if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                    return false;
            return true;
        }

    private:
        std::size_t paths_ = 0;
        std::size_t antennas_ = 0;
        std::vector<cplx> g_;
        PathAngles angles_;
    };

    /// f(x): unit-modulus phase of every path at position x.
    inline std::vector<cplx> field_response(const PathAngles &angles, double wavelength, double x)
    {
        if (!(wavelength > 0.0))
            throw invalid_parameter("wavelength must be > 0");
        const double k = two_pi / wavelength * x;
        std::vector<cplx> f(angles.size());
        for (std::size_t l = 0; l < f.size(); ++l)
            f[l] = std::polar(1.0, k * angles.vartheta[l]);
        return f;
    }

    /// h(x) = G^H f(x), length N.
    inline std::vector<cplx> channel_vector(const PathResponseMatrix &G, double wavelength, double x)
    {
        const auto f = field_response(G.angles(), wavelength, x);
        std::vector<cplx> h(G.num_antennas(), cplx{0.0, 0.0});
        for (std::size_t l = 0; l < G.num_paths(); ++l)
            for (std::size_t n = 0; n < G.num_antennas(); ++n)
                h[n] += std::conj(G(l, n)) * f[l];
        return h;
    }

    /// One a < b cross term of the gain expansion.
    struct CrossTerm
    {
        std::size_t a = 0, b = 0;
        cplx Y;               // sum_n g_an conj(g_bn)
        double magnitude = 0; // |Y|
        double phase = 0;     // arg Y
        double dvartheta = 0; // vartheta_b - vartheta_a
    };

    /// Closed-form coefficients of |h(x)|^2.
    struct GainExpansion
    {
        double X = 0.0; // sum |g_ln|^2
        std::vector<CrossTerm> terms;
        double wavelength = 0.0;
    };

    inline GainExpansion build_expansion(const PathResponseMatrix &G, double wavelength)
    {
        if (!(wavelength > 0.0))
            throw invalid_parameter("wavelength must be > 0");
        GainExpansion e;
        e.wavelength = wavelength;
        for (const auto &g : G.entries())
            e.X += std::norm(g);

        const std::size_t L = G.num_paths();
        const auto &vt = G.angles().vartheta;
        e.terms.reserve(L * (L - 1) / 2);
        for (std::size_t a = 0; a + 1 < L; ++a)
        {
            const auto ra = G.row(a);
            for (std::size_t b = a + 1; b < L; ++b)
            {
                const auto rb = G.row(b);
                cplx Y{0.0, 0.0};
                for (std::size_t n = 0; n < ra.size(); ++n)
                    Y += ra[n] * std::conj(rb[n]);
                e.terms.push_back({a, b, Y, std::abs(Y), std::arg(Y), vt[b] - vt[a]});
            }
        }
        return e;
    }

    /// |h(x)|^2 from the expansion.
    inline double gain_eval(const GainExpansion &e, double x)
    {
        const double k = two_pi / e.wavelength * x;
        double s = e.X;
        for (const auto &t : e.terms)
            s += 2.0 * t.magnitude * std::cos(k * t.dvartheta + t.phase);
        return s;
    }

    /// d/dx of P_t |h(x)|^2.
    inline double gain_derivative(const GainExpansion &e, double tx_power, double x)
    {
        const double k = two_pi / e.wavelength;
        double s = 0.0;
        for (const auto &t : e.terms)
            s -= 2.0 * k * tx_power * t.magnitude * t.dvartheta * std::sin(k * x * t.dvartheta + t.phase);
        return s;
    }

    /// d^2/dx^2 of P_t |h(x)|^2.
    inline double gain_second_derivative(const GainExpansion &e, double tx_power, double x)
    {
        const double k = two_pi / e.wavelength;
        double s = 0.0;
        for (const auto &t : e.terms)
            s -= 2.0 * k * k * tx_power * t.magnitude * t.dvartheta * t.dvartheta * std::cos(k * x * t.dvartheta + t.phase);
        return s;
    }

    /// Sum of the amplitudes of the second-derivative terms, 8 pi^2 P_t |Y| dv^2 / lambda^2.
    /// Dominates d^2/dx^2 of P_t |h(x)|^2 for every x. Zero when L = 1.
    inline double curvature_bound(const GainExpansion &e, double tx_power)
    {
        const double k = two_pi / e.wavelength;
        double s = 0.0;
        for (const auto &t : e.terms)
            s += 2.0 * k * k * tx_power * t.magnitude * t.dvartheta * t.dvartheta;
        return s;
    }

    /// Lower limit applied to the curvature bound wherever the quadratic surrogates need it positive.
    inline constexpr double curvature_floor = 1e-12;

    /// Draws G with i.i.d. CN(0, rho0 d^-alpha / L) entries and i.i.d. U[0, pi] elevation and azimuth.
    template <std::uniform_random_bit_generator Rng>
    PathResponseMatrix sample_instance(const SystemParams &params, Rng &rng)
    {
        const std::size_t L = params.num_paths, N = params.num_bs_antennas;
        if (L < 1 || N < 1)
            throw invalid_parameter("sample_instance needs L >= 1 and N >= 1");

        std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
        std::vector<double> theta(L), phi(L);
        for (std::size_t l = 0; l < L; ++l)
        {
            theta[l] = angle(rng);
            phi[l] = angle(rng);
        }

        PathResponseMatrix G(L, N, PathAngles::from_elevation_azimuth(std::move(theta), std::move(phi)));
        std::normal_distribution<double> normal(0.0, std::sqrt(params.path_variance() / 2.0));
        for (std::size_t l = 0; l < L; ++l)
            for (std::size_t n = 0; n < N; ++n)
            {
                const double re = normal(rng);
                const double im = normal(rng);
                G(l, n) = {re, im};
            }
        return G;
    }

} // namespace maee

#endif // MAEE_CHANNEL_HPP
