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

#include <catch2/catch_amalgamated.hpp>

#include <maee/bench.hpp>
#include <maee/search.hpp>

#include "oracles.hpp"

#include <random>

using Catch::Matchers::WithinRel;

namespace
{
    constexpr double grid = 0.01 / 500.0;

    maee::GainExpansion random_expansion(std::uint64_t seed, const maee::SystemParams &p = {})
    {
        std::mt19937_64 rng(seed);
        return maee::build_expansion(maee::sample_instance(p, rng), p.wavelength);
    }
} // namespace

TEST_CASE("scalar search", "[search]")
{
    auto f = [](double x) { return -(x - 0.3) * (x - 0.3); };
    const auto g = maee::grid_argmax(f, 0.0, 1.0, 0.1);
    CHECK(g.x == Catch::Approx(0.3));
    const auto gs = maee::golden_section_max(f, 0.0, 1.0, 1e-10);
    CHECK(gs.x == Catch::Approx(0.3).margin(1e-9));
    const auto both = maee::grid_then_golden(f, 0.0, 1.0, 0.07, 1e-10);
    CHECK(both.x == Catch::Approx(0.3).margin(1e-9));

    // ties: smallest x
    CHECK(maee::grid_argmax([](double) { return 1.0; }, 0.0, 1.0, 0.25).x == 0.0);
    CHECK_FALSE(maee::grid_argmax([](double) { return -std::numeric_limits<double>::infinity(); }, 0.0, 1.0, 0.25)
                    .found());
}

TEST_CASE("scheme names", "[bench]")
{
    for (auto s : {maee::Scheme::proposed, maee::Scheme::upper_bound, maee::Scheme::max_throughput,
                   maee::Scheme::max_snr, maee::Scheme::fpa, maee::Scheme::oracle})
        CHECK(maee::parse_scheme(maee::to_string(s)) == s);
    CHECK_FALSE(maee::parse_scheme("FPA").has_value());
    CHECK(maee::default_schemes.size() == 5);
}

TEST_CASE("grid_global_scheme", "[bench]")
{
    const maee::SystemParams p;

    SECTION("constant gain: stays at x0")
    {
        const auto e = maee::build_expansion(maee::test::single_path_instance(16, 4), p.wavelength);
        const auto r = maee::grid_global_scheme(e, p, grid);
        CHECK(r.x == p.initial_position);
        CHECK_THAT(r.ee, WithinRel(std::log2(1.0 + p.max_tx_power * e.X / p.noise_power) / p.max_tx_power, 1e-14));
        CHECK(r.scheme == maee::Scheme::oracle);
    }

    SECTION("halving the resolution barely moves the optimum")
    {
        for (std::uint64_t seed = 0; seed < 10; ++seed)
        {
            const auto e = random_expansion(seed);
            const double a = maee::grid_global_scheme(e, p, grid).ee;
            const double b = maee::grid_global_scheme(e, p, grid / 2.0).ee;
            CHECK(std::abs(a - b) <= 1e-6 * b);
        }
    }

    SECTION("coarse resolution rejected")
    {
        CHECK_THROWS_AS(maee::grid_global_scheme(random_expansion(1), p, p.wavelength / 50.0), maee::invalid_parameter);
    }

    SECTION("nobody meets the threshold")
    {
        auto q = p;
        q.min_throughput = 1e3;
        CHECK_FALSE(maee::grid_global_scheme(random_expansion(1), q, grid).feasible);
    }
}

TEST_CASE("benchmark schemes", "[bench]")
{
    const maee::SystemParams p;

    SECTION("constant gain")
    {
        const auto e = maee::build_expansion(maee::test::single_path_instance(16, 4), p.wavelength);
        CHECK(maee::scheme_max_throughput(e, p, grid).x == p.initial_position);
        CHECK(maee::scheme_upper_bound(e, p).x == 0.0);
    }

    SECTION("ordering and consistency on random instances")
    {
        for (std::uint64_t seed = 200; seed < 230; ++seed)
        {
            const auto e = random_expansion(seed);
            const auto ub = maee::scheme_upper_bound(e, p);
            const auto mt = maee::scheme_max_throughput(e, p, grid);
            const auto ms = maee::scheme_max_snr(e, p);
            const auto fpa = maee::scheme_fpa(e, p);
            const auto prop = maee::scheme_proposed(e, p);
            const auto glob = maee::grid_global_scheme(e, p, grid);

            CHECK(ms.x == maee::ee_upper_bound(e, p).x_bar);
            CHECK(ms.ee <= ub.ee * (1.0 + 1e-12));
            CHECK(glob.ee <= ub.ee * (1.0 + 1e-9));
            CHECK(fpa.ee <= glob.ee + 1e-9);
            CHECK(mt.ee <= glob.ee + 1e-9);
            CHECK(prop.ee >= fpa.ee - 1e-9);
            CHECK(prop.ee <= glob.ee + 1e-9);
            CHECK(fpa.x == p.initial_position);
            CHECK_THAT(fpa.ee, WithinRel(maee::energy_efficiency(e, p, p.initial_position).ee, 1e-15));
            CHECK_THAT(ub.energy, WithinRel(p.max_tx_power * p.block_duration, 1e-15));
            CHECK_THAT(ub.throughput / ub.energy, WithinRel(ub.ee, 1e-12));

            for (const auto &r : {mt, ms, fpa, prop, glob})
            {
                const auto b = maee::energy_efficiency(e, p, r.x);
                CHECK_THAT(r.throughput, WithinRel(b.throughput, 1e-12));
                CHECK_THAT(r.energy, WithinRel(b.energy, 1e-12));
                CHECK_THAT(r.ee, WithinRel(r.throughput / r.energy, 1e-12));
            }

            for (int i = 0; i <= 1000; ++i)
            {
                const double x = p.region_length * i / 1000.0;
                REQUIRE(mt.throughput >= maee::throughput(x, maee::gain_eval(e, x), p) * (1.0 - 1e-12));
                REQUIRE(maee::gain_eval(e, ms.x) >= maee::gain_eval(e, x) * (1.0 - 1e-12));
            }
        }
    }

    SECTION("max-SNR from the best-gain position equals the upper bound")
    {
        const auto e = random_expansion(17);
        auto q = p;
        q.initial_position = maee::ee_upper_bound(e, p).x_bar;
        const auto ms = maee::scheme_max_snr(e, q);
        const auto ub = maee::scheme_upper_bound(e, q);
        CHECK(ms.x == ub.x);
        CHECK_THAT(ms.ee, WithinRel(ub.ee, 1e-12));
        CHECK_THAT(ms.throughput, WithinRel(ub.throughput, 1e-12));
        CHECK_THAT(ms.energy, WithinRel(ub.energy, 1e-12));
    }

    SECTION("fixed position ignores the movement parameters")
    {
        const auto e = random_expansion(18);
        auto q = p;
        q.movement_power = 7.0;
        q.speed = 0.01;
        CHECK(maee::scheme_fpa(e, q).ee == maee::scheme_fpa(e, p).ee);
    }

    SECTION("dispatcher")
    {
        const auto e = random_expansion(19);
        for (auto s : {maee::Scheme::proposed, maee::Scheme::upper_bound, maee::Scheme::max_throughput,
                       maee::Scheme::max_snr, maee::Scheme::fpa, maee::Scheme::oracle})
            CHECK(maee::run_scheme(s, e, p, grid).scheme == s);
    }
}
