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

#include <maee/config.hpp>
#include <maee/ee.hpp>
#include <maee/params.hpp>

#include "oracles.hpp"

#include <random>

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("default parameters", "[params]")
{
    const maee::SystemParams p;
    CHECK(p.wavelength == 0.01);
    CHECK(p.region_length == 0.02);
    CHECK(p.initial_position == 0.01);
    CHECK_THAT(p.max_tx_power, WithinRel(0.01, 1e-12));
    CHECK_THAT(p.noise_power, WithinRel(1e-10, 1e-12));
    CHECK(p.movement_rate() == p.movement_power / p.speed);
    CHECK_THAT(p.movement_rate(), WithinRel(2.5, 1e-15));
    CHECK_THAT(maee::dbm_to_watt(10.0), WithinRel(0.01, 1e-12));
    CHECK_THAT(maee::db_to_linear(-40.0), WithinRel(1e-4, 1e-12));
    CHECK_NOTHROW(p.validate());

    auto bad = p;
    bad.initial_position = 0.03;
    CHECK_THROWS_AS(bad.validate(), maee::invalid_parameter);
    bad = p;
    bad.speed = 0.0;
    CHECK_THROWS_AS(bad.validate(), maee::invalid_parameter);
    bad = p;
    bad.noise_power = -1.0;
    CHECK_THROWS_AS(bad.validate(), maee::invalid_parameter);
}

TEST_CASE("mrc_snr", "[ee]")
{
    maee::SystemParams p;
    CHECK(maee::mrc_snr(0.0, p) == 0.0);
    CHECK_THAT(maee::mrc_snr(1e-6, p), WithinRel(1e2, 1e-12));
    CHECK_THAT(maee::mrc_snr(1e-3, p), WithinRel(1e5, 1e-12));
    const double g = maee::mrc_snr(3.7e-7, p);
    p.max_tx_power *= 2.0;
    CHECK_THAT(maee::mrc_snr(3.7e-7, p), WithinRel(2.0 * g, 1e-15));
}

TEST_CASE("movement_energy", "[ee]")
{
    const maee::SystemParams p;
    CHECK(maee::movement_energy(p.initial_position, p) == 0.0);
    CHECK_THAT(maee::movement_energy(0.0, p), WithinRel(0.025, 1e-12));
    CHECK_THAT(maee::movement_energy(0.02, p), WithinRel(0.025, 1e-12));
    for (double d : {0.001, 0.0042, 0.0099})
        CHECK_THAT(maee::movement_energy(p.initial_position + d, p),
                   WithinRel(maee::movement_energy(p.initial_position - d, p), 1e-12));
    CHECK_THROWS_AS(maee::movement_energy(-1e-6, p), std::domain_error);
    CHECK_THROWS_AS(maee::movement_energy(0.0201, p), std::domain_error);
}

TEST_CASE("total_energy", "[ee]")
{
    maee::SystemParams p;
    CHECK_THAT(maee::total_energy(p.initial_position, p), WithinRel(0.05, 1e-12));
    CHECK_THAT(maee::total_energy(0.0, p), WithinRel(0.0745, 1e-12));

    SECTION("movement takes the whole block")
    {
        p.block_duration = 0.01 / p.speed;
        CHECK(maee::total_energy(0.0, p) == maee::movement_energy(0.0, p));
        CHECK(maee::throughput(0.0, 1e-3, p) == 0.0);
    }

    SECTION("movement longer than the block")
    {
        p.block_duration = 0.04;
        CHECK_THROWS_AS(maee::total_energy(0.0, p), maee::infeasible_movement);
    }
}

TEST_CASE("throughput", "[ee]")
{
    const maee::SystemParams p;
    // gain giving snr 3
    const double g3 = 3.0 * p.noise_power / p.max_tx_power;
    CHECK_THAT(maee::throughput(p.initial_position, g3, p), WithinRel(10.0, 1e-12));
    CHECK(maee::throughput(p.initial_position, 0.0, p) == 0.0);
    CHECK_THAT(maee::throughput(0.0, g3, p), WithinRel(4.95 * 2.0, 1e-12));
}

TEST_CASE("energy_efficiency", "[ee]")
{
    const maee::SystemParams p;

    SECTION("at x0 the block duration cancels")
    {
        const double gain = 4.2e-7;
        const auto b = maee::energy_efficiency(p.initial_position, gain, p);
        CHECK_THAT(b.ee, WithinRel(std::log2(1.0 + maee::mrc_snr(gain, p)) / p.max_tx_power, 1e-12));
        CHECK(b.move_time == 0.0);
        CHECK(b.feasible);
    }

    SECTION("zero gain")
    {
        const auto b = maee::energy_efficiency(p.initial_position, 0.0, p);
        CHECK(b.ee == 0.0);
        CHECK_FALSE(b.feasible);
    }

    SECTION("hand chain at one wavelength of travel, snr 1e5")
    {
        const double gain = 1e5 * p.noise_power / p.max_tx_power;
        const auto b = maee::energy_efficiency(0.0, gain, p);
        const double R = 4.95 * std::log2(1.0 + 1e5);
        CHECK_THAT(b.throughput, WithinRel(R, 1e-12));
        CHECK_THAT(b.energy, WithinRel(0.0745, 1e-12));
        CHECK_THAT(b.ee, WithinRel(R / 0.0745, 1e-12));
        CHECK_THAT(b.move_time, WithinRel(0.05, 1e-12));
        CHECK_THAT(b.snr, WithinRel(1e5, 1e-12));
    }

    SECTION("expansion overload matches the direct gain")
    {
        std::mt19937_64 rng(5);
        const auto G = maee::sample_instance(p, rng);
        const auto e = maee::build_expansion(G, p.wavelength);
        for (double x : {0.0, 0.0037, 0.01, 0.0161})
        {
            const auto b = maee::energy_efficiency(e, p, x);
            const auto ref = maee::energy_efficiency(x, maee::test::direct_gain(G, p.wavelength, x), p);
            CHECK_THAT(b.ee, WithinRel(ref.ee, 1e-9));
            CHECK(b.feasible == ref.feasible);
        }
    }

    SECTION("feasibility follows the throughput threshold")
    {
        auto q = p;
        q.min_throughput = 10.0;
        const double g3 = 3.0 * q.noise_power / q.max_tx_power;
        CHECK(maee::energy_efficiency(q.initial_position, g3, q).feasible);
        CHECK_FALSE(maee::energy_efficiency(0.0, g3, q).feasible);
    }
}

TEST_CASE("ee_upper_bound", "[ee]")
{
    const maee::SystemParams p;

    SECTION("constant gain: first grid point")
    {
        const auto e = maee::build_expansion(maee::test::single_path_instance(16, 1), p.wavelength);
        const auto ub = maee::ee_upper_bound(e, p);
        CHECK(ub.x_bar == 0.0);
        CHECK_THAT(ub.ee, WithinRel(std::log2(1.0 + p.max_tx_power * e.X / p.noise_power) / p.max_tx_power, 1e-14));
    }

    SECTION("dominates the grid and is attained at x0 = x_bar")
    {
        std::mt19937_64 rng(31);
        for (int t = 0; t < 20; ++t)
        {
            const auto e = maee::build_expansion(maee::sample_instance(p, rng), p.wavelength);
            const auto ub = maee::ee_upper_bound(e, p);
            for (int i = 0; i <= 2000; ++i)
                REQUIRE(maee::energy_efficiency(e, p, p.region_length * i / 2000.0).ee <= ub.ee * (1.0 + 1e-9));
            auto q = p;
            q.initial_position = ub.x_bar;
            CHECK_THAT(maee::energy_efficiency(e, q, ub.x_bar).ee, WithinRel(ub.ee, 1e-12));
        }
    }

    SECTION("resolution must be positive")
    {
        const auto e = maee::build_expansion(maee::test::two_path_instance(0.0, 0.5), p.wavelength);
        CHECK_THROWS_AS(maee::ee_upper_bound(e, p, 0.0), maee::invalid_parameter);
    }
}

TEST_CASE("configuration files", "[config]")
{
    SECTION("empty input keeps the defaults and centres x0")
    {
        std::istringstream is("# nothing\n\n");
        const auto p = maee::parse_config(is);
        CHECK(p.region_length == 0.02);
        CHECK(p.initial_position == 0.01);
    }

    SECTION("units")
    {
        std::istringstream is("P_t = 20 dBm\nsigma2 = -80 dBm\nrho_0 = -30 dB\nA = 0.03 m\nP = 1 W  # comment\nN = 8\n");
        const auto p = maee::parse_config(is);
        CHECK_THAT(p.max_tx_power, WithinRel(0.1, 1e-12));
        CHECK_THAT(p.noise_power, WithinRel(1e-11, 1e-12));
        CHECK_THAT(p.pathloss_ref, WithinRel(1e-3, 1e-12));
        CHECK(p.region_length == 0.03);
        CHECK(p.initial_position == 0.015);
        CHECK(p.movement_power == 1.0);
        CHECK(p.num_bs_antennas == 8);
    }

    SECTION("explicit x0")
    {
        std::istringstream is("x0 = 0.004\n");
        CHECK(maee::parse_config(is).initial_position == 0.004);
    }

    SECTION("errors")
    {
        auto parse = [](const std::string &s)
        {
            std::istringstream is(s);
            return maee::parse_config(is);
        };
        CHECK_THROWS_AS(parse("bogus = 1\n"), maee::config_error);
        CHECK_THROWS_AS(parse("lambda 0.01\n"), maee::config_error);
        CHECK_THROWS_AS(parse("lambda = abc\n"), maee::config_error);
        CHECK_THROWS_AS(parse("lambda = -1\n"), maee::config_error);
        CHECK_THROWS_AS(parse("N = 2.5\n"), maee::config_error);
        CHECK_THROWS_AS(parse("x0 = 0.5\n"), maee::config_error);
        CHECK_THROWS_AS(maee::load_config("/nonexistent/maee.cfg"), maee::config_error);
    }
}
