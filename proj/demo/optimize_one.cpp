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

// Draws a few channels with the default scenario and compares the optimizer
// with fixed-antenna operation and the exhaustive search.

#include <maee/maee.hpp>

#include <cstdio>
#include <random>

int main()
{
    const maee::SystemParams p;
    std::mt19937_64 rng(2024);
    std::printf("%5s %10s %10s %10s %10s %6s %s\n", "trial", "x[mm]", "ee", "fpa", "oracle", "iters", "status");
    for (int t = 0; t < 10; ++t)
    {
        const auto G = maee::sample_instance(p, rng);
        const auto e = maee::build_expansion(G, p.wavelength);
        const auto rep = maee::optimize(e, p);
        const auto fpa = maee::scheme_fpa(e, p);
        const auto oracle = maee::grid_global_ee(e, p);
        std::printf("%5d %10.4f %10.4f %10.4f %10.4f %6d %s\n", t, rep.x * 1e3, rep.result.ee, fpa.ee,
                    oracle.best.ee, rep.iterations, std::string(maee::to_string(rep.status)).c_str());
    }
}
