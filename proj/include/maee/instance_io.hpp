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

#ifndef MAEE_INSTANCE_IO_HPP
#define MAEE_INSTANCE_IO_HPP

// Flat text format for channel fixtures:
//
//   L N lambda
//   theta_1 phi_1 vartheta_1          (L lines)
//   ...
//   re,im re,im ... re,im             (L lines of N entries)
//
// Numbers are written with 17 significant digits so a read reproduces every bit.

#include <maee/channel.hpp>

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace maee
{
    struct ChannelInstance
    {
        PathResponseMatrix G;
        double wavelength = 0.0;
    };

    class instance_format_error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    inline void write_instance(std::ostream &os, const PathResponseMatrix &G, double wavelength)
    {
        const auto old_prec = os.precision(std::numeric_limits<double>::max_digits10);
        const auto &ang = G.angles();
        os << G.num_paths() << ' ' << G.num_antennas() << ' ' << wavelength << '\n';
        for (std::size_t l = 0; l < G.num_paths(); ++l)
            os << ang.theta[l] << ' ' << ang.phi[l] << ' ' << ang.vartheta[l] << '\n';
        for (std::size_t l = 0; l < G.num_paths(); ++l)
        {
            for (std::size_t n = 0; n < G.num_antennas(); ++n)
                os << (n ? " " : "") << G(l, n).real() << ',' << G(l, n).imag();
            os << '\n';
        }
        os.precision(old_prec);
    }

    inline ChannelInstance read_instance(std::istream &is)
    {
        auto fail = [](const std::string &what) -> void { throw instance_format_error("instance: " + what); };

        std::size_t L = 0, N = 0;
        double lambda = 0.0;
        if (!(is >> L >> N >> lambda))
            fail("bad header line");
        if (L < 1 || N < 1 || !(lambda > 0.0))
            fail("header needs L >= 1, N >= 1, lambda > 0");

        PathAngles ang;
        ang.theta.resize(L);
        ang.phi.resize(L);
        ang.vartheta.resize(L);
        for (std::size_t l = 0; l < L; ++l)
            if (!(is >> ang.theta[l] >> ang.phi[l] >> ang.vartheta[l]))
                fail("bad angle line " + std::to_string(l + 1));

        ChannelInstance out{PathResponseMatrix(L, N, std::move(ang)), lambda};
        for (std::size_t l = 0; l < L; ++l)
            for (std::size_t n = 0; n < N; ++n)
            {
                std::string tok;
                if (!(is >> tok))
                    fail("missing entry (" + std::to_string(l) + "," + std::to_string(n) + ")");
                const auto comma = tok.find(',');
                if (comma == std::string::npos)
                    fail("entry '" + tok + "' is not re,im");
                try
                {
                    std::size_t used_re = 0, used_im = 0;
                    const std::string re_s = tok.substr(0, comma), im_s = tok.substr(comma + 1);
                    const double re = std::stod(re_s, &used_re);
                    const double im = std::stod(im_s, &used_im);
                    if (used_re != re_s.size() || used_im != im_s.size())
                        fail("entry '" + tok + "' has trailing characters");
                    out.G(l, n) = {re, im};
                }
                catch (const std::logic_error &)
                {
                    fail("entry '" + tok + "' is not numeric");
                }
            }
        if (!out.G.all_finite())
            fail("non-finite entry");
        return out;
    }

    inline std::string to_text(const PathResponseMatrix &G, double wavelength)
    {
        std::ostringstream os;
        write_instance(os, G, wavelength);
        return os.str();
    }

} // namespace maee

#endif // MAEE_INSTANCE_IO_HPP
