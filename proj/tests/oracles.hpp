// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The ssbtma Authors
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


// Independent reference computations used by the unit tests and the acceptance suite. Nothing here
// calls into the spectral code paths of the library.

#ifndef SSBTMA_TESTS_ORACLES_HPP
#define SSBTMA_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

namespace oracle
{
    using cplx = std::complex<double>;
    constexpr double pi = std::numbers::pi;
    constexpr double sqrt2 = std::numbers::sqrt2;

    /// Stair-step level on [0, 1) written directly from its six plateaus.
    inline double stair(double t)
    {
        t -= std::floor(t);
        const double hi = 1.0 + sqrt2;
        if (t < 0.125)
            return 1.0;
        if (t < 0.375)
            return hi;
        if (t < 0.5)
            return 1.0;
        if (t < 0.625)
            return -1.0;
        if (t < 0.875)
            return -hi;
        return -1.0;
    }

    /// On-off gate that is 1 on [0, xi) of each period.
    inline double gate(double t, double xi)
    {
        t -= std::floor(t);
        return t < xi ? 1.0 : 0.0;
    }

    /// Fourier coefficients of one element's time-modulated excitation
    ///   g(t) = gate(t, xi) * (stair(t - D) + j stair(t - D - tau)) / (sqrt2 (1 + sqrt2))
    /// from m_samples cells. Every breakpoint must sit on the cell grid; the signal is then constant on
    /// each cell and the per-cell integral of exp(-j 2 pi m t) is exact.
    inline std::vector<cplx> element_spectrum(double xi, double delay, double tau, std::size_t m_samples,
                                              int max_offset)
    {
        const double norm = 1.0 / (sqrt2 * (1.0 + sqrt2));
        const double dt = 1.0 / static_cast<double>(m_samples);
        std::vector<cplx> g(m_samples);
        for (std::size_t i = 0; i < m_samples; ++i)
        {
            const double t = (static_cast<double>(i) + 0.5) * dt;
            g[i] = norm * gate(t, xi) * cplx(stair(t - delay), stair(t - delay - tau));
        }
        std::vector<cplx> out;
        for (int m = -max_offset; m <= max_offset; ++m)
        {
            cplx acc{};
            for (std::size_t i = 0; i < m_samples; ++i)
            {
                const double phase = -2.0 * pi * m * (static_cast<double>(i) + 0.5) * dt;
                acc += g[i] * cplx(std::cos(phase), std::sin(phase));
            }
            const double x = pi * m * dt;
            const double cell = m == 0 ? 1.0 : std::sin(x) / x;
            out.push_back(acc * dt * cell);
        }
        return out;
    }

    /// |sum_n a_n exp(j 2 pi z_n cos theta)|^2 evaluated directly.
    inline double array_power(const std::vector<cplx> &a, const std::vector<double> &z, double theta_deg)
    {
        const double c = std::cos(theta_deg * pi / 180.0);
        cplx f{};
        for (std::size_t n = 0; n < a.size(); ++n)
        {
            const double phase = 2.0 * pi * z[n] * c;
            f += a[n] * cplx(std::cos(phase), std::sin(phase));
        }
        return std::norm(f);
    }

    /// Side-lobe level in dB of a uniform broadside array, found on a dense grid in u = cos(theta):
    /// highest local maximum outside the main lobe, relative to the peak.
    inline double uniform_sll_db(std::size_t n, double spacing, std::size_t points = 400001)
    {
        std::vector<double> p(points);
        std::vector<cplx> ones(n, 1.0);
        std::vector<double> z(n);
        for (std::size_t i = 0; i < n; ++i)
            z[i] = spacing * static_cast<double>(i);
        for (std::size_t i = 0; i < points; ++i)
        {
            const double theta = 180.0 * static_cast<double>(i) / static_cast<double>(points - 1);
            p[i] = array_power(ones, z, theta);
        }
        const double peak = static_cast<double>(n * n);
        // Main lobe: walk out from broadside to the first minimum on each side.
        const std::size_t mid = (points - 1) / 2;
        std::size_t lo = mid, hi = mid;
        while (lo > 0 && p[lo - 1] <= p[lo])
            --lo;
        while (hi + 1 < points && p[hi + 1] <= p[hi])
            ++hi;
        double side = 0.0;
        for (std::size_t i = 0; i < points; ++i)
            if (i < lo || i > hi)
                side = std::max(side, p[i]);
        return 10.0 * std::log10(side / peak);
    }

    /// Null-to-null width in degrees of a uniform broadside array: nulls at cos(theta) = +-1 / (N d).
    inline double uniform_first_null_width_deg(std::size_t n, double spacing)
    {
        const double u = 1.0 / (static_cast<double>(n) * spacing);
        return 2.0 * (90.0 - std::acos(u) * 180.0 / pi);
    }

    /// sum over q in {1, 7, 9, 15, ...}, q <= q_max, of 1/q^2 in extended precision.
    inline long double a0_sum(long long q_max)
    {
        long double s = 0.0L;
        for (long long q = q_max; q >= 1; --q)
        {
            const long long r = q % 8;
            if (r == 1 || r == 7)
                s += 1.0L / (static_cast<long double>(q) * static_cast<long double>(q));
        }
        return s;
    }
}

#endif
