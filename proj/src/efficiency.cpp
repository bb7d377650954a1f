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

#include "ssbtma/efficiency.hpp"
#include "ssbtma/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ssbtma
{
    namespace
    {
        constexpr double pi = std::numbers::pi;
        constexpr double sqrt2 = std::numbers::sqrt2;

        // 128 / (pi (1 + sqrt2)^2): mean power of one (k = 0, q = 1) line per unit xi^2.
        constexpr double kLinePower = 128.0 / (pi * (1.0 + sqrt2) * (1.0 + sqrt2));

        constexpr long long kPolygammaTerms = 2000;

        void check_xi(std::span<const double> xi)
        {
            if (xi.empty())
                throw ValidationError("efficiency needs at least one element");
            for (std::size_t n = 0; n < xi.size(); ++n)
                if (!(xi[n] > 0.0 && xi[n] <= 1.0))
                    throw ValidationError("duty cycle xi[" + std::to_string(n) + "] = " + std::to_string(xi[n]) +
                                          " outside (0, 1]");
        }

        EfficiencyReport finish(double p_useful, double p_radiated, std::size_t n)
        {
            EfficiencyReport r;
            r.p_useful = p_useful;
            r.p_radiated = p_radiated;
            r.p_static = 4.0 * pi * static_cast<double>(n);
            r.eta_tma = p_useful / p_radiated;
            r.eta_bfn = p_radiated / r.p_static;
            r.eta = r.eta_tma * r.eta_bfn;
            return r;
        }
    }

    double polygamma1(double z)
    {
        if (!(z > 0.0) || !std::isfinite(z))
            throw DomainError("polygamma1 requires z > 0, got " + std::to_string(z));
        double sum = 0.0;
        // Smallest terms first.
        for (long long k = kPolygammaTerms - 1; k >= 0; --k)
        {
            const double x = z + static_cast<double>(k);
            sum += 1.0 / (x * x);
        }
        const double x = z + static_cast<double>(kPolygammaTerms);
        const double r = 1.0 / x, r2 = r * r;
        return sum + r + r2 / 2.0 + r * r2 * (1.0 / 6.0 - r2 / 30.0 + r2 * r2 / 42.0);
    }

    double a0_constant(A0Method method, long long q_max)
    {
        if (method == A0Method::Polygamma)
            return (polygamma1(0.125) + polygamma1(0.875)) / 64.0;
        if (q_max < 1)
            throw ValidationError("direct A0 summation needs q_max >= 1");
        double sum = 0.0;
        // Descending q to add the small terms first.
        for (long long base = (q_max / 8) * 8 + 8; base >= 8; base -= 8)
        {
            for (long long q : {base - 1, base - 7})
                if (q <= q_max)
                    sum += 1.0 / (static_cast<double>(q) * static_cast<double>(q));
        }
        return sum;
    }

    SeriesConstant SeriesConstant::compute()
    {
        SeriesConstant s;
        s.psi1_eighth = polygamma1(0.125);
        s.psi1_seven_eighths = polygamma1(0.875);
        s.a0 = (s.psi1_eighth + s.psi1_seven_eighths) / 64.0;
        return s;
    }

    double EfficiencyReport::eta_tma_db() const { return 10.0 * std::log10(eta_tma); }
    double EfficiencyReport::eta_bfn_db() const { return 10.0 * std::log10(eta_bfn); }
    double EfficiencyReport::eta_db() const { return 10.0 * std::log10(eta); }

    EfficiencyReport efficiency_report(std::span<const double> xi)
    {
        check_xi(xi);
        const double a0 = a0_constant(A0Method::Polygamma);
        double sum = 0.0, sum_sq = 0.0;
        for (double x : xi)
        {
            sum += x;
            sum_sq += x * x;
        }
        return finish(kLinePower * sum_sq, kLinePower * a0 * sum, xi.size());
    }

    double sinc_square_sum(double xi, long long k_max)
    {
        if (!(xi > 0.0 && xi <= 1.0))
            throw ValidationError("duty cycle must lie in (0, 1], got " + std::to_string(xi));
        if (k_max < 0)
            throw ValidationError("k_max must be non-negative");
        double tail = 0.0;
        for (long long k = k_max; k >= 1; --k)
        {
            const double s = sinc_pi(static_cast<double>(k) * xi);
            tail += s * s;
        }
        return 1.0 + 2.0 * tail;
    }

    EfficiencyReport efficiency_report_numeric(std::span<const double> xi, const PulseShape &shape, double tau,
                                               const NumericTruncation &truncation)
    {
        check_xi(xi);
        if (truncation.k_max < 0 || truncation.q_max < 1)
            throw ValidationError("numeric truncation needs k_max >= 0 and q_max >= 1");
        if (!(tau >= 0.0 && tau < 1.0))
            throw ValidationError("branch delay tau must lie in [0, 1)");

        // |weight|^2 of a (k, p) line factorizes as |C_nk|^2 |L_p|^2, since the steering delay and the
        // phase of C_nk are unit-modulus. Sum each factor separately.
        const double norm = excitation_normalization();
        double pulse_power = 0.0;
        double useful_line = 0.0;
        for (long long p = truncation.q_max; p >= -truncation.q_max; --p)
        {
            if (p % 2 == 0)
                continue;
            const int order = static_cast<int>(p);
            const cplx w = shape.coefficient(order);
            if (w == cplx{})
                continue;
            const cplx line = norm * w * (1.0 + cplx{0.0, 1.0} * unit_phase(order * tau));
            const double power = std::norm(line);
            pulse_power += power;
            if (order == 1)
                useful_line = power;
        }

        double rect_power = 0.0, useful_rect = 0.0;
        for (double x : xi)
        {
            rect_power += x * x * sinc_square_sum(x, truncation.k_max);
            useful_rect += x * x;
        }
        const double four_pi = 4.0 * pi;
        return finish(four_pi * useful_rect * useful_line, four_pi * rect_power * pulse_power, xi.size());
    }
}
