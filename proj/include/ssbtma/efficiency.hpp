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

#ifndef SSBTMA_EFFICIENCY_HPP
#define SSBTMA_EFFICIENCY_HPP

#include "ssbtma/harmonic.hpp"

#include <span>

namespace ssbtma
{
    /// Trigamma function psi_1(z) = sum_{k>=0} 1 / (z + k)^2 for z > 0.
    ///
    /// Direct summation of the first terms plus the Euler-Maclaurin tail
    /// 1/(z + K) + 1/(2 (z + K)^2); absolute error below 1e-9.
    double polygamma1(double z);

    enum class A0Method
    {
        Polygamma, // (psi_1(1/8) + psi_1(7/8)) / 64
        DirectSum  // sum over q in upsilon, q <= q_max, of 1/q^2
    };

    /// Spectral-spread constant A0 = sum_{q in upsilon} 1/q^2 ~ 1.053.
    double a0_constant(A0Method method = A0Method::Polygamma, long long q_max = 1'000'000);

    struct SeriesConstant
    {
        double a0 = 0.0;
        double psi1_eighth = 0.0;
        double psi1_seven_eighths = 0.0;

        static SeriesConstant compute();
    };

    /// Mean powers and efficiencies of the time modulation. eta = eta_tma * eta_bfn.
    struct EfficiencyReport
    {
        double p_useful = 0.0;   // power at the exploited harmonic (k = 0, q = 1)
        double p_radiated = 0.0; // total time-modulated mean power
        double p_static = 0.0;   // equivalent uniform static array, 4 pi N
        double eta_tma = 0.0;
        double eta_bfn = 0.0;
        double eta = 0.0;

        double eta_tma_db() const;
        double eta_bfn_db() const;
        double eta_db() const;
    };

    /// Closed-form report for ideal stair-step pulses. Steering delays do not enter.
    EfficiencyReport efficiency_report(std::span<const double> xi);

    struct NumericTruncation
    {
        long long k_max = 100'000;
        long long q_max = 100'001;
    };

    /// Report from explicit spectral lines: 4 pi sum_n |weight|^2 over every (k, q) line, with the pulse
    /// lines taken from the (possibly ramped) stair-step and the branch delay tau.
    EfficiencyReport efficiency_report_numeric(std::span<const double> xi, const PulseShape &shape, double tau = 0.25,
                                               const NumericTruncation &truncation = {});

    /// sum_{|k| <= k_max} sinc^2(k pi xi); tends to 1 / xi.
    double sinc_square_sum(double xi, long long k_max);
}

#endif
