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

#ifndef SSBTMA_PULSE_HPP
#define SSBTMA_PULSE_HPP

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

namespace ssbtma
{
    using cplx = std::complex<double>;

    inline constexpr int kDefaultQMax = 31;
    inline constexpr std::size_t kDefaultQuadratureSamples = std::size_t{1} << 14;

    /// Periodic switching waveforms. Time is always expressed as a fraction of the period T0.
    ///
    /// TwoStateSquare      u(t): +1 on [0, 1/2), -1 on [1/2, 1)
    /// TriStateSquare      v(t): +sqrt2 on [1/8, 3/8), -sqrt2 on [5/8, 7/8), 0 elsewhere
    /// StairStep           w(t) = u(t) + v(t), levels {1, 1+sqrt2, 1, -1, -1-sqrt2, -1}
    /// Rect                c(t): 1 on [delay, delay + duty), 0 elsewhere (SPST amplitude switch)
    /// TrapezoidStairStep  w(t) with every transition replaced by a linear ramp of length rise_fall
    enum class PulseKind
    {
        TwoStateSquare,
        TriStateSquare,
        StairStep,
        Rect,
        TrapezoidStairStep
    };

    /// Where the ramp of a nonideal transition sits relative to the ideal switching instant.
    enum class RampAlignment
    {
        Centered, // ramp spans [x - rise_fall/2, x + rise_fall/2]
        Leading,  // ramp starts at x
        Trailing  // ramp ends at x
    };

    std::string_view to_string(PulseKind kind);
    std::string_view to_string(RampAlignment alignment);
    PulseKind pulse_kind_from_string(std::string_view name);
    RampAlignment ramp_alignment_from_string(std::string_view name);

    struct PulseSpec
    {
        PulseKind kind = PulseKind::StairStep;
        double period = 1.0;    // T0, informational; all other times are fractions of it
        double delay = 0.0;     // fraction of period in [0, 1)
        double duty = 1.0;      // Rect only, (0, 1]
        double rise_fall = 0.0; // TrapezoidStairStep only, [0, 0.25)
        RampAlignment alignment = RampAlignment::Centered;

        /// Throws ValidationError when a field is out of range.
        void validate() const;

        bool operator==(const PulseSpec &) const = default;
    };

    struct FourierLine
    {
        int order = 0;
        cplx coefficient{};
    };

    // Harmonic index sets of the stair-step pulse.
    //   upsilon  = {4a + (-1)^a - 2, a >= 1} = {1, 7, 9, 15, 17, ...}
    //   upsilon1 = {8a - 7} = {1, 9, 17, ...}
    //   upsilon2 = {8a - 1} = {7, 15, 23, ...}
    bool in_upsilon(int q); // tests |q|
    bool in_upsilon1(int q);
    bool in_upsilon2(int q);

    struct HarmonicIndexSets
    {
        std::vector<int> upsilon;
        std::vector<int> upsilon1;
        std::vector<int> upsilon2;
        int truncation = kDefaultQMax;

        static HarmonicIndexSets up_to(int q_max);
    };

    // Exact-at-special-points trigonometry. sin_pi(x) = sin(pi x) returns exactly 0 at integers and
    // exactly +-1 at half integers, so that cancelled lines and sinc zeros are true zeros.
    double sin_pi(double x);
    double cos_pi(double x);

    /// sin(pi x) / (pi x), normalized sinc with sinc_pi(0) = 1.
    double sinc_pi(double x);

    /// exp(-j 2 pi turns), exact when 4 * turns is an integer.
    cplx unit_phase(double turns);

    /// (-1)^((q+1)(q-1)/8) for odd q: the sign pattern of the tri-state coefficients.
    int tri_state_sign(int q);

    /// Instantaneous level of the waveform at t in [0, 1).
    double sample_waveform(const PulseSpec &spec, double t);

    /// Closed-form Fourier coefficient of the undelayed ideal waveforms (TwoStateSquare, TriStateSquare,
    /// StairStep). Other kinds throw DomainError.
    cplx closed_form_coefficient(PulseKind kind, int q);

    /// C_k = xi * sinc(k pi xi) * exp(-j k pi xi) for a rectangular pulse switched on at t = 0.
    cplx rect_coefficient(double xi, int k);

    /// Fourier coefficient of the ramped stair-step. A linear ramp of length rise_fall centered on
    /// every transition is the ideal waveform convolved with a unit-area box, so
    /// coefficient = W_q * sinc(q rise_fall) * alignment_shift.
    cplx trapezoid_coefficient(int q, double rise_fall, RampAlignment alignment = RampAlignment::Centered);

    /// Analytic coefficient for any spec, including its delay.
    cplx analytic_coefficient(const PulseSpec &spec, int q);

    /// Numerical oracle: (1/T0) * integral of waveform * exp(-j order w0 t) over one period, from
    /// uniform midpoint samples with exact per-cell integration of the exponential.
    /// Requires samples >= 64 * |order|.
    cplx quadrature_coefficient(const PulseSpec &spec, int order, std::size_t samples = kDefaultQuadratureSamples);

    /// Same quadrature for every order in [-max_order, max_order], sampling the waveform once.
    std::vector<FourierLine> quadrature_spectrum(const PulseSpec &spec, int max_order,
                                                 std::size_t samples = kDefaultQuadratureSamples);
}

#endif
