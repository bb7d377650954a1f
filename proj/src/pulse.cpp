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

#include "ssbtma/pulse.hpp"
#include "ssbtma/errors.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

namespace ssbtma
{
    namespace
    {
        constexpr double pi = std::numbers::pi;
        constexpr double sqrt2 = std::numbers::sqrt2;

        // Stair-step w(t) over one period: six constant segments.
        constexpr std::array<double, 7> kStairBreaks = {0.0, 0.125, 0.375, 0.5, 0.625, 0.875, 1.0};
        constexpr std::array<double, 6> kStairLevels = {1.0, 1.0 + sqrt2, 1.0, -1.0, -1.0 - sqrt2, -1.0};

        double wrap_unit(double x)
        {
            double r = x - std::floor(x);
            return r >= 1.0 ? 0.0 : r; // floor(-tiny) can produce r == 1
        }

        double stair_level(double s)
        {
            for (std::size_t i = 0; i + 1 < kStairBreaks.size(); ++i)
                if (s < kStairBreaks[i + 1])
                    return kStairLevels[i];
            return kStairLevels.back();
        }

        // Antiderivative of w over [0, s] for s in [0, 1). w has zero mean so this is periodic.
        double stair_integral_unit(double s)
        {
            double acc = 0.0;
            for (std::size_t i = 0; i + 1 < kStairBreaks.size(); ++i)
            {
                double lo = kStairBreaks[i], hi = kStairBreaks[i + 1];
                if (s <= lo)
                    break;
                acc += kStairLevels[i] * (std::min(s, hi) - lo);
            }
            return acc;
        }

        double stair_integral(double s)
        {
            return stair_integral_unit(wrap_unit(s));
        }

        // Moving average of w over a window of length width; exactly the linearly ramped stair-step.
        double ramped_stair(double s, double width, RampAlignment alignment)
        {
            if (width <= 0.0)
                return stair_level(wrap_unit(s));
            double lo = s - 0.5 * width;
            if (alignment == RampAlignment::Leading)
                lo = s - width;
            else if (alignment == RampAlignment::Trailing)
                lo = s;
            double hi = lo + width;
            // Integral across the window, accounting for period crossings of the wrapped antiderivative.
            double span = stair_integral(hi) - stair_integral(lo);
            return span / width;
        }

        double ideal_level(PulseKind kind, double s)
        {
            switch (kind)
            {
            case PulseKind::TwoStateSquare:
                return s < 0.5 ? 1.0 : -1.0;
            case PulseKind::TriStateSquare:
                if (s >= 0.125 && s < 0.375)
                    return sqrt2;
                if (s >= 0.625 && s < 0.875)
                    return -sqrt2;
                return 0.0;
            case PulseKind::StairStep:
                return stair_level(s);
            default:
                break;
            }
            throw DomainError("ideal_level: not an ideal odd waveform");
        }
    }

    std::string_view to_string(PulseKind kind)
    {
        switch (kind)
        {
        case PulseKind::TwoStateSquare:
            return "two_state_square";
        case PulseKind::TriStateSquare:
            return "tri_state_square";
        case PulseKind::StairStep:
            return "stair_step";
        case PulseKind::Rect:
            return "rect";
        case PulseKind::TrapezoidStairStep:
            return "trapezoid_stair_step";
        }
        return "unknown";
    }

    std::string_view to_string(RampAlignment alignment)
    {
        switch (alignment)
        {
        case RampAlignment::Centered:
            return "centered";
        case RampAlignment::Leading:
            return "leading";
        case RampAlignment::Trailing:
            return "trailing";
        }
        return "unknown";
    }

    PulseKind pulse_kind_from_string(std::string_view name)
    {
        for (auto k : {PulseKind::TwoStateSquare, PulseKind::TriStateSquare, PulseKind::StairStep, PulseKind::Rect,
                       PulseKind::TrapezoidStairStep})
            if (name == to_string(k))
                return k;
        throw ValidationError("unknown pulse kind '" + std::string(name) + "'");
    }

    RampAlignment ramp_alignment_from_string(std::string_view name)
    {
        for (auto a : {RampAlignment::Centered, RampAlignment::Leading, RampAlignment::Trailing})
            if (name == to_string(a))
                return a;
        throw ValidationError("unknown ramp alignment '" + std::string(name) + "' (centered|leading|trailing)");
    }

    void PulseSpec::validate() const
    {
        if (!(period > 0.0) || !std::isfinite(period))
            throw ValidationError("pulse period must be positive, got " + std::to_string(period));
        if (!(delay >= 0.0 && delay < 1.0))
            throw ValidationError("pulse delay must lie in [0, 1), got " + std::to_string(delay));
        if (!(duty > 0.0 && duty <= 1.0))
            throw ValidationError("duty cycle must lie in (0, 1], got " + std::to_string(duty));
        if (!(rise_fall >= 0.0 && rise_fall < 0.25))
            throw ValidationError("rise/fall time must lie in [0, 0.25), got " + std::to_string(rise_fall));
    }

    bool in_upsilon(int q)
    {
        int r = std::abs(q) % 8;
        return q != 0 && (r == 1 || r == 7);
    }

    bool in_upsilon1(int q) { return q > 0 && q % 8 == 1; }

    bool in_upsilon2(int q) { return q > 0 && q % 8 == 7; }

    HarmonicIndexSets HarmonicIndexSets::up_to(int q_max)
    {
        HarmonicIndexSets sets;
        sets.truncation = q_max;
        for (int a = 1;; ++a)
        {
            int q = 4 * a + ((a % 2 == 0) ? 1 : -1) - 2;
            if (q > q_max)
                break;
            sets.upsilon.push_back(q);
            (in_upsilon1(q) ? sets.upsilon1 : sets.upsilon2).push_back(q);
        }
        return sets;
    }

    double sin_pi(double x)
    {
        double r = std::remainder(x, 2.0); // r in [-1, 1]
        if (r == 0.0 || r == 1.0 || r == -1.0)
            return 0.0;
        if (r == 0.5)
            return 1.0;
        if (r == -0.5)
            return -1.0;
        return std::sin(pi * r);
    }

    double cos_pi(double x)
    {
        double r = std::remainder(x, 2.0);
        if (r == 0.5 || r == -0.5)
            return 0.0;
        if (r == 0.0)
            return 1.0;
        if (r == 1.0 || r == -1.0)
            return -1.0;
        return std::cos(pi * r);
    }

    double sinc_pi(double x)
    {
        if (x == 0.0)
            return 1.0;
        return sin_pi(x) / (pi * x);
    }

    cplx unit_phase(double turns)
    {
        return {cos_pi(2.0 * turns), -sin_pi(2.0 * turns)};
    }

    int tri_state_sign(int q)
    {
        long long qq = q;
        long long e = (qq + 1) * (qq - 1) / 8;
        return (e % 2 == 0) ? 1 : -1;
    }

    double sample_waveform(const PulseSpec &spec, double t)
    {
        spec.validate();
        if (!(t >= 0.0 && t < 1.0))
            throw ValidationError("sample time must lie in [0, 1), got " + std::to_string(t));
        double s = wrap_unit(t - spec.delay);
        switch (spec.kind)
        {
        case PulseKind::TwoStateSquare:
        case PulseKind::TriStateSquare:
        case PulseKind::StairStep:
            return ideal_level(spec.kind, s);
        case PulseKind::Rect:
            return s < spec.duty ? 1.0 : 0.0;
        case PulseKind::TrapezoidStairStep:
            return ramped_stair(s, spec.rise_fall, spec.alignment);
        }
        throw ValidationError("unknown pulse kind");
    }

    cplx closed_form_coefficient(PulseKind kind, int q)
    {
        if (kind != PulseKind::TwoStateSquare && kind != PulseKind::TriStateSquare && kind != PulseKind::StairStep)
            throw DomainError("closed_form_coefficient: no closed form for kind '" + std::string(to_string(kind)) + "'");
        if (q % 2 == 0)
            return {0.0, 0.0};
        const double base = -2.0 / (pi * q); // imaginary part of U_q
        switch (kind)
        {
        case PulseKind::TwoStateSquare:
            return {0.0, base};
        case PulseKind::TriStateSquare:
            return {0.0, tri_state_sign(q) * base};
        default:
            return in_upsilon(q) ? cplx{0.0, 2.0 * base} : cplx{0.0, 0.0};
        }
    }

    cplx rect_coefficient(double xi, int k)
    {
        if (!(xi > 0.0 && xi <= 1.0))
            throw ValidationError("duty cycle must lie in (0, 1], got " + std::to_string(xi));
        if (k == 0)
            return {xi, 0.0};
        double magnitude = xi * sinc_pi(k * xi);
        if (magnitude == 0.0)
            return {0.0, 0.0};
        return magnitude * unit_phase(0.5 * k * xi);
    }

    cplx trapezoid_coefficient(int q, double rise_fall, RampAlignment alignment)
    {
        if (!(rise_fall >= 0.0 && rise_fall < 0.25))
            throw ValidationError("rise/fall time must lie in [0, 0.25), got " + std::to_string(rise_fall));
        cplx ideal = closed_form_coefficient(PulseKind::StairStep, q);
        if (rise_fall == 0.0 || ideal == cplx{})
            return ideal;
        cplx c = ideal * sinc_pi(q * rise_fall);
        if (alignment == RampAlignment::Leading)
            c *= unit_phase(0.5 * q * rise_fall);
        else if (alignment == RampAlignment::Trailing)
            c *= unit_phase(-0.5 * q * rise_fall);
        return c;
    }

    cplx analytic_coefficient(const PulseSpec &spec, int q)
    {
        spec.validate();
        cplx c;
        switch (spec.kind)
        {
        case PulseKind::Rect:
            c = rect_coefficient(spec.duty, q);
            break;
        case PulseKind::TrapezoidStairStep:
            c = trapezoid_coefficient(q, spec.rise_fall, spec.alignment);
            break;
        default:
            c = closed_form_coefficient(spec.kind, q);
            break;
        }
        if (spec.delay != 0.0 && c != cplx{})
            c *= unit_phase(q * spec.delay);
        return c;
    }

    std::vector<FourierLine> quadrature_spectrum(const PulseSpec &spec, int max_order, std::size_t samples)
    {
        spec.validate();
        if (max_order < 0)
            throw ValidationError("max_order must be non-negative");
        if (samples == 0 || samples < 64 * static_cast<std::size_t>(max_order))
            throw ValidationError("quadrature needs at least 64 samples per harmonic order, got " +
                                  std::to_string(samples) + " for order " + std::to_string(max_order));

        // Midpoint samples. Ideal transitions sit on multiples of 1/8, which are cell boundaries whenever
        // samples is a multiple of 8, so each cell is constant and the per-cell integral below is exact.
        const double m = static_cast<double>(samples);
        std::vector<double> level(samples);
        for (std::size_t i = 0; i < samples; ++i)
            level[i] = sample_waveform(spec, (static_cast<double>(i) + 0.5) / m);

        std::vector<FourierLine> lines;
        lines.reserve(2 * static_cast<std::size_t>(max_order) + 1);
        for (int order = -max_order; order <= max_order; ++order)
        {
            cplx acc{};
            for (std::size_t i = 0; i < samples; ++i)
            {
                if (level[i] == 0.0)
                    continue;
                double turns = static_cast<double>(order) * (static_cast<double>(i) + 0.5) / m;
                acc += level[i] * unit_phase(turns - std::floor(turns));
            }
            // Exact integral of exp(-j 2 pi order t) over a cell of width 1/m, relative to its midpoint value.
            lines.push_back({order, acc / m * sinc_pi(order / m)});
        }
        return lines;
    }

    cplx quadrature_coefficient(const PulseSpec &spec, int order, std::size_t samples)
    {
        spec.validate();
        if (samples == 0 || samples < 64 * static_cast<std::size_t>(std::abs(order)))
            throw ValidationError("quadrature needs at least 64 samples per harmonic order, got " +
                                  std::to_string(samples) + " for order " + std::to_string(order));
        const double m = static_cast<double>(samples);
        cplx acc{};
        for (std::size_t i = 0; i < samples; ++i)
        {
            double level = sample_waveform(spec, (static_cast<double>(i) + 0.5) / m);
            if (level == 0.0)
                continue;
            double turns = static_cast<double>(order) * (static_cast<double>(i) + 0.5) / m;
            acc += level * unit_phase(turns - std::floor(turns));
        }
        return acc / m * sinc_pi(order / m);
    }
}
