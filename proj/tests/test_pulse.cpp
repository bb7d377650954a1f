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


#include "doctest.h"
#include "oracles.hpp"

#include "ssbtma/errors.hpp"
#include "ssbtma/pulse.hpp"

#include <random>

using namespace ssbtma;

namespace
{
    PulseSpec of(PulseKind kind)
    {
        PulseSpec s;
        s.kind = kind;
        return s;
    }
}

TEST_CASE("closed-form coefficients agree with quadrature for |q| <= 31")
{
    for (auto kind : {PulseKind::TwoStateSquare, PulseKind::TriStateSquare, PulseKind::StairStep})
    {
        const auto quad = quadrature_spectrum(of(kind), 31);
        for (const auto &line : quad)
        {
            CAPTURE(to_string(kind));
            CAPTURE(line.order);
            CHECK(std::abs(closed_form_coefficient(kind, line.order) - line.coefficient) < 1e-6);
        }
    }
}

TEST_CASE("stair-step lines vanish exactly outside the index set")
{
    for (int q = -63; q <= 63; ++q)
    {
        CAPTURE(q);
        const cplx w = closed_form_coefficient(PulseKind::StairStep, q);
        if (in_upsilon(q))
            CHECK(std::abs(w) > 0.0);
        else
            CHECK(w == cplx{});
    }
    CHECK(closed_form_coefficient(PulseKind::StairStep, 1) == cplx{0.0, -4.0 / oracle::pi});
}

TEST_CASE("index sets")
{
    const auto sets = HarmonicIndexSets::up_to(31);
    CHECK(sets.upsilon == std::vector<int>{1, 7, 9, 15, 17, 23, 25, 31});
    CHECK(sets.upsilon1 == std::vector<int>{1, 9, 17, 25});
    CHECK(sets.upsilon2 == std::vector<int>{7, 15, 23, 31});
    CHECK(in_upsilon(-7));
    CHECK_FALSE(in_upsilon(3));
    CHECK_FALSE(in_upsilon(0));
}

TEST_CASE("tri-state lines are sign-flipped two-state lines")
{
    for (int q = -31; q <= 31; q += 2)
    {
        CAPTURE(q);
        const cplx u = closed_form_coefficient(PulseKind::TwoStateSquare, q);
        const cplx v = closed_form_coefficient(PulseKind::TriStateSquare, q);
        CHECK(v == static_cast<double>(tri_state_sign(q)) * u);
        CHECK(closed_form_coefficient(PulseKind::StairStep, q) == u + v);
    }
}

TEST_CASE("waveform levels")
{
    const double hi = 1.0 + oracle::sqrt2;
    const std::pair<double, double> stair[] = {{0.0, 1.0},   {0.2, hi},   {0.4, 1.0},
                                               {0.55, -1.0}, {0.75, -hi}, {0.9, -1.0}};
    for (const auto &[t, level] : stair)
        CHECK(sample_waveform(of(PulseKind::StairStep), t) == doctest::Approx(level));
    CHECK(sample_waveform(of(PulseKind::TriStateSquare), 0.05) == 0.0);
    CHECK(sample_waveform(of(PulseKind::TriStateSquare), 0.2) == doctest::Approx(oracle::sqrt2));
    CHECK(sample_waveform(of(PulseKind::TwoStateSquare), 0.5) == -1.0);

    PulseSpec rect = of(PulseKind::Rect);
    rect.duty = 0.25;
    rect.delay = 0.5;
    CHECK(sample_waveform(rect, 0.6) == 1.0);
    CHECK(sample_waveform(rect, 0.8) == 0.0);

    CHECK_THROWS_AS(sample_waveform(of(PulseKind::StairStep), 1.0), ValidationError);
    CHECK_THROWS_AS(sample_waveform(of(PulseKind::StairStep), -0.1), ValidationError);
}

TEST_CASE("stair-step samples match the plateau oracle")
{
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> t(0.0, 1.0);
    for (int i = 0; i < 2000; ++i)
    {
        const double x = t(rng);
        CHECK(sample_waveform(of(PulseKind::StairStep), x) == doctest::Approx(oracle::stair(x)));
    }
}

TEST_CASE("rect coefficients against quadrature for random duty cycles")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> cells(1, 4096);
    for (int trial = 0; trial < 20; ++trial)
    {
        // Grid-aligned duty so the quadrature is exact.
        const double xi = cells(rng) / 4096.0;
        PulseSpec rect = of(PulseKind::Rect);
        rect.duty = xi;
        const auto quad = quadrature_spectrum(rect, 20, 4096);
        for (const auto &line : quad)
        {
            CAPTURE(xi);
            CAPTURE(line.order);
            CHECK(std::abs(rect_coefficient(xi, line.order) - line.coefficient) < 1e-12);
        }
    }
    CHECK(rect_coefficient(1.0, 0) == cplx{1.0, 0.0});
    CHECK(rect_coefficient(1.0, 3) == cplx{});
    CHECK(rect_coefficient(0.5, 2) == cplx{});
    CHECK_THROWS_AS(rect_coefficient(0.0, 1), ValidationError);
    CHECK_THROWS_AS(rect_coefficient(1.5, 1), ValidationError);
}

TEST_CASE("ramped stair-step coefficients against quadrature")
{
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> delta(0.001, 0.2);
    for (int trial = 0; trial < 12; ++trial)
    {
        PulseSpec spec = of(PulseKind::TrapezoidStairStep);
        spec.rise_fall = delta(rng);
        spec.alignment = static_cast<RampAlignment>(trial % 3);
        const auto quad = quadrature_spectrum(spec, 31, std::size_t{1} << 16);
        for (const auto &line : quad)
        {
            CAPTURE(spec.rise_fall);
            CAPTURE(to_string(spec.alignment));
            CAPTURE(line.order);
            CHECK(std::abs(analytic_coefficient(spec, line.order) - line.coefficient) < 1e-6);
        }
    }
}

TEST_CASE("ramp length tending to zero recovers the ideal pulse")
{
    for (int q = -31; q <= 31; ++q)
    {
        const cplx ideal = closed_form_coefficient(PulseKind::StairStep, q);
        CHECK(std::abs(trapezoid_coefficient(q, 1e-9) - ideal) < 1e-12);
        CHECK(trapezoid_coefficient(q, 0.0) == ideal);
    }
}

TEST_CASE("a delay multiplies each line by a phase")
{
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> d(0.0, 1.0);
    for (int trial = 0; trial < 10; ++trial)
    {
        PulseSpec spec = of(PulseKind::StairStep);
        spec.delay = d(rng);
        for (int q = -25; q <= 25; ++q)
        {
            const cplx expected =
                closed_form_coefficient(PulseKind::StairStep, q) * std::polar(1.0, -2.0 * oracle::pi * q * spec.delay);
            CHECK(std::abs(analytic_coefficient(spec, q) - expected) < 1e-12);
        }
    }
}

TEST_CASE("exact trigonometry at special points")
{
    for (int n = -10; n <= 10; ++n)
    {
        CHECK(sin_pi(n) == 0.0);
        CHECK(cos_pi(n + 0.5) == 0.0);
        CHECK(std::abs(sin_pi(n + 0.5)) == 1.0);
    }
    CHECK(sinc_pi(0.0) == 1.0);
    CHECK(sinc_pi(3.0) == 0.0);
    CHECK(unit_phase(0.25) == cplx{0.0, -1.0});
    CHECK(unit_phase(0.5) == cplx{-1.0, 0.0});
    CHECK(sin_pi(0.3) == doctest::Approx(std::sin(0.3 * oracle::pi)));
}

TEST_CASE("pulse parameter validation")
{
    PulseSpec spec;
    spec.delay = 1.0;
    CHECK_THROWS_AS(spec.validate(), ValidationError);
    spec = of(PulseKind::Rect);
    spec.duty = 0.0;
    CHECK_THROWS_AS(spec.validate(), ValidationError);
    spec = of(PulseKind::TrapezoidStairStep);
    spec.rise_fall = 0.25;
    CHECK_THROWS_AS(spec.validate(), ValidationError);
    CHECK_THROWS_AS(closed_form_coefficient(PulseKind::Rect, 1), DomainError);
    CHECK_THROWS_AS(quadrature_coefficient(of(PulseKind::StairStep), 100, 1024), ValidationError);
    CHECK(pulse_kind_from_string("stair_step") == PulseKind::StairStep);
    CHECK(ramp_alignment_from_string("leading") == RampAlignment::Leading);
    CHECK_THROWS_AS(ramp_alignment_from_string("sideways"), ValidationError);
}
