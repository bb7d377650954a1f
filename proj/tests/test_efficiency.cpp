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

#include "ssbtma/efficiency.hpp"
#include "ssbtma/errors.hpp"

#include <boost/math/special_functions/trigamma.hpp>

#include <random>

using namespace ssbtma;

TEST_CASE("trigamma against Boost.Math")
{
    for (double z : {0.125, 0.875, 0.5, 1.0, 2.5, 10.0, 1e-3, 250.0})
    {
        CAPTURE(z);
        CHECK(polygamma1(z) == doctest::Approx(boost::math::trigamma(z)).epsilon(1e-12));
    }
    CHECK(polygamma1(1.0) == doctest::Approx(oracle::pi * oracle::pi / 6.0).epsilon(1e-12));
    CHECK_THROWS_AS(polygamma1(0.0), DomainError);
    CHECK_THROWS_AS(polygamma1(-0.5), DomainError);
}

TEST_CASE("series constant by both routes")
{
    const auto s = SeriesConstant::compute();
    CHECK(s.psi1_eighth == doctest::Approx(65.3881).epsilon(1e-5));
    CHECK(s.psi1_seven_eighths == doctest::Approx(2.0057).epsilon(1e-4));
    CHECK(s.a0 == doctest::Approx(1.0530).epsilon(5e-4));
    const double direct = a0_constant(A0Method::DirectSum, 1'000'000);
    CHECK(std::abs(direct - s.a0) < 1e-4);
    CHECK(direct == doctest::Approx(static_cast<double>(oracle::a0_sum(1'000'000))).epsilon(1e-13));
    CHECK(a0_constant(A0Method::DirectSum, 1) == 1.0);
    CHECK(a0_constant(A0Method::DirectSum, 8) == doctest::Approx(1.0 + 1.0 / 49.0));
    CHECK_THROWS_AS(a0_constant(A0Method::DirectSum, 0), ValidationError);
}

TEST_CASE("line powers of the stair-step add up to its mean square")
{
    // Mean of w^2 over a period from the plateau levels.
    const double hi = 1.0 + oracle::sqrt2;
    const double mean_square = 2.0 * (0.125 + 0.25 * hi * hi + 0.125);
    const double line_sum = 2.0 * 16.0 / (oracle::pi * oracle::pi) * a0_constant();
    CHECK(line_sum == doctest::Approx(mean_square).epsilon(1e-9));
}

TEST_CASE("closed-form efficiencies of the phased array")
{
    const auto r = efficiency_report(std::vector<double>(30, 1.0));
    CHECK(r.eta_tma == doctest::Approx(1.0 / a0_constant()).epsilon(1e-12));
    CHECK(r.eta_bfn == doctest::Approx(32.0 * a0_constant() / (oracle::pi * oracle::pi * (3.0 + 2.0 * oracle::sqrt2)))
                           .epsilon(1e-12));
    CHECK(r.eta == doctest::Approx(r.eta_tma * r.eta_bfn).epsilon(1e-15));
    CHECK(r.p_static == doctest::Approx(4.0 * oracle::pi * 30.0));
    CHECK(r.eta_db() == doctest::Approx(10.0 * std::log10(r.eta)));
}

TEST_CASE("numeric line sums converge to the closed form")
{
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> d(0.05, 1.0);
    for (int trial = 0; trial < 5; ++trial)
    {
        std::vector<double> xi(12);
        for (auto &x : xi)
            x = d(rng);
        const auto closed = efficiency_report(xi);
        const auto numeric = efficiency_report_numeric(xi, {});
        CHECK(numeric.eta_tma == doctest::Approx(closed.eta_tma).epsilon(1e-4));
        CHECK(numeric.eta_bfn == doctest::Approx(closed.eta_bfn).epsilon(1e-4));
        CHECK(numeric.p_useful == doctest::Approx(closed.p_useful).epsilon(1e-12));
    }
}

TEST_CASE("efficiency bounds for random duty cycles")
{
    std::mt19937 rng(37);
    std::uniform_real_distribution<double> d(0.01, 1.0);
    for (int trial = 0; trial < 200; ++trial)
    {
        std::vector<double> xi(1 + trial % 40);
        for (auto &x : xi)
            x = d(rng);
        const auto r = efficiency_report(xi);
        CHECK(r.eta_tma > 0.0);
        CHECK(r.eta_tma <= 1.0 / a0_constant() + 1e-12);
        CHECK(r.eta_bfn > 0.0);
        CHECK(r.eta <= r.eta_tma);
    }
}

TEST_CASE("ramped transitions move power back into the useful line")
{
    const std::vector<double> xi(30, 1.0);
    const NumericTruncation trunc{1000, 20001};
    double previous = efficiency_report_numeric(xi, {}, 0.25, trunc).eta_tma;
    for (double delta : {0.02, 0.06, 0.1})
    {
        const double eta = efficiency_report_numeric(xi, {delta, RampAlignment::Centered}, 0.25, trunc).eta_tma;
        CHECK(eta > previous);
        previous = eta;
    }
    const auto centered = efficiency_report_numeric(xi, {0.06, RampAlignment::Centered}, 0.25, trunc);
    const auto leading = efficiency_report_numeric(xi, {0.06, RampAlignment::Leading}, 0.25, trunc);
    CHECK(leading.eta == doctest::Approx(centered.eta).epsilon(1e-12));
}

TEST_CASE("sinc-square sums")
{
    CHECK(sinc_square_sum(1.0, 100) == doctest::Approx(1.0));
    CHECK(sinc_square_sum(0.25, 200000) == doctest::Approx(4.0).epsilon(1e-5));
    CHECK_THROWS_AS(sinc_square_sum(0.0, 10), ValidationError);
}

TEST_CASE("efficiency input validation")
{
    CHECK_THROWS_AS(efficiency_report(std::vector<double>{}), ValidationError);
    CHECK_THROWS_AS(efficiency_report(std::vector<double>{0.5, 0.0}), ValidationError);
    CHECK_THROWS_AS(efficiency_report(std::vector<double>{1.2}), ValidationError);
    CHECK_THROWS_AS(efficiency_report_numeric(std::vector<double>{0.5}, {}, 1.0), ValidationError);
}
