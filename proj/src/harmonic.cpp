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

#include "ssbtma/harmonic.hpp"
#include "ssbtma/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace ssbtma
{
    namespace
    {
        constexpr cplx j{0.0, 1.0};

        double wrap_unit(double x)
        {
            double r = x - std::floor(x);
            return r >= 1.0 ? 0.0 : r;
        }

        std::vector<double> plan_delays(const ArrayConfig &config, const SteeringPlan &plan)
        {
            if (plan.delays.empty())
                return std::vector<double>(config.n_elements, 0.0);
            if (plan.delays.size() != config.n_elements)
                throw ValidationError("steering plan has " + std::to_string(plan.delays.size()) + " delays for " +
                                      std::to_string(config.n_elements) + " elements");
            return plan.delays;
        }

        // Value of w(t) + j w(t - tau) at signed order p, before steering and normalization.
        cplx combined_line(int p, double tau, const PulseShape &shape)
        {
            cplx w = shape.coefficient(p);
            if (w == cplx{})
                return {};
            cplx branch_sum = 1.0 + j * unit_phase(p * tau);
            if (branch_sum == cplx{})
                return {};
            return w * branch_sum;
        }
    }

    ArrayConfig ArrayConfig::uniform(std::size_t n, double spacing)
    {
        ArrayConfig c;
        c.n_elements = n;
        c.spacing = spacing;
        return c;
    }

    double ArrayConfig::position(std::size_t n) const
    {
        return positions.empty() ? static_cast<double>(n) * spacing : positions.at(n);
    }

    std::vector<double> ArrayConfig::element_positions() const
    {
        std::vector<double> z(n_elements);
        for (std::size_t n = 0; n < n_elements; ++n)
            z[n] = position(n);
        return z;
    }

    void ArrayConfig::validate() const
    {
        if (n_elements < 2)
            throw ValidationError("array needs at least 2 elements, got " + std::to_string(n_elements));
        if (!(spacing > 0.0) || !std::isfinite(spacing))
            throw ValidationError("element spacing must be positive, got " + std::to_string(spacing));
        if (!(tau >= 0.0 && tau < 1.0))
            throw ValidationError("branch delay tau must lie in [0, 1), got " + std::to_string(tau));
        if (!positions.empty())
        {
            if (positions.size() != n_elements)
                throw ValidationError("got " + std::to_string(positions.size()) + " element positions for " +
                                      std::to_string(n_elements) + " elements");
            for (std::size_t n = 1; n < positions.size(); ++n)
                if (!(positions[n] > positions[n - 1]))
                    throw ValidationError("element positions must be strictly increasing (index " +
                                          std::to_string(n) + ")");
        }
    }

    void validate_duty_cycles(const ArrayConfig &config, std::span<const double> xi)
    {
        if (xi.size() != config.n_elements)
            throw ValidationError("got " + std::to_string(xi.size()) + " duty cycles for " +
                                  std::to_string(config.n_elements) + " elements");
        for (std::size_t n = 0; n < xi.size(); ++n)
            if (!(xi[n] > 0.0 && xi[n] <= 1.0))
                throw ValidationError("duty cycle xi[" + std::to_string(n) + "] = " + std::to_string(xi[n]) +
                                      " outside (0, 1]");
    }

    SteeringPlan steering_delays(const ArrayConfig &config, double theta_scan_deg)
    {
        config.validate();
        if (!(theta_scan_deg > 0.0 && theta_scan_deg < 180.0))
            throw ValidationError("theta_scan must lie in (0, 180) degrees, got " + std::to_string(theta_scan_deg));
        SteeringPlan plan;
        plan.theta_scan_deg = theta_scan_deg;
        const double c = cos_pi(theta_scan_deg / 180.0);
        plan.delays.resize(config.n_elements);
        for (std::size_t n = 0; n < config.n_elements; ++n)
            plan.delays[n] = wrap_unit(config.position(n) * c);
        return plan;
    }

    cplx PulseShape::coefficient(int q) const
    {
        return trapezoid_coefficient(q, rise_fall, alignment);
    }

    const SpectralLine *CombinedSpectrum::find(int offset) const
    {
        for (const auto &line : lines)
            if (line.offset == offset)
                return &line;
        return nullptr;
    }

    CombinedSpectrum ssb_combined_spectrum(const ArrayConfig &config, const SteeringPlan &plan, int q_max,
                                           const PulseShape &shape)
    {
        config.validate();
        if (q_max < 1)
            throw ValidationError("q_max must be at least 1");
        const auto delays = plan_delays(config, plan);
        CombinedSpectrum spectrum;
        spectrum.cancelled = config.cancels_mirror();
        for (int p = -q_max; p <= q_max; ++p)
        {
            if (p % 2 == 0)
                continue;
            const cplx base = combined_line(p, config.tau, shape);
            SpectralLine line;
            line.offset = p;
            line.per_element.resize(config.n_elements);
            for (std::size_t n = 0; n < config.n_elements; ++n)
                line.per_element[n] = base == cplx{} ? cplx{} : base * unit_phase(p * delays[n]);
            spectrum.lines.push_back(std::move(line));
        }
        return spectrum;
    }

    double excitation_normalization()
    {
        return 1.0 / (std::numbers::sqrt2 * (1.0 + std::numbers::sqrt2));
    }

    ExcitationSet dynamic_excitations(const ArrayConfig &config, const SteeringPlan &plan, std::span<const double> xi,
                                      int k, int q)
    {
        config.validate();
        validate_duty_cycles(config, xi);
        if (q <= 0 || !in_upsilon(q))
            throw DomainError("dynamic_excitations: q = " + std::to_string(q) + " is not in the stair-step index set");
        const auto delays = plan_delays(config, plan);

        ExcitationSet set;
        set.k = k;
        set.q = q;
        set.branch = in_upsilon1(q) ? Branch::Plus : Branch::Minus;
        const int p = set.branch == Branch::Plus ? q : -q;
        set.offset = k + p;

        // Plus:  8 C_nk / (j sqrt2 (1 + sqrt2) pi q) exp(-j q w0 D_n)
        // Minus: -8 C_nk / (j sqrt2 (1 + sqrt2) pi q) exp(+j q w0 D_n)
        const double scale = 8.0 / (std::numbers::sqrt2 * (1.0 + std::numbers::sqrt2) * std::numbers::pi * q);
        const cplx lead = (set.branch == Branch::Plus ? 1.0 : -1.0) * scale / j;
        set.weights.resize(config.n_elements);
        for (std::size_t n = 0; n < config.n_elements; ++n)
            set.weights[n] = rect_coefficient(xi[n], k) * lead * unit_phase(p * delays[n]);
        return set;
    }

    std::vector<cplx> array_factor(const ArrayConfig &config, std::span<const cplx> weights,
                                   std::span<const double> theta_deg)
    {
        if (weights.size() != config.n_elements)
            throw ValidationError("array_factor: weight count does not match the array");
        const auto z = config.element_positions();
        std::vector<cplx> out(theta_deg.size());
        for (std::size_t i = 0; i < theta_deg.size(); ++i)
        {
            const double c = cos_pi(theta_deg[i] / 180.0);
            cplx acc{};
            for (std::size_t n = 0; n < weights.size(); ++n)
                if (weights[n] != cplx{})
                    acc += weights[n] * unit_phase(-z[n] * c);
            out[i] = acc;
        }
        return out;
    }

    HarmonicModel::HarmonicModel(ArrayConfig config, SteeringPlan plan, std::vector<double> xi, Truncation truncation,
                                 PulseShape shape)
        : config_(std::move(config)), plan_(std::move(plan)), xi_(std::move(xi)), truncation_(truncation),
          shape_(shape)
    {
        config_.validate();
        validate_duty_cycles(config_, xi_);
        if (truncation_.k_max < 0 || truncation_.q_max < 1)
            throw ValidationError("truncation needs k_max >= 0 and q_max >= 1");
        const auto delays = plan_delays(config_, plan_);
        const std::size_t n_el = config_.n_elements;
        const double norm = excitation_normalization();

        for (int p = -truncation_.q_max; p <= truncation_.q_max; ++p)
        {
            const cplx base = combined_line(p, config_.tau, shape_);
            if (base == cplx{})
                continue;
            std::vector<cplx> per(n_el);
            for (std::size_t n = 0; n < n_el; ++n)
                per[n] = norm * base * unit_phase(p * delays[n]);
            lines_.emplace(p, std::move(per));
            pulse_orders_.push_back(p);
        }

        const int k_max = truncation_.k_max;
        rect_.assign(n_el, std::vector<cplx>(2 * static_cast<std::size_t>(k_max) + 1));
        for (std::size_t n = 0; n < n_el; ++n)
            for (int k = -k_max; k <= k_max; ++k)
                rect_[n][static_cast<std::size_t>(k + k_max)] = rect_coefficient(xi_[n], k);

        const int reach = truncation_.k_max + truncation_.q_max;
        for (int m = -reach; m <= reach; ++m)
        {
            const auto w = weights(m);
            if (std::any_of(w.begin(), w.end(), [](const cplx &v) { return v != cplx{}; }))
                offsets_.push_back(m);
        }
    }

    bool HarmonicModel::is_pulse_order(int offset) const
    {
        return lines_.contains(offset);
    }

    std::vector<cplx> HarmonicModel::weights(int offset) const
    {
        const std::size_t n_el = config_.n_elements;
        const int k_max = truncation_.k_max;
        std::vector<cplx> w(n_el);
        for (int k = -k_max; k <= k_max; ++k)
        {
            auto it = lines_.find(offset - k);
            if (it == lines_.end())
                continue;
            const auto kk = static_cast<std::size_t>(k + k_max);
            for (std::size_t n = 0; n < n_el; ++n)
            {
                const cplx c = rect_[n][kk];
                if (c != cplx{})
                    w[n] += c * it->second[n];
            }
        }
        return w;
    }

    std::vector<cplx> HarmonicModel::field(int offset, std::span<const double> theta_deg) const
    {
        const auto w = weights(offset);
        return array_factor(config_, w, theta_deg);
    }

    std::vector<cplx> composite_offset_field(const ArrayConfig &config, const SteeringPlan &plan,
                                             std::span<const double> xi, int offset, const Truncation &truncation,
                                             std::span<const double> theta_deg, const PulseShape &shape)
    {
        if (std::abs(offset) > truncation.k_max + truncation.q_max)
            throw ValidationError("offset " + std::to_string(offset) + " beyond truncation reach");
        HarmonicModel model(config, plan, std::vector<double>(xi.begin(), xi.end()), truncation, shape);
        return model.field(offset, theta_deg);
    }
}
