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

#include "ssbtma/pattern.hpp"
#include "ssbtma/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ssbtma
{
    namespace
    {
        double to_db(double ratio)
        {
            if (!(ratio > 0.0))
                return kPatternFloorDb;
            return std::max(10.0 * std::log10(ratio), kPatternFloorDb);
        }

        std::size_t argmax(std::span<const double> v)
        {
            return static_cast<std::size_t>(std::distance(v.begin(), std::max_element(v.begin(), v.end())));
        }
    }

    std::vector<double> theta_grid(double step_deg)
    {
        if (!(step_deg > 0.0 && step_deg <= 90.0))
            throw ValidationError("grid step must lie in (0, 90] degrees, got " + std::to_string(step_deg));
        const long long count = std::llround(180.0 / step_deg);
        if (std::abs(static_cast<double>(count) * step_deg - 180.0) > 1e-9)
            throw ValidationError("grid step " + std::to_string(step_deg) + " does not divide 180 degrees");
        std::vector<double> theta(static_cast<std::size_t>(count) + 1);
        for (long long i = 0; i <= count; ++i)
            theta[static_cast<std::size_t>(i)] = 180.0 * static_cast<double>(i) / static_cast<double>(count);
        return theta;
    }

    bool PatternGrid::has_offset(int offset) const
    {
        return std::binary_search(offsets.begin(), offsets.end(), offset);
    }

    const std::vector<double> &PatternGrid::row(int offset) const
    {
        auto it = std::lower_bound(offsets.begin(), offsets.end(), offset);
        if (it == offsets.end() || *it != offset)
            throw ValidationError("pattern has no offset " + std::to_string(offset));
        return power_db[static_cast<std::size_t>(std::distance(offsets.begin(), it))];
    }

    double PatternGrid::grid_step() const
    {
        return theta_deg.size() > 1 ? theta_deg[1] - theta_deg[0] : 0.0;
    }

    PatternGrid build_pattern(const ArrayConfig &config, const SteeringPlan &plan, std::span<const double> xi,
                              const PatternOptions &options)
    {
        HarmonicModel model(config, plan, std::vector<double>(xi.begin(), xi.end()), options.truncation,
                            options.shape);
        PatternGrid grid;
        grid.theta_deg = theta_grid(options.grid_step_deg);
        grid.offsets = model.offsets();
        for (int m : grid.offsets)
            if (model.is_pulse_order(m))
                grid.pulse_offsets.push_back(m);

        // Spatial phase table, shared by every offset.
        const auto z = config.element_positions();
        const std::size_t n_theta = grid.theta_deg.size();
        const std::size_t n_el = z.size();
        std::vector<cplx> phase(n_theta * n_el);
        for (std::size_t i = 0; i < n_theta; ++i)
        {
            const double c = cos_pi(grid.theta_deg[i] / 180.0);
            for (std::size_t n = 0; n < n_el; ++n)
                phase[i * n_el + n] = unit_phase(-z[n] * c);
        }

        std::vector<std::vector<double>> power;
        power.reserve(grid.offsets.size());
        double global_max = 0.0;
        for (int m : grid.offsets)
        {
            const auto w = model.weights(m);
            std::vector<double> p(n_theta);
            for (std::size_t i = 0; i < n_theta; ++i)
            {
                cplx acc{};
                const cplx *row = &phase[i * n_el];
                for (std::size_t n = 0; n < n_el; ++n)
                    acc += w[n] * row[n];
                p[i] = std::norm(acc);
            }
            global_max = std::max(global_max, *std::max_element(p.begin(), p.end()));
            power.push_back(std::move(p));
        }

        grid.power_db.reserve(power.size());
        for (auto &p : power)
        {
            for (double &v : p)
                v = to_db(global_max > 0.0 ? v / global_max : 0.0);
            grid.power_db.push_back(std::move(p));
        }
        return grid;
    }

    double side_lobe_level(std::span<const double> p)
    {
        if (p.size() < 3)
            return kPatternFloorDb;
        const std::size_t peak = argmax(p);
        std::size_t left = peak;
        while (left > 0 && p[left - 1] <= p[left])
            --left;
        std::size_t right = peak;
        while (right + 1 < p.size() && p[right + 1] <= p[right])
            ++right;

        double lobe = -std::numeric_limits<double>::infinity();
        if (left > 0)
            lobe = std::max(lobe, *std::max_element(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(left) + 1));
        if (right + 1 < p.size())
            lobe = std::max(lobe, *std::max_element(p.begin() + static_cast<std::ptrdiff_t>(right), p.end()));
        if (!std::isfinite(lobe))
            return kPatternFloorDb;
        return std::max(lobe - p[peak], kPatternFloorDb);
    }

    double side_lobe_level(const PatternGrid &pattern, int offset)
    {
        return side_lobe_level(pattern.row(offset));
    }

    std::map<int, double> harmonic_peak_levels(const PatternGrid &pattern)
    {
        std::map<int, double> peaks;
        for (std::size_t i = 0; i < pattern.offsets.size(); ++i)
            peaks[pattern.offsets[i]] = *std::max_element(pattern.power_db[i].begin(), pattern.power_db[i].end());
        return peaks;
    }

    double peak_angle(const PatternGrid &pattern, int offset)
    {
        return pattern.theta_deg[argmax(pattern.row(offset))];
    }

    double half_power_beamwidth(const PatternGrid &pattern, int offset)
    {
        const auto &p = pattern.row(offset);
        const auto &theta = pattern.theta_deg;
        const std::size_t peak = argmax(p);
        const double level = p[peak] - 3.0;

        auto crossing = [&](std::size_t inside, std::size_t outside) {
            const double t = (p[inside] - level) / (p[inside] - p[outside]);
            return theta[inside] + t * (theta[outside] - theta[inside]);
        };

        double lo = theta.front();
        for (std::size_t i = peak; i > 0; --i)
            if (p[i - 1] < level)
            {
                lo = crossing(i, i - 1);
                break;
            }
        double hi = theta.back();
        for (std::size_t i = peak; i + 1 < p.size(); ++i)
            if (p[i + 1] < level)
            {
                hi = crossing(i, i + 1);
                break;
            }
        return hi - lo;
    }

    PatternMetrics pattern_metrics(const PatternGrid &pattern, double theta_scan_deg)
    {
        if (!pattern.has_offset(1))
            throw ValidationError("pattern has no content at the exploited harmonic +1");
        PatternMetrics m;
        m.theta_scan_deg = theta_scan_deg;
        m.sll_db = side_lobe_level(pattern, 1);
        m.harmonic_peaks_db = harmonic_peak_levels(pattern);
        m.hpbw_deg = half_power_beamwidth(pattern, 1);
        m.peak_angle_deg = peak_angle(pattern, 1);
        for (const auto &[offset, level] : m.harmonic_peaks_db)
        {
            if (offset == 1)
                continue;
            m.max_unwanted_db = std::max(m.max_unwanted_db, level);
            if (!std::binary_search(pattern.pulse_offsets.begin(), pattern.pulse_offsets.end(), offset))
                m.max_am_harmonic_db = std::max(m.max_am_harmonic_db, level);
        }
        return m;
    }

    std::vector<PatternMetrics> scan_sweep(const ArrayConfig &config, std::span<const double> xi,
                                           std::span<const double> theta_scan_list, PatternOptions options)
    {
        std::vector<PatternMetrics> out;
        out.reserve(theta_scan_list.size());
        for (double theta : theta_scan_list)
        {
            const auto plan = steering_delays(config, theta);
            const auto grid = build_pattern(config, plan, xi, options);
            out.push_back(pattern_metrics(grid, theta));
        }
        return out;
    }
}
