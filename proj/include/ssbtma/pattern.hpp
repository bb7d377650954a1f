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

#ifndef SSBTMA_PATTERN_HPP
#define SSBTMA_PATTERN_HPP

#include "ssbtma/harmonic.hpp"

#include <map>
#include <span>
#include <vector>

namespace ssbtma
{
    /// Lowest level written to any pattern, in dB. Exact zeros map here.
    inline constexpr double kPatternFloorDb = -200.0;

    inline constexpr double kFineGridStepDeg = 0.05;
    inline constexpr double kSweepGridStepDeg = 0.5;

    /// Uniform grid over [0, 180] degrees, both ends included.
    std::vector<double> theta_grid(double step_deg);

    /// Normalized power patterns, one row per harmonic offset. The global maximum is exactly 0 dB.
    struct PatternGrid
    {
        std::vector<double> theta_deg;
        std::vector<int> offsets;                  // ascending
        std::vector<std::vector<double>> power_db; // [offset index][theta index]
        std::vector<int> pulse_offsets;            // offsets fed by a k = 0 term

        bool has_offset(int offset) const;
        const std::vector<double> &row(int offset) const;
        double grid_step() const;
    };

    struct PatternOptions
    {
        double grid_step_deg = kFineGridStepDeg;
        Truncation truncation{};
        PulseShape shape{};
    };

    PatternGrid build_pattern(const ArrayConfig &config, const SteeringPlan &plan, std::span<const double> xi,
                              const PatternOptions &options = {});

    /// Side-lobe level of one offset relative to its own peak. The main lobe ends at the first local
    /// minimum on each side of the peak. Returns kPatternFloorDb when there is no side lobe.
    double side_lobe_level(const PatternGrid &pattern, int offset = 1);

    /// Side-lobe level of a single sampled pattern in dB.
    double side_lobe_level(std::span<const double> power_db);

    /// Peak level of every offset relative to the global maximum.
    std::map<int, double> harmonic_peak_levels(const PatternGrid &pattern);

    double peak_angle(const PatternGrid &pattern, int offset = 1);

    /// -3 dB width of the main lobe relative to the pattern's own peak, linearly interpolated in dB.
    double half_power_beamwidth(const PatternGrid &pattern, int offset = 1);

    struct PatternMetrics
    {
        double theta_scan_deg = 90.0;
        double sll_db = kPatternFloorDb;
        std::map<int, double> harmonic_peaks_db;
        double hpbw_deg = 0.0;
        double peak_angle_deg = 0.0;
        double max_unwanted_db = kPatternFloorDb;    // every offset except +1
        double max_am_harmonic_db = kPatternFloorDb; // offsets only reached through k != 0
    };

    PatternMetrics pattern_metrics(const PatternGrid &pattern, double theta_scan_deg = 90.0);

    /// Pattern metrics for each steering angle; the default grid step is the coarse sweep step.
    std::vector<PatternMetrics> scan_sweep(const ArrayConfig &config, std::span<const double> xi,
                                           std::span<const double> theta_scan_list, PatternOptions options = {
                                                                                        kSweepGridStepDeg, {}, {}});
}

#endif
