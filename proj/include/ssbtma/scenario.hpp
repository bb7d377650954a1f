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

#ifndef SSBTMA_SCENARIO_HPP
#define SSBTMA_SCENARIO_HPP

#include "ssbtma/efficiency.hpp"
#include "ssbtma/harmonic.hpp"
#include "ssbtma/optimizer.hpp"
#include "ssbtma/pattern.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ssbtma
{
    enum class Mode
    {
        Phased,     // SPST switches closed, xi = 1
        Beamformer, // amplitude pulses from xi_source
        Nonideal,   // ramped stair-step transitions
        ScanSweep,  // metrics over a list of steering angles
        Optimize,   // anneal xi, then evaluate the result
        PulseDebug  // waveform and spectrum dump
    };

    enum class XiSource
    {
        AllOnes,
        Explicit,
        Table2,
        Table3,
        Optimizer
    };

    std::string_view to_string(Mode mode);
    std::string_view to_string(XiSource source);
    Mode mode_from_string(std::string_view name);
    XiSource xi_source_from_string(std::string_view name);

    /// Reference duty cycles of the symmetric 30-element beamformer.
    std::vector<double> table2_xi();

    /// Reference duty cycles for ramped pulses; listed elements are 0-based indices of a 30-element
    /// array, the rest are 1.
    std::vector<double> table3_xi();

    /// Acceptance threshold on a named report metric. Either target +- tolerance, or min/max bounds.
    struct Check
    {
        std::string metric;
        std::optional<double> target;
        std::optional<double> tolerance;
        std::optional<double> min;
        std::optional<double> max;

        bool operator==(const Check &) const = default;
    };

    struct Scenario
    {
        std::string name = "custom";
        Mode mode = Mode::Phased;
        ArrayConfig array = ArrayConfig::uniform(30);
        double theta_scan = 90.0;
        std::vector<double> sweep_angles; // ScanSweep only
        XiSource xi_source = XiSource::AllOnes;
        std::vector<double> xi_values; // Explicit only
        PulseShape pulse{};
        std::string output_dir = "out";
        double grid_step = kFineGridStepDeg;
        Truncation truncation{};
        OptimizerConfig optimizer{};
        std::vector<Check> checks;

        void validate() const;

        /// Duty cycles implied by the mode and xi_source. Throws for XiSource::Optimizer (needs a run).
        std::vector<double> resolve_xi() const;

        bool operator==(const Scenario &) const = default;
    };

    /// Parse a YAML scenario file. Unknown keys and bad values raise ValidationError with file:line.
    Scenario parse_config(const std::filesystem::path &path);
    Scenario parse_config_string(std::string_view text, std::string_view origin = "<string>");

    /// Canonical YAML with every field written out; parse_config_string(serialize(s)) == s.
    std::string serialize(const Scenario &scenario);

    /// Override one key by dotted path (e.g. "array.elements", "optimizer.seed") and revalidate.
    void set_config_value(Scenario &scenario, std::string_view key, std::string_view value);

    /// Apply several overrides at once and validate only the final state. Changing the mode also
    /// switches xi.source and pulse.rise_fall to values the new mode accepts, unless they are overridden too.
    void set_config_values(Scenario &scenario, const std::vector<std::pair<std::string, std::string>> &overrides);

    /// Built-in figure scenarios: fig3a, fig3b, fig3c, fig3d, fig5, fig6.
    Scenario preset(std::string_view figure);
    std::vector<std::string> preset_names();

    struct CheckOutcome
    {
        Check check;
        std::optional<double> value; // empty when the metric was not produced
        bool passed = false;
    };

    struct RunOptions
    {
        bool efficiency_only = false;
        bool write_files = true;
        std::optional<std::string> output_dir; // overrides scenario.output_dir
    };

    struct RunReport
    {
        Scenario scenario;
        std::vector<double> xi;
        std::optional<PatternMetrics> metrics;
        std::vector<PatternMetrics> sweep;
        std::optional<EfficiencyReport> efficiency; // closed form for ideal pulses, numeric otherwise
        std::optional<EfficiencyReport> efficiency_numeric;
        std::optional<OptimizerResult> optimizer;
        std::map<std::string, double> values; // flat named metrics used by checks
        std::map<std::string, std::string> artifacts;
        std::vector<CheckOutcome> checks;
        std::string version;

        bool checks_passed() const;
        std::string to_json() const;
    };

    /// Orchestrates one scenario and writes pattern.csv, metrics.json and SVG plots.
    /// The output directory is created and probed before any computation (IoError on failure).
    RunReport run(const Scenario &scenario, const RunOptions &options = {});

    std::string_view version();

    /// Offsets whose peak is below this level are left out of pattern.csv.
    inline constexpr double kCsvOmitBelowDb = -60.0;
}

#endif
