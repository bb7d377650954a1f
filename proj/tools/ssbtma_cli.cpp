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


// Command-line front end. Everything goes through the C interface of libssbtma.

#include "ssbtma/ssbtma.h"

#include "CLI11.hpp"

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace
{
    constexpr int kExitOk = 0;
    constexpr int kExitError = 1;
    constexpr int kExitValidation = 2;
    constexpr int kExitCheck = 3;

    struct Failure
    {
        ssbtma_status status;
        std::string message;
    };

    void check(ssbtma_status status, const std::string &context)
    {
        if (status != SSBTMA_OK)
            throw Failure{status, context + ": " + ssbtma_last_error()};
    }

    struct ScenarioDeleter
    {
        void operator()(ssbtma_scenario *s) const { ssbtma_scenario_free(s); }
    };
    struct ReportDeleter
    {
        void operator()(ssbtma_report *r) const { ssbtma_report_free(r); }
    };
    struct StringDeleter
    {
        void operator()(char *s) const { ssbtma_string_free(s); }
    };
    using ScenarioPtr = std::unique_ptr<ssbtma_scenario, ScenarioDeleter>;
    using ReportPtr = std::unique_ptr<ssbtma_report, ReportDeleter>;
    using StringPtr = std::unique_ptr<char, StringDeleter>;

    // Flags shared by every subcommand.
    struct Common
    {
        std::string config;
        std::vector<std::string> sets;
        std::string out;
        bool enforce = false;
        bool json = false;
        bool quiet = false;
        bool no_files = false;
    };

    // Model flags; each maps onto one config key when given.
    struct ModelFlags
    {
        std::optional<std::string> mode;
        std::optional<double> theta_scan;
        std::optional<std::string> xi_source;
        std::vector<double> xi;
        std::optional<long long> elements;
        std::optional<double> spacing;
        std::optional<double> grid_step;
        std::optional<int> k_max;
        std::optional<int> q_max;
        std::optional<double> rise_fall;
        std::optional<std::string> alignment;
        std::vector<double> angles;
    };

    struct OptimizerFlags
    {
        std::optional<unsigned long long> seed;
        std::optional<double> sll_target;
        std::optional<double> harmonic_threshold;
        std::optional<int> iters_per_temp;
        std::optional<double> cooling_rate;
        bool asymmetric = false;
    };

    std::string number(double v)
    {
        std::ostringstream s;
        s.precision(17);
        s << v;
        return s.str();
    }

    std::string flow_list(const std::vector<double> &values)
    {
        std::string out = "[";
        for (std::size_t i = 0; i < values.size(); ++i)
            out += (i ? ", " : "") + number(values[i]);
        return out + "]";
    }

    void add_common(CLI::App *app, Common &c)
    {
        app->add_option("-c,--config", c.config, "YAML scenario file")->check(CLI::ExistingFile);
        app->add_option("-s,--set", c.sets, "Override a config key, e.g. --set array.elements=16")
            ->type_name("KEY=VALUE");
        app->add_option("-o,--out", c.out, "Output directory (overrides SSBTMA_OUTPUT_DIR and output.dir)");
        app->add_flag("--check", c.enforce, "Exit with status 3 when a configured check fails");
        app->add_flag("--json", c.json, "Print metrics.json to stdout");
        app->add_flag("-q,--quiet", c.quiet, "Only print failures");
        app->add_flag("--no-files", c.no_files, "Compute without writing output files");
    }

    void add_array_flags(CLI::App *app, ModelFlags &m)
    {
        app->add_option("--elements", m.elements, "Number of array elements");
        app->add_option("--spacing", m.spacing, "Element spacing in wavelengths");
        app->add_option("--xi-source", m.xi_source, "Duty cycles: ones, list, table2, table3");
        app->add_option("--xi", m.xi, "Explicit duty cycles (sets --xi-source list)")->delimiter(',');
    }

    void add_pattern_flags(CLI::App *app, ModelFlags &m)
    {
        add_array_flags(app, m);
        app->add_option("--grid-step", m.grid_step, "Angular grid step in degrees");
        app->add_option("--k-max", m.k_max, "Amplitude harmonics kept, |k| <= k_max");
        app->add_option("--q-max", m.q_max, "Stair-step harmonics kept, |q| <= q_max");
    }

    std::vector<std::pair<std::string, std::string>> overrides(const Common &c, const ModelFlags &m,
                                                               const OptimizerFlags &o)
    {
        std::vector<std::pair<std::string, std::string>> kv;
        auto put = [&](const std::string &key, const std::string &value) { kv.emplace_back(key, value); };
        if (m.mode)
            put("mode", *m.mode);
        if (m.theta_scan)
            put("steering.theta_scan", number(*m.theta_scan));
        if (!m.angles.empty())
            put("steering.sweep", flow_list(m.angles));
        if (!m.xi.empty())
        {
            put("xi.source", "list");
            put("xi.values", flow_list(m.xi));
        }
        else if (m.xi_source)
            put("xi.source", *m.xi_source);
        if (m.elements)
            put("array.elements", std::to_string(*m.elements));
        if (m.spacing)
            put("array.spacing", number(*m.spacing));
        if (m.grid_step)
            put("grid.step", number(*m.grid_step));
        if (m.k_max)
            put("truncation.k_max", std::to_string(*m.k_max));
        if (m.q_max)
            put("truncation.q_max", std::to_string(*m.q_max));
        if (m.rise_fall)
            put("pulse.rise_fall", number(*m.rise_fall));
        if (m.alignment)
            put("pulse.alignment", *m.alignment);
        if (o.seed)
            put("optimizer.seed", std::to_string(*o.seed));
        if (o.sll_target)
            put("optimizer.sll_target", number(*o.sll_target));
        if (o.harmonic_threshold)
            put("optimizer.harmonic_threshold", number(*o.harmonic_threshold));
        if (o.iters_per_temp)
            put("optimizer.iters_per_temp", std::to_string(*o.iters_per_temp));
        if (o.cooling_rate)
            put("optimizer.cooling_rate", number(*o.cooling_rate));
        if (o.asymmetric)
            put("optimizer.symmetric", "false");
        for (const auto &s : c.sets)
        {
            const auto eq = s.find('=');
            if (eq == std::string::npos || eq == 0)
                throw Failure{SSBTMA_ERR_VALIDATION, "--set expects KEY=VALUE, got '" + s + "'"};
            put(s.substr(0, eq), s.substr(eq + 1));
        }
        return kv;
    }

    ScenarioPtr load_base(const Common &c, const std::string &preset)
    {
        ssbtma_scenario *raw = nullptr;
        if (!preset.empty())
            check(ssbtma_scenario_preset(preset.c_str(), &raw), "preset");
        else if (!c.config.empty())
            check(ssbtma_scenario_load_file(c.config.c_str(), &raw), "config");
        else
            check(ssbtma_scenario_load_string("{}", "defaults", &raw), "defaults");
        return ScenarioPtr(raw);
    }

    void apply_overrides(ssbtma_scenario *scenario, const std::vector<std::pair<std::string, std::string>> &kv)
    {
        std::vector<const char *> keys, values;
        for (const auto &[k, v] : kv)
        {
            keys.push_back(k.c_str());
            values.push_back(v.c_str());
        }
        check(ssbtma_scenario_set_many(scenario, keys.data(), values.data(), kv.size()), "--set");
    }

    void print_summary(const ssbtma_report *report, const ssbtma_scenario *scenario, bool quiet)
    {
        if (!quiet)
        {
            std::printf("scenario %s (mode %s)\n", ssbtma_scenario_name(scenario), ssbtma_scenario_mode(scenario));
            static const char *const shown[] = {"sll_db",
                                                "peak_angle_deg",
                                                "hpbw_deg",
                                                "max_unwanted_db",
                                                "max_am_harmonic_db",
                                                "eta_tma",
                                                "eta_bfn",
                                                "eta",
                                                "sweep.max_peak_error_deg",
                                                "sweep.unwanted_spread_db",
                                                "sweep.hpbw_widening_deg",
                                                "optimizer.achieved_sll",
                                                "optimizer.achieved_harmonic_max",
                                                "optimizer.best_cost",
                                                "optimizer.iterations",
                                                "pulse.max_quadrature_error"};
            for (const char *name : shown)
            {
                double value = 0.0;
                if (ssbtma_report_value(report, name, &value) == SSBTMA_OK)
                    std::printf("  %-34s %.6g\n", name, value);
            }
        }
        const std::size_t n = ssbtma_report_check_count(report);
        for (std::size_t i = 0; i < n; ++i)
        {
            ssbtma_check_result c{};
            check(ssbtma_report_check(report, i, &c), "check");
            if (quiet && c.passed)
                continue;
            if (c.has_value)
                std::printf("%s %s = %.6g\n", c.passed ? "PASS" : "FAIL", c.metric, c.value);
            else
                std::printf("FAIL %s (not produced by this mode)\n", c.metric);
        }
        if (!quiet)
            for (std::size_t i = 0; i < ssbtma_report_artifact_count(report); ++i)
                std::printf("  wrote %s\n", ssbtma_report_artifact(report, i));
    }

    int execute(const Common &c, ScenarioPtr scenario, bool efficiency_only)
    {
        ssbtma_run_options options;
        ssbtma_run_options_default(&options);
        options.efficiency_only = efficiency_only ? 1 : 0;
        options.write_files = c.no_files ? 0 : 1;
        std::string out = c.out;
        if (out.empty())
            if (const char *env = std::getenv("SSBTMA_OUTPUT_DIR"); env && *env)
                out = env;
        if (!out.empty())
            options.output_dir = out.c_str();

        ssbtma_report *raw = nullptr;
        check(ssbtma_run(scenario.get(), &options, &raw), "run");
        ReportPtr report(raw);

        if (c.json)
        {
            char *text = nullptr;
            check(ssbtma_report_json(report.get(), &text), "json");
            StringPtr owned(text);
            std::fputs(owned.get(), stdout);
        }
        else
            print_summary(report.get(), scenario.get(), c.quiet);

        if (c.enforce && !ssbtma_report_checks_passed(report.get()))
            return kExitCheck;
        return kExitOk;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Single-sideband time-modulated array simulator"};
    app.set_version_flag("--version", std::string(ssbtma_version()));
    app.require_subcommand(1);

    Common common;
    ModelFlags model;
    OptimizerFlags opt;
    std::string figure;
    bool show_config = false;

    auto *pattern = app.add_subcommand("pattern", "Harmonic radiation patterns at one steering angle");
    add_common(pattern, common);
    add_pattern_flags(pattern, model);
    pattern->add_option("--mode", model.mode, "phased, beamformer or nonideal");
    pattern->add_option("--theta-scan", model.theta_scan, "Steering angle in degrees");
    pattern->add_option("--rise-fall", model.rise_fall, "Ramp length as a fraction of T0 (nonideal)");
    pattern->add_option("--alignment", model.alignment, "Ramp alignment: centered, leading, trailing");

    auto *efficiency = app.add_subcommand("efficiency", "Power efficiencies only");
    add_common(efficiency, common);
    add_array_flags(efficiency, model);
    efficiency->add_option("--rise-fall", model.rise_fall, "Ramp length as a fraction of T0");

    auto *sweep = app.add_subcommand("sweep", "Metrics over several steering angles");
    add_common(sweep, common);
    add_pattern_flags(sweep, model);
    sweep->add_option("--angles", model.angles, "Steering angles in degrees")->delimiter(',');

    auto *optimize = app.add_subcommand("optimize", "Anneal the duty cycles");
    add_common(optimize, common);
    add_pattern_flags(optimize, model);
    optimize->add_option("--theta-scan", model.theta_scan, "Steering angle for the final pattern");
    optimize->add_option("--seed", opt.seed, "Random seed");
    optimize->add_option("--sll-target", opt.sll_target, "Side-lobe target in dB");
    optimize->add_option("--harmonic-threshold", opt.harmonic_threshold, "Harmonic limit in dB");
    optimize->add_option("--iters-per-temp", opt.iters_per_temp, "Moves per temperature");
    optimize->add_option("--cooling-rate", opt.cooling_rate, "Geometric cooling factor");
    optimize->add_flag("--asymmetric", opt.asymmetric, "Search all duty cycles independently");

    auto *pulse = app.add_subcommand("pulse", "Switching waveforms and their spectra");
    add_common(pulse, common);
    pulse->add_option("--rise-fall", model.rise_fall, "Ramp length as a fraction of T0");
    pulse->add_option("--alignment", model.alignment, "Ramp alignment: centered, leading, trailing");
    pulse->add_option("--q-max", model.q_max, "Highest harmonic order listed");

    auto *reproduce = app.add_subcommand("reproduce", "Run a built-in figure scenario");
    add_common(reproduce, common);
    reproduce->add_option("figure", figure, "fig3a, fig3b, fig3c, fig3d, fig5 or fig6")->required();
    reproduce->add_flag("--print-config", show_config, "Print the scenario YAML and exit");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForVersion &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return kExitValidation;
    }

    try
    {
        if (!common.config.empty() && !figure.empty())
            throw Failure{SSBTMA_ERR_VALIDATION, "reproduce takes a figure name, not --config"};
        ScenarioPtr scenario = load_base(common, figure);

        // Without a config file the mode follows from the subcommand and the flags given.
        const bool from_file = !common.config.empty();
        if (pattern->parsed() && !model.mode && !from_file)
        {
            if (model.rise_fall && *model.rise_fall > 0.0)
                model.mode = "nonideal";
            else if (!model.xi.empty() || (model.xi_source && *model.xi_source != "ones"))
                model.mode = "beamformer";
        }
        if (efficiency->parsed() && !from_file)
        {
            if (model.rise_fall && *model.rise_fall > 0.0)
                model.mode = "nonideal";
            else if (!model.xi.empty() || (model.xi_source && *model.xi_source != "ones"))
                model.mode = "beamformer";
        }
        if (sweep->parsed())
        {
            model.mode = "sweep";
            if (model.angles.empty() && !from_file)
                model.angles = {22.0, 45.0, 70.0, 90.0, 110.0, 135.0, 158.0};
            if (!from_file && !model.grid_step)
                model.grid_step = 0.5;
        }
        if (optimize->parsed())
            model.mode = "optimize";
        if (pulse->parsed())
            model.mode = "pulse";

        apply_overrides(scenario.get(), overrides(common, model, opt));

        if (show_config)
        {
            char *yaml = nullptr;
            check(ssbtma_scenario_serialize(scenario.get(), &yaml), "serialize");
            StringPtr owned(yaml);
            std::fputs(owned.get(), stdout);
            return kExitOk;
        }
        return execute(common, std::move(scenario), efficiency->parsed());
    }
    catch (const Failure &f)
    {
        std::fprintf(stderr, "ssbtma: %s\n", f.message.c_str());
        return f.status == SSBTMA_ERR_VALIDATION ? kExitValidation : kExitError;
    }
}
