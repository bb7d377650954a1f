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

#include "ssbtma/scenario.hpp"
#include "ssbtma/errors.hpp"

#include <yaml-cpp/yaml.h>

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace ssbtma
{
    namespace
    {
        std::string where(const std::string &origin, const YAML::Node &node)
        {
            const auto mark = node.Mark();
            if (mark.line < 0)
                return origin;
            return origin + ":" + std::to_string(mark.line + 1);
        }

        template <typename T>
        T scalar(const std::string &origin, const YAML::Node &node, const std::string &key)
        {
            if (!node.IsScalar())
                throw ValidationError(where(origin, node) + ": '" + key + "' must be a scalar");
            try
            {
                return node.as<T>();
            }
            catch (const YAML::BadConversion &)
            {
                throw ValidationError(where(origin, node) + ": cannot read '" + key + "' from '" + node.Scalar() +
                                      "'");
            }
        }

        std::vector<double> number_list(const std::string &origin, const YAML::Node &node, const std::string &key)
        {
            if (!node.IsSequence())
                throw ValidationError(where(origin, node) + ": '" + key + "' must be a list of numbers");
            std::vector<double> out;
            for (const auto &item : node)
                out.push_back(scalar<double>(origin, item, key));
            return out;
        }

        // Iterate a mapping and reject keys not in the allowed set.
        template <typename Fn>
        void each_key(const std::string &origin, const YAML::Node &map, const std::string &section,
                      const std::set<std::string> &allowed, Fn &&fn)
        {
            if (!map.IsMap())
                throw ValidationError(where(origin, map) + ": section '" + section + "' must be a mapping");
            for (const auto &entry : map)
            {
                const auto key = entry.first.as<std::string>();
                if (!allowed.contains(key))
                {
                    std::string names;
                    for (const auto &a : allowed)
                        names += (names.empty() ? "" : ", ") + a;
                    throw ValidationError(where(origin, entry.first) + ": unknown key '" + key + "'" +
                                          (section.empty() ? "" : " in section '" + section + "'") +
                                          " (expected one of: " + names + ")");
                }
                fn(key, entry.second);
            }
        }

        // Shortest text that reads back to the same double.
        std::string num(double v)
        {
            char buf[64];
            const auto res = std::to_chars(buf, buf + sizeof buf, v);
            return std::string(buf, res.ptr);
        }

        std::vector<std::string> nums(const std::vector<double> &values)
        {
            std::vector<std::string> out;
            for (double v : values)
                out.push_back(num(v));
            return out;
        }

        void set_path(YAML::Node root, const std::vector<std::string> &parts, const YAML::Node &value)
        {
            if (parts.size() == 1)
            {
                root[parts.front()] = value;
                return;
            }
            YAML::Node child = root[parts.front()];
            if (!child.IsDefined() || child.IsNull())
            {
                root[parts.front()] = YAML::Node(YAML::NodeType::Map);
                child = root[parts.front()];
            }
            set_path(child, std::vector<std::string>(parts.begin() + 1, parts.end()), value);
        }
    }

    std::string_view to_string(Mode mode)
    {
        switch (mode)
        {
        case Mode::Phased:
            return "phased";
        case Mode::Beamformer:
            return "beamformer";
        case Mode::Nonideal:
            return "nonideal";
        case Mode::ScanSweep:
            return "sweep";
        case Mode::Optimize:
            return "optimize";
        case Mode::PulseDebug:
            return "pulse";
        }
        return "unknown";
    }

    std::string_view to_string(XiSource source)
    {
        switch (source)
        {
        case XiSource::AllOnes:
            return "ones";
        case XiSource::Explicit:
            return "list";
        case XiSource::Table2:
            return "table2";
        case XiSource::Table3:
            return "table3";
        case XiSource::Optimizer:
            return "optimizer";
        }
        return "unknown";
    }

    Mode mode_from_string(std::string_view name)
    {
        for (auto m : {Mode::Phased, Mode::Beamformer, Mode::Nonideal, Mode::ScanSweep, Mode::Optimize,
                       Mode::PulseDebug})
            if (name == to_string(m))
                return m;
        throw ValidationError("unknown mode '" + std::string(name) +
                              "' (phased|beamformer|nonideal|sweep|optimize|pulse)");
    }

    XiSource xi_source_from_string(std::string_view name)
    {
        for (auto s : {XiSource::AllOnes, XiSource::Explicit, XiSource::Table2, XiSource::Table3, XiSource::Optimizer})
            if (name == to_string(s))
                return s;
        throw ValidationError("unknown xi source '" + std::string(name) + "' (ones|list|table2|table3|optimizer)");
    }

    std::vector<double> table2_xi()
    {
        std::vector<double> xi(30, 1.0);
        const std::pair<int, double> pairs[] = {{1, 0.136}, {2, 0.050}, {3, 0.953},
                                                {4, 0.947}, {5, 0.689}, {9, 0.926}};
        for (const auto &[n, v] : pairs)
        {
            xi[static_cast<std::size_t>(n)] = v;
            xi[static_cast<std::size_t>(29 - n)] = v;
        }
        return xi;
    }

    std::vector<double> table3_xi()
    {
        std::vector<double> xi(30, 1.0);
        const std::pair<int, double> listed[] = {{2, 0.063},  {4, 0.078},  {5, 0.076},  {6, 0.063}, {7, 0.880},
                                                 {14, 0.962}, {18, 0.175}, {19, 0.471}, {20, 0.977}};
        for (const auto &[n, v] : listed)
            xi[static_cast<std::size_t>(n)] = v;
        return xi;
    }

    void Scenario::validate() const
    {
        array.validate();
        theta_grid(grid_step);
        if (truncation.k_max < 0 || truncation.q_max < 1)
            throw ValidationError("truncation needs k_max >= 0 and q_max >= 1");
        if (!(theta_scan > 0.0 && theta_scan < 180.0))
            throw ValidationError("steering.theta_scan must lie in (0, 180) degrees");
        if (mode == Mode::ScanSweep && sweep_angles.empty())
            throw ValidationError("sweep mode needs steering.sweep angles");
        for (double a : sweep_angles)
            if (!(a > 0.0 && a < 180.0))
                throw ValidationError("sweep angles must lie in (0, 180) degrees");
        if (!(pulse.rise_fall >= 0.0 && pulse.rise_fall < 0.25))
            throw ValidationError("pulse.rise_fall must lie in [0, 0.25)");
        if (pulse.rise_fall != 0.0 && mode != Mode::Nonideal && mode != Mode::PulseDebug)
            throw ValidationError("pulse.rise_fall is only used by the nonideal and pulse modes");
        if (mode == Mode::Phased && xi_source != XiSource::AllOnes)
            throw ValidationError("phased mode keeps every SPST switch closed; xi.source must be 'ones'");
        if ((mode == Mode::Optimize) != (xi_source == XiSource::Optimizer))
            throw ValidationError("xi.source 'optimizer' goes with mode 'optimize' and only with it");
        if ((xi_source == XiSource::Table2 || xi_source == XiSource::Table3) && array.n_elements != 30)
            throw ValidationError("table presets describe a 30-element array");
        if (xi_source == XiSource::Explicit)
            validate_duty_cycles(array, xi_values);
        else if (!xi_values.empty())
            throw ValidationError("xi.values is only read when xi.source is 'list'");
        if (output_dir.empty())
            throw ValidationError("output.dir must not be empty");
        optimizer.validate();
        if (!optimizer.initial_xi.empty() && optimizer.initial_xi.size() != array.n_elements)
            throw ValidationError("optimizer.initial_xi must have one entry per element");
        for (const auto &c : checks)
        {
            if (c.metric.empty())
                throw ValidationError("every check needs a metric name");
            const bool banded = c.target.has_value() || c.tolerance.has_value();
            if (banded && !(c.target && c.tolerance && *c.tolerance >= 0.0))
                throw ValidationError("check '" + c.metric + "' needs both target and a non-negative tolerance");
            if (!banded && !c.min && !c.max)
                throw ValidationError("check '" + c.metric + "' needs target/tolerance or min/max");
        }
    }

    std::vector<double> Scenario::resolve_xi() const
    {
        switch (xi_source)
        {
        case XiSource::AllOnes:
            return std::vector<double>(array.n_elements, 1.0);
        case XiSource::Explicit:
            return xi_values;
        case XiSource::Table2:
            return table2_xi();
        case XiSource::Table3:
            return table3_xi();
        case XiSource::Optimizer:
            break;
        }
        throw ValidationError("duty cycles from the optimizer are only known after a run");
    }

    Scenario parse_config_string(std::string_view text, std::string_view origin_view)
    {
        const std::string origin(origin_view);
        YAML::Node root;
        try
        {
            root = YAML::Load(std::string(text));
        }
        catch (const YAML::ParserException &e)
        {
            throw ValidationError(origin + ":" + std::to_string(e.mark.line + 1) + ": " + e.msg);
        }
        if (root.IsNull())
            root = YAML::Node(YAML::NodeType::Map);

        Scenario s;
        bool source_given = false;
        each_key(origin, root, "",
                 {"name", "mode", "array", "steering", "xi", "pulse", "grid", "truncation", "optimizer", "output",
                  "checks"},
                 [&](const std::string &key, const YAML::Node &v) {
                     if (key == "name")
                         s.name = scalar<std::string>(origin, v, key);
                     else if (key == "mode")
                     {
                         try
                         {
                             s.mode = mode_from_string(scalar<std::string>(origin, v, key));
                         }
                         catch (const ValidationError &e)
                         {
                             throw ValidationError(where(origin, v) + ": " + e.what());
                         }
                     }
                     else if (key == "array")
                         each_key(origin, v, key, {"elements", "spacing", "positions", "tau"},
                                  [&](const std::string &k, const YAML::Node &x) {
                                      if (k == "elements")
                                      {
                                          const auto n = scalar<long long>(origin, x, k);
                                          if (n < 0)
                                              throw ValidationError(where(origin, x) +
                                                                    ": array.elements must be non-negative");
                                          s.array.n_elements = static_cast<std::size_t>(n);
                                      }
                                      else if (k == "spacing")
                                          s.array.spacing = scalar<double>(origin, x, k);
                                      else if (k == "positions")
                                          s.array.positions = number_list(origin, x, k);
                                      else
                                          s.array.tau = scalar<double>(origin, x, k);
                                  });
                     else if (key == "steering")
                         each_key(origin, v, key, {"theta_scan", "sweep"}, [&](const std::string &k, const YAML::Node &x) {
                             if (k == "theta_scan")
                                 s.theta_scan = scalar<double>(origin, x, k);
                             else
                                 s.sweep_angles = number_list(origin, x, k);
                         });
                     else if (key == "xi")
                         each_key(origin, v, key, {"source", "values"}, [&](const std::string &k, const YAML::Node &x) {
                             if (k == "source")
                             {
                                 source_given = true;
                                 try
                                 {
                                     s.xi_source = xi_source_from_string(scalar<std::string>(origin, x, k));
                                 }
                                 catch (const ValidationError &e)
                                 {
                                     throw ValidationError(where(origin, x) + ": " + e.what());
                                 }
                             }
                             else
                                 s.xi_values = number_list(origin, x, k);
                         });
                     else if (key == "pulse")
                         each_key(origin, v, key, {"rise_fall", "alignment"}, [&](const std::string &k, const YAML::Node &x) {
                             if (k == "rise_fall")
                                 s.pulse.rise_fall = scalar<double>(origin, x, k);
                             else
                             {
                                 try
                                 {
                                     s.pulse.alignment = ramp_alignment_from_string(scalar<std::string>(origin, x, k));
                                 }
                                 catch (const ValidationError &e)
                                 {
                                     throw ValidationError(where(origin, x) + ": " + e.what());
                                 }
                             }
                         });
                     else if (key == "grid")
                         each_key(origin, v, key, {"step"},
                                  [&](const std::string &k, const YAML::Node &x) { s.grid_step = scalar<double>(origin, x, k); });
                     else if (key == "truncation")
                         each_key(origin, v, key, {"k_max", "q_max"}, [&](const std::string &k, const YAML::Node &x) {
                             (k == "k_max" ? s.truncation.k_max : s.truncation.q_max) = scalar<int>(origin, x, k);
                         });
                     else if (key == "optimizer")
                     {
                         auto &o = s.optimizer;
                         each_key(origin, v, key,
                                  {"sll_target", "harmonic_threshold", "symmetric", "seed", "initial_temp",
                                   "cooling_rate", "iters_per_temp", "min_temp", "step_size", "weight_sll",
                                   "weight_harmonic", "weight_efficiency", "search_grid_step", "search_k_max",
                                   "initial_xi"},
                                  [&](const std::string &k, const YAML::Node &x) {
                                      if (k == "symmetric")
                                          o.symmetric = scalar<bool>(origin, x, k);
                                      else if (k == "seed")
                                          o.seed = scalar<std::uint64_t>(origin, x, k);
                                      else if (k == "iters_per_temp")
                                          o.iters_per_temp = scalar<int>(origin, x, k);
                                      else if (k == "search_k_max")
                                          o.search_k_max = scalar<int>(origin, x, k);
                                      else if (k == "initial_xi")
                                          o.initial_xi = number_list(origin, x, k);
                                      else
                                      {
                                          const double d = scalar<double>(origin, x, k);
                                          if (k == "sll_target")
                                              o.sll_target = d;
                                          else if (k == "harmonic_threshold")
                                              o.harmonic_threshold = d;
                                          else if (k == "initial_temp")
                                              o.initial_temp = d;
                                          else if (k == "cooling_rate")
                                              o.cooling_rate = d;
                                          else if (k == "min_temp")
                                              o.min_temp = d;
                                          else if (k == "step_size")
                                              o.step_size = d;
                                          else if (k == "weight_sll")
                                              o.weight_sll = d;
                                          else if (k == "weight_harmonic")
                                              o.weight_harmonic = d;
                                          else if (k == "weight_efficiency")
                                              o.weight_efficiency = d;
                                          else
                                              o.search_grid_step = d;
                                      }
                                  });
                     }
                     else if (key == "output")
                         each_key(origin, v, key, {"dir"},
                                  [&](const std::string &k, const YAML::Node &x) { s.output_dir = scalar<std::string>(origin, x, k); });
                     else if (key == "checks")
                     {
                         if (!v.IsSequence())
                             throw ValidationError(where(origin, v) + ": 'checks' must be a list");
                         for (const auto &item : v)
                         {
                             Check c;
                             each_key(origin, item, "checks", {"metric", "target", "tolerance", "min", "max"},
                                      [&](const std::string &k, const YAML::Node &x) {
                                          if (k == "metric")
                                              c.metric = scalar<std::string>(origin, x, k);
                                          else if (k == "target")
                                              c.target = scalar<double>(origin, x, k);
                                          else if (k == "tolerance")
                                              c.tolerance = scalar<double>(origin, x, k);
                                          else if (k == "min")
                                              c.min = scalar<double>(origin, x, k);
                                          else
                                              c.max = scalar<double>(origin, x, k);
                                      });
                             s.checks.push_back(std::move(c));
                         }
                     }
                 });

        if (s.mode == Mode::Optimize && !source_given)
            s.xi_source = XiSource::Optimizer;

        try
        {
            s.validate();
        }
        catch (const ValidationError &e)
        {
            throw ValidationError(origin + ": " + e.what());
        }
        return s;
    }

    Scenario parse_config(const std::filesystem::path &path)
    {
        std::ifstream in(path);
        if (!in)
            throw IoError("cannot read config file '" + path.string() + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_config_string(buffer.str(), path.string());
    }

    std::string serialize(const Scenario &s)
    {
        YAML::Emitter out;
        out << YAML::BeginMap;
        out << YAML::Key << "name" << YAML::Value << s.name;
        out << YAML::Key << "mode" << YAML::Value << std::string(to_string(s.mode));

        out << YAML::Key << "array" << YAML::Value << YAML::BeginMap;
        out << YAML::Key << "elements" << YAML::Value << s.array.n_elements;
        out << YAML::Key << "spacing" << YAML::Value << num(s.array.spacing);
        if (!s.array.positions.empty())
            out << YAML::Key << "positions" << YAML::Value << YAML::Flow << nums(s.array.positions);
        out << YAML::Key << "tau" << YAML::Value << num(s.array.tau);
        out << YAML::EndMap;

        out << YAML::Key << "steering" << YAML::Value << YAML::BeginMap;
        out << YAML::Key << "theta_scan" << YAML::Value << num(s.theta_scan);
        if (!s.sweep_angles.empty())
            out << YAML::Key << "sweep" << YAML::Value << YAML::Flow << nums(s.sweep_angles);
        out << YAML::EndMap;

        out << YAML::Key << "xi" << YAML::Value << YAML::BeginMap;
        out << YAML::Key << "source" << YAML::Value << std::string(to_string(s.xi_source));
        if (!s.xi_values.empty())
            out << YAML::Key << "values" << YAML::Value << YAML::Flow << nums(s.xi_values);
        out << YAML::EndMap;

        out << YAML::Key << "pulse" << YAML::Value << YAML::BeginMap;
        out << YAML::Key << "rise_fall" << YAML::Value << num(s.pulse.rise_fall);
        out << YAML::Key << "alignment" << YAML::Value << std::string(to_string(s.pulse.alignment));
        out << YAML::EndMap;

        out << YAML::Key << "grid" << YAML::Value << YAML::BeginMap;
        out << YAML::Key << "step" << YAML::Value << num(s.grid_step);
        out << YAML::EndMap;

        out << YAML::Key << "truncation" << YAML::Value << YAML::BeginMap;
        out << YAML::Key << "k_max" << YAML::Value << s.truncation.k_max;
        out << YAML::Key << "q_max" << YAML::Value << s.truncation.q_max;
        out << YAML::EndMap;

        const auto &o = s.optimizer;
        out << YAML::Key << "optimizer" << YAML::Value << YAML::BeginMap;
        out << YAML::Key << "sll_target" << YAML::Value << num(o.sll_target);
        out << YAML::Key << "harmonic_threshold" << YAML::Value << num(o.harmonic_threshold);
        out << YAML::Key << "symmetric" << YAML::Value << o.symmetric;
        out << YAML::Key << "seed" << YAML::Value << o.seed;
        out << YAML::Key << "initial_temp" << YAML::Value << num(o.initial_temp);
        out << YAML::Key << "cooling_rate" << YAML::Value << num(o.cooling_rate);
        out << YAML::Key << "iters_per_temp" << YAML::Value << o.iters_per_temp;
        out << YAML::Key << "min_temp" << YAML::Value << num(o.min_temp);
        out << YAML::Key << "step_size" << YAML::Value << num(o.step_size);
        out << YAML::Key << "weight_sll" << YAML::Value << num(o.weight_sll);
        out << YAML::Key << "weight_harmonic" << YAML::Value << num(o.weight_harmonic);
        out << YAML::Key << "weight_efficiency" << YAML::Value << num(o.weight_efficiency);
        out << YAML::Key << "search_grid_step" << YAML::Value << num(o.search_grid_step);
        out << YAML::Key << "search_k_max" << YAML::Value << o.search_k_max;
        if (!o.initial_xi.empty())
            out << YAML::Key << "initial_xi" << YAML::Value << YAML::Flow << nums(o.initial_xi);
        out << YAML::EndMap;

        out << YAML::Key << "output" << YAML::Value << YAML::BeginMap;
        out << YAML::Key << "dir" << YAML::Value << s.output_dir;
        out << YAML::EndMap;

        if (!s.checks.empty())
        {
            out << YAML::Key << "checks" << YAML::Value << YAML::BeginSeq;
            for (const auto &c : s.checks)
            {
                out << YAML::BeginMap;
                out << YAML::Key << "metric" << YAML::Value << c.metric;
                if (c.target)
                    out << YAML::Key << "target" << YAML::Value << num(*c.target);
                if (c.tolerance)
                    out << YAML::Key << "tolerance" << YAML::Value << num(*c.tolerance);
                if (c.min)
                    out << YAML::Key << "min" << YAML::Value << num(*c.min);
                if (c.max)
                    out << YAML::Key << "max" << YAML::Value << num(*c.max);
                out << YAML::EndMap;
            }
            out << YAML::EndSeq;
        }
        out << YAML::EndMap;
        return std::string(out.c_str()) + "\n";
    }

    void set_config_values(Scenario &scenario, const std::vector<std::pair<std::string, std::string>> &overrides)
    {
        if (overrides.empty())
            return;
        YAML::Node root = YAML::Load(serialize(scenario));
        std::set<std::string> touched;
        std::optional<Mode> new_mode;
        for (const auto &[key, value] : overrides)
        {
            std::vector<std::string> parts;
            std::string current;
            for (char c : key)
            {
                if (c == '.')
                {
                    parts.push_back(current);
                    current.clear();
                }
                else
                    current.push_back(c);
            }
            parts.push_back(current);
            for (const auto &p : parts)
                if (p.empty())
                    throw ValidationError("malformed config key '" + key + "'");

            YAML::Node parsed;
            try
            {
                parsed = YAML::Load(value);
            }
            catch (const YAML::ParserException &e)
            {
                throw ValidationError("cannot parse value for '" + key + "': " + e.msg);
            }
            set_path(root, parts, parsed);
            touched.insert(key);
            if (key == "mode")
                new_mode = mode_from_string(value);
        }

        // A mode change carries its implied xi source and drops ramps the new mode does not use,
        // unless those keys were given explicitly.
        if (new_mode)
        {
            if (!touched.contains("xi.source"))
            {
                if (*new_mode == Mode::Optimize)
                    root["xi"]["source"] = "optimizer";
                else if (*new_mode == Mode::Phased || root["xi"]["source"].as<std::string>() == "optimizer")
                    root["xi"]["source"] = "ones";
            }
            if (!touched.contains("pulse.rise_fall") && *new_mode != Mode::Nonideal && *new_mode != Mode::PulseDebug)
                root["pulse"]["rise_fall"] = 0.0;
        }

        std::string origin = "override";
        for (const auto &[key, value] : overrides)
            origin += (origin == "override" ? " " : ", ") + key + "=" + value;
        YAML::Emitter out;
        out << root;
        scenario = parse_config_string(out.c_str(), origin);
    }

    void set_config_value(Scenario &scenario, std::string_view key, std::string_view value)
    {
        set_config_values(scenario, {{std::string(key), std::string(value)}});
    }

    std::vector<std::string> preset_names()
    {
        return {"fig3a", "fig3b", "fig3c", "fig3d", "fig5", "fig6"};
    }

    Scenario preset(std::string_view figure)
    {
        auto band = [](std::string metric, double target, double tol) {
            Check c;
            c.metric = std::move(metric);
            c.target = target;
            c.tolerance = tol;
            return c;
        };
        auto upper = [](std::string metric, double max) {
            Check c;
            c.metric = std::move(metric);
            c.max = max;
            return c;
        };
        auto lower = [](std::string metric, double min) {
            Check c;
            c.metric = std::move(metric);
            c.min = min;
            return c;
        };

        Scenario s;
        s.name = std::string(figure);
        s.output_dir = "out/" + s.name;
        if (figure == "fig3a")
        {
            s.mode = Mode::Phased;
            s.checks = {band("harmonic_peak_db[-7]", -16.90, 0.05), band("harmonic_peak_db[9]", -19.08, 0.05),
                        band("harmonic_peak_db[-15]", -23.52, 0.05), band("eta_tma", 0.9497, 0.001),
                        band("eta_bfn", 0.586, 0.005), band("eta", 0.556, 0.005)};
        }
        else if (figure == "fig3b")
        {
            s.mode = Mode::Beamformer;
            s.xi_source = XiSource::Table2;
            s.checks = {band("sll_db", -17.0, 0.5), upper("max_am_harmonic_db", -30.0), band("eta_tma", 0.909, 0.005),
                        band("eta_bfn", 0.496, 0.005), band("eta", 0.451, 0.005)};
        }
        else if (figure == "fig3c")
        {
            s.mode = Mode::Phased;
            s.theta_scan = 70.0;
            s.checks = {band("peak_angle_deg", 70.0, kFineGridStepDeg)};
        }
        else if (figure == "fig3d")
        {
            s.mode = Mode::Beamformer;
            s.xi_source = XiSource::Table2;
            s.theta_scan = 110.0;
            s.checks = {band("peak_angle_deg", 110.0, kFineGridStepDeg), band("sll_db", -17.0, 0.5)};
        }
        else if (figure == "fig5")
        {
            s.mode = Mode::ScanSweep;
            s.xi_source = XiSource::Table2;
            s.sweep_angles = {22.0, 45.0, 70.0, 90.0, 110.0, 135.0, 158.0};
            s.grid_step = kSweepGridStepDeg;
            s.checks = {upper("sweep.max_peak_error_deg", kSweepGridStepDeg), upper("sweep.unwanted_spread_db", 0.2),
                        lower("sweep.hpbw_widening_deg", 0.01)};
        }
        else if (figure == "fig6")
        {
            s.mode = Mode::Nonideal;
            s.xi_source = XiSource::Table3;
            s.pulse.rise_fall = 0.06;
            s.checks = {upper("sll_db", -19.0), upper("max_unwanted_db", -19.0), lower("eta_tma", 0.98),
                        band("eta", 0.355, 0.03)};
        }
        else
            throw ValidationError("unknown figure preset '" + std::string(figure) +
                                  "' (fig3a|fig3b|fig3c|fig3d|fig5|fig6)");
        s.validate();
        return s;
    }
}
