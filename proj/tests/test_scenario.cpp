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

#include "ssbtma/errors.hpp"
#include "ssbtma/scenario.hpp"

#include "json.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

using namespace ssbtma;
namespace fs = std::filesystem;

namespace
{
    fs::path scratch(const std::string &name)
    {
        auto dir = fs::temp_directory_path() / ("ssbtma_test_" + name);
        fs::remove_all(dir);
        return dir;
    }

    std::string slurp(const fs::path &path)
    {
        std::ifstream in(path);
        std::stringstream s;
        s << in.rdbuf();
        return s.str();
    }

    Scenario random_scenario(std::mt19937 &rng)
    {
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::uniform_int_distribution<int> pick(0, 5);
        Scenario s;
        s.name = "random_" + std::to_string(rng() % 1000);
        const std::size_t n = 2 + rng() % 20;
        s.array = ArrayConfig::uniform(n, 0.1 + unit(rng));
        if (rng() % 3 == 0)
        {
            s.array.positions.clear();
            double z = 0.0;
            for (std::size_t i = 0; i < n; ++i)
            {
                s.array.positions.push_back(z);
                z += 0.05 + unit(rng);
            }
        }
        s.array.tau = rng() % 2 ? 0.25 : 0.9 * unit(rng);
        s.theta_scan = 1.0 + 178.0 * unit(rng);
        s.grid_step = rng() % 2 ? 0.05 : 0.5;
        s.truncation = {static_cast<int>(rng() % 30), 1 + static_cast<int>(rng() % 60)};
        switch (pick(rng))
        {
        case 0:
            s.mode = Mode::Phased;
            break;
        case 1:
            s.mode = Mode::Beamformer;
            s.xi_source = XiSource::Explicit;
            for (std::size_t i = 0; i < n; ++i)
                s.xi_values.push_back(0.01 + 0.99 * unit(rng));
            break;
        case 2:
            s.mode = Mode::Nonideal;
            s.pulse = {0.2 * unit(rng), static_cast<RampAlignment>(rng() % 3)};
            break;
        case 3:
            s.mode = Mode::ScanSweep;
            for (int i = 0; i < 3; ++i)
                s.sweep_angles.push_back(1.0 + 178.0 * unit(rng));
            break;
        case 4:
            s.mode = Mode::Optimize;
            s.xi_source = XiSource::Optimizer;
            s.optimizer.seed = rng();
            s.optimizer.cooling_rate = 0.01 + 0.98 * unit(rng);
            s.optimizer.step_size = unit(rng);
            s.optimizer.symmetric = rng() % 2;
            break;
        default:
            s.mode = Mode::PulseDebug;
            s.pulse.rise_fall = 0.2 * unit(rng);
        }
        if (rng() % 2)
        {
            Check c;
            c.metric = "sll_db";
            c.target = -10.0 * unit(rng);
            c.tolerance = unit(rng);
            s.checks.push_back(c);
            Check d;
            d.metric = "eta";
            d.min = unit(rng) / 3.0;
            s.checks.push_back(d);
        }
        s.output_dir = "out/" + s.name;
        return s;
    }
}

TEST_CASE("minimal config fills defaults")
{
    const auto s = parse_config_string("mode: phased\narray:\n  elements: 30\n");
    CHECK(s.mode == Mode::Phased);
    CHECK(s.array.n_elements == 30);
    CHECK(s.array.spacing == 0.5);
    CHECK(s.theta_scan == 90.0);
    CHECK(s.grid_step == 0.05);
    CHECK(s.truncation == Truncation{});
    CHECK(s.resolve_xi() == std::vector<double>(30, 1.0));
}

TEST_CASE("table presets")
{
    const auto s = parse_config_string("mode: beamformer\nxi:\n  source: table2\n");
    const auto xi = s.resolve_xi();
    REQUIRE(xi.size() == 30);
    const std::pair<int, double> pairs[] = {{1, 0.136}, {2, 0.050}, {3, 0.953}, {4, 0.947}, {5, 0.689}, {9, 0.926}};
    int reduced = 0;
    for (std::size_t n = 0; n < 30; ++n)
        reduced += xi[n] != 1.0;
    CHECK(reduced == 12);
    for (const auto &[n, v] : pairs)
    {
        CHECK(xi[static_cast<std::size_t>(n)] == v);
        CHECK(xi[static_cast<std::size_t>(29 - n)] == v);
    }
    const auto t3 = table3_xi();
    CHECK(t3[2] == 0.063);
    CHECK(t3[7] == 0.880);
    CHECK(t3[19] == 0.471);
    CHECK(t3[0] == 1.0);
    CHECK(t3[29] == 1.0);
}

TEST_CASE("config errors carry line context")
{
    CHECK_THROWS_AS(parse_config_string("array:\n  elements: 0\n"), ValidationError);
    try
    {
        parse_config_string("mode: phased\narray:\n  elemnts: 30\n", "bad.yaml");
        FAIL("expected a validation error");
    }
    catch (const ValidationError &e)
    {
        const std::string msg = e.what();
        CHECK(msg.find("bad.yaml:3") != std::string::npos);
        CHECK(msg.find("elemnts") != std::string::npos);
    }
    try
    {
        parse_config_string("mode: phased\nsteering:\n  theta_scan: north\n", "bad.yaml");
        FAIL("expected a validation error");
    }
    catch (const ValidationError &e)
    {
        CHECK(std::string(e.what()).find("bad.yaml:3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_config_string("mode: warp\n"), ValidationError);
    CHECK_THROWS_AS(parse_config_string("mode: phased\nxi:\n  source: table2\n"), ValidationError);
    CHECK_THROWS_AS(parse_config_string("mode: beamformer\nxi:\n  source: list\n  values: [0.5]\n"),
                    ValidationError);
    CHECK_THROWS_AS(parse_config_string("mode: sweep\n"), ValidationError);
    CHECK_THROWS_AS(parse_config_string("mode: phased\npulse:\n  rise_fall: 0.1\n"), ValidationError);
    CHECK_THROWS_AS(parse_config_string("checks:\n  - metric: eta\n"), ValidationError);
    CHECK_THROWS_AS(parse_config_string("mode: [phased\n"), ValidationError);
    CHECK_THROWS_AS(parse_config("/nonexistent/ssbtma.yaml"), IoError);
}

TEST_CASE("comments are accepted")
{
    const auto s = parse_config_string("# header\nmode: beamformer # trailing\nxi:\n  source: table3\n");
    CHECK(s.xi_source == XiSource::Table3);
}

TEST_CASE("serialize and parse round trip on random scenarios")
{
    std::mt19937 rng(41);
    for (int trial = 0; trial < 200; ++trial)
    {
        const auto s = random_scenario(rng);
        REQUIRE_NOTHROW(s.validate());
        const auto text = serialize(s);
        CAPTURE(text);
        CHECK(parse_config_string(text) == s);
    }
    for (const auto &name : preset_names())
        CHECK(parse_config_string(serialize(preset(name))) == preset(name));
}

TEST_CASE("shipped scenario files match the built-in presets")
{
    for (const auto &name : preset_names())
    {
        CAPTURE(name);
        const fs::path file = fs::path(SSBTMA_SOURCE_DIR) / "scenarios" / (name + ".yaml");
        REQUIRE(fs::exists(file));
        CHECK(parse_config(file) == preset(name));
    }
    CHECK_THROWS_AS(preset("fig9"), ValidationError);
}

TEST_CASE("config overrides")
{
    auto s = preset("fig3b");
    set_config_value(s, "array.spacing", "0.4");
    CHECK(s.array.spacing == 0.4);
    set_config_value(s, "steering.theta_scan", "110");
    CHECK(s.theta_scan == 110.0);
    set_config_value(s, "mode", "phased");
    CHECK(s.xi_source == XiSource::AllOnes);
    set_config_value(s, "mode", "optimize");
    CHECK(s.xi_source == XiSource::Optimizer);
    set_config_value(s, "optimizer.seed", "9");
    CHECK(s.optimizer.seed == 9);
    CHECK_THROWS_AS(set_config_value(s, "array.colour", "red"), ValidationError);
    CHECK_THROWS_AS(set_config_value(s, "array..elements", "3"), ValidationError);
    CHECK_THROWS_AS(set_config_value(s, "array.elements", "1"), ValidationError);
    CHECK(s.array.n_elements == 30);

    auto t = Scenario{};
    set_config_values(t, {{"steering.sweep", "[30, 60]"}, {"mode", "sweep"}, {"array.elements", "8"}});
    CHECK(t.mode == Mode::ScanSweep);
    CHECK(t.sweep_angles == std::vector<double>{30.0, 60.0});
    CHECK(t.array.n_elements == 8);
}

TEST_CASE("run writes outputs that agree with library calls")
{
    const auto dir = scratch("run");
    auto s = preset("fig3b");
    s.grid_step = 0.5;
    const auto report = run(s, {false, true, dir.string()});

    REQUIRE(fs::exists(dir / "pattern.csv"));
    REQUIRE(fs::exists(dir / "metrics.json"));
    REQUIRE(fs::exists(dir / "pattern.svg"));
    REQUIRE(fs::exists(dir / "pattern_m1.svg"));
    CHECK(report.checks_passed());

    const auto grid = build_pattern(s.array, steering_delays(s.array, s.theta_scan), s.resolve_xi(), {0.5, {}, {}});
    std::istringstream csv(slurp(dir / "pattern.csv"));
    std::string line;
    std::getline(csv, line);
    CHECK(line == "theta_deg,offset,power_db");
    std::size_t rows = 0;
    std::set<int> offsets;
    while (std::getline(csv, line))
    {
        const auto a = line.find(',');
        const auto b = line.find(',', a + 1);
        double theta = 0.0, power = 0.0;
        int offset = 0;
        std::from_chars(line.data(), line.data() + a, theta);
        std::from_chars(line.data() + a + 1, line.data() + b, offset);
        std::from_chars(line.data() + b + 1, line.data() + line.size(), power);
        const auto i = static_cast<std::size_t>(std::lround(theta / 0.5));
        CHECK(grid.theta_deg[i] == theta);
        CHECK(grid.row(offset)[i] == power);
        offsets.insert(offset);
        ++rows;
    }
    // Offsets whose peak is below the omission level are left out.
    for (std::size_t o = 0; o < grid.offsets.size(); ++o)
    {
        const auto &row = grid.power_db[o];
        const bool kept = *std::max_element(row.begin(), row.end()) >= kCsvOmitBelowDb;
        CHECK(offsets.contains(grid.offsets[o]) == kept);
    }
    CHECK(rows == offsets.size() * grid.theta_deg.size());

    const auto json = nlohmann::json::parse(slurp(dir / "metrics.json"));
    CHECK(json["name"] == "fig3b");
    CHECK(json["metrics"]["sll_db"].get<double>() == side_lobe_level(grid));
    CHECK(json["efficiency"]["eta"].get<double>() == efficiency_report(table2_xi()).eta);
    CHECK(json["checks_passed"] == true);
    CHECK(parse_config_string(json["scenario"].get<std::string>()) == s);
    fs::remove_all(dir);
}

TEST_CASE("unwritable output directory fails before computing")
{
    const auto dir = scratch("blocked");
    fs::create_directories(dir);
    std::ofstream(dir / "file") << "x";
    auto s = preset("fig3a");
    CHECK_THROWS_AS(run(s, {false, true, (dir / "file" / "sub").string()}), IoError);
    fs::remove_all(dir);
}

TEST_CASE("check evaluation")
{
    auto s = preset("fig3a");
    Check missing;
    missing.metric = "no_such_metric";
    missing.max = 0.0;
    s.checks.push_back(missing);
    const auto r = run(s, {true, false, {}});
    REQUIRE(r.checks.size() == 7);
    CHECK_FALSE(r.checks.back().value.has_value());
    CHECK_FALSE(r.checks.back().passed);
    CHECK_FALSE(r.checks_passed());
    // Efficiency-only runs skip the pattern metrics.
    CHECK_FALSE(r.checks[0].value.has_value());
    CHECK(r.checks[3].passed);
    CHECK(r.artifacts.empty());
}

TEST_CASE("pulse, sweep and optimize runs")
{
    const auto dir = scratch("modes");
    Scenario pulse;
    pulse.mode = Mode::PulseDebug;
    pulse.pulse.rise_fall = 0.06;
    const auto p = run(pulse, {false, true, (dir / "pulse").string()});
    CHECK(p.values.at("pulse.max_quadrature_error") < 1e-6);
    CHECK(fs::exists(dir / "pulse" / "waveform.csv"));
    CHECK(fs::exists(dir / "pulse" / "spectrum.csv"));

    auto sweep = preset("fig5");
    sweep.array = ArrayConfig::uniform(10);
    sweep.xi_source = XiSource::AllOnes;
    sweep.checks.clear();
    const auto w = run(sweep, {false, true, (dir / "sweep").string()});
    CHECK(w.sweep.size() == 7);
    CHECK(fs::exists(dir / "sweep" / "sweep.csv"));
    CHECK(w.values.at("sweep.hpbw_widening_deg") > 0.0);

    Scenario opt;
    opt.mode = Mode::Optimize;
    opt.xi_source = XiSource::Optimizer;
    opt.array = ArrayConfig::uniform(8);
    opt.optimizer.iters_per_temp = 5;
    opt.optimizer.cooling_rate = 0.3;
    const auto o = run(opt, {false, true, (dir / "opt").string()});
    REQUIRE(o.optimizer.has_value());
    CHECK(o.xi == o.optimizer->xi);
    CHECK(fs::exists(dir / "opt" / "xi.csv"));
    CHECK(fs::exists(dir / "opt" / "cost_trace.csv"));
    fs::remove_all(dir);
}
