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


#include "plot.hpp"
#include "ssbtma/errors.hpp"
#include "ssbtma/scenario.hpp"

#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#ifndef SSBTMA_VERSION_STRING
#define SSBTMA_VERSION_STRING "0.0.0"
#endif

namespace ssbtma
{
    namespace fs = std::filesystem;

    namespace
    {
        constexpr double kPlotFloorDb = -40.0;
        constexpr std::size_t kWaveformSamples = 1024;

        std::string shortest(double v)
        {
            char buf[64];
            const auto res = std::to_chars(buf, buf + sizeof buf, v);
            return std::string(buf, res.ptr);
        }

        void prepare_output(const fs::path &dir)
        {
            std::error_code ec;
            fs::create_directories(dir, ec);
            if (ec)
                throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());
            const auto probe = dir / ".ssbtma_probe";
            {
                std::ofstream f(probe);
                if (!f || !(f << "ok") || !f.flush())
                    throw IoError("output directory '" + dir.string() + "' is not writable");
            }
            fs::remove(probe, ec);
        }

        class Writer
        {
        public:
            Writer(fs::path dir, RunReport &report) : dir_(std::move(dir)), report_(report) {}

            void write(const std::string &key, const std::string &file, const std::string &content)
            {
                const auto path = dir_ / file;
                std::ofstream out(path, std::ios::binary);
                if (!out || !(out << content) || !out.flush())
                    throw IoError("cannot write '" + path.string() + "'");
                report_.artifacts[key] = path.string();
            }

        private:
            fs::path dir_;
            RunReport &report_;
        };

        std::string pattern_csv(const PatternGrid &grid)
        {
            std::string out = "theta_deg,offset,power_db\n";
            for (std::size_t o = 0; o < grid.offsets.size(); ++o)
            {
                const auto &row = grid.power_db[o];
                if (*std::max_element(row.begin(), row.end()) < kCsvOmitBelowDb)
                    continue;
                const std::string offset = std::to_string(grid.offsets[o]);
                for (std::size_t i = 0; i < row.size(); ++i)
                {
                    out += shortest(grid.theta_deg[i]);
                    out += ',';
                    out += offset;
                    out += ',';
                    out += shortest(row[i]);
                    out += '\n';
                }
            }
            return out;
        }

        std::string offset_label(int m)
        {
            return (m > 0 ? "+" : "") + std::to_string(m);
        }

        void write_pattern_plots(Writer &writer, const PatternGrid &grid, const std::string &name)
        {
            std::vector<plot::Series> overlay;
            for (std::size_t o = 0; o < grid.offsets.size(); ++o)
            {
                const auto &row = grid.power_db[o];
                if (*std::max_element(row.begin(), row.end()) < kPlotFloorDb)
                    continue;
                const int m = grid.offsets[o];
                plot::Series s{"m = " + offset_label(m), grid.theta_deg, row};
                plot::Axes axes;
                axes.title = name + ": harmonic " + offset_label(m);
                axes.x_label = "theta (deg)";
                axes.y_label = "normalized power (dB)";
                axes.y_min = kPlotFloorDb;
                writer.write("pattern_svg[" + std::to_string(m) + "]", "pattern_m" + std::to_string(m) + ".svg",
                             plot::line_chart(axes, {s}));
                overlay.push_back(std::move(s));
            }
            plot::Axes axes;
            axes.title = name + ": harmonic patterns";
            axes.x_label = "theta (deg)";
            axes.y_label = "normalized power (dB)";
            axes.y_min = kPlotFloorDb;
            writer.write("pattern_svg", "pattern.svg", plot::line_chart(axes, overlay));
        }

        void put_pattern_values(RunReport &report, const PatternMetrics &m)
        {
            report.values["sll_db"] = m.sll_db;
            report.values["hpbw_deg"] = m.hpbw_deg;
            report.values["peak_angle_deg"] = m.peak_angle_deg;
            report.values["max_unwanted_db"] = m.max_unwanted_db;
            report.values["max_am_harmonic_db"] = m.max_am_harmonic_db;
            for (const auto &[offset, level] : m.harmonic_peaks_db)
                report.values["harmonic_peak_db[" + std::to_string(offset) + "]"] = level;
        }

        void put_efficiency_values(RunReport &report, const EfficiencyReport &e, const std::string &prefix)
        {
            report.values[prefix + "eta"] = e.eta;
            report.values[prefix + "eta_tma"] = e.eta_tma;
            report.values[prefix + "eta_bfn"] = e.eta_bfn;
            report.values[prefix + "eta_db"] = e.eta_db();
            report.values[prefix + "eta_tma_db"] = e.eta_tma_db();
            report.values[prefix + "eta_bfn_db"] = e.eta_bfn_db();
            report.values[prefix + "p_useful"] = e.p_useful;
            report.values[prefix + "p_radiated"] = e.p_radiated;
            report.values[prefix + "p_static"] = e.p_static;
        }

        void compute_efficiency(RunReport &report)
        {
            const auto &s = report.scenario;
            report.efficiency_numeric = efficiency_report_numeric(report.xi, s.pulse, s.array.tau);
            // The closed form assumes ideal pulses and mirror cancellation.
            if (s.pulse.ideal() && s.array.cancels_mirror())
                report.efficiency = efficiency_report(report.xi);
            else
                report.efficiency = report.efficiency_numeric;
            put_efficiency_values(report, *report.efficiency, "");
            put_efficiency_values(report, *report.efficiency_numeric, "numeric.");
        }

        PatternOptions pattern_options(const Scenario &s)
        {
            return PatternOptions{s.grid_step, s.truncation, s.pulse};
        }

        void run_pattern(RunReport &report, Writer *writer)
        {
            const auto &s = report.scenario;
            const auto grid =
                build_pattern(s.array, steering_delays(s.array, s.theta_scan), report.xi, pattern_options(s));
            report.metrics = pattern_metrics(grid, s.theta_scan);
            put_pattern_values(report, *report.metrics);
            if (writer)
            {
                writer->write("pattern_csv", "pattern.csv", pattern_csv(grid));
                write_pattern_plots(*writer, grid, s.name);
            }
        }

        void run_sweep(RunReport &report, Writer *writer)
        {
            const auto &s = report.scenario;
            std::vector<plot::Series> main_beams;
            for (double angle : s.sweep_angles)
            {
                const auto grid =
                    build_pattern(s.array, steering_delays(s.array, angle), report.xi, pattern_options(s));
                report.sweep.push_back(pattern_metrics(grid, angle));
                main_beams.push_back({"theta_s = " + shortest(angle), grid.theta_deg, grid.row(1)});
            }

            double peak_error = 0.0;
            double unwanted_lo = std::numeric_limits<double>::infinity();
            double unwanted_hi = -std::numeric_limits<double>::infinity();
            const PatternMetrics *centre = nullptr;
            const PatternMetrics *edge = nullptr;
            for (const auto &m : report.sweep)
            {
                peak_error = std::max(peak_error, std::abs(m.peak_angle_deg - m.theta_scan_deg));
                unwanted_lo = std::min(unwanted_lo, m.max_unwanted_db);
                unwanted_hi = std::max(unwanted_hi, m.max_unwanted_db);
                const double off = std::abs(m.theta_scan_deg - 90.0);
                if (!centre || off < std::abs(centre->theta_scan_deg - 90.0))
                    centre = &m;
                if (!edge || off > std::abs(edge->theta_scan_deg - 90.0))
                    edge = &m;
                const std::string key = "sweep[" + shortest(m.theta_scan_deg) + "].";
                report.values[key + "peak_angle_deg"] = m.peak_angle_deg;
                report.values[key + "sll_db"] = m.sll_db;
                report.values[key + "hpbw_deg"] = m.hpbw_deg;
                report.values[key + "max_unwanted_db"] = m.max_unwanted_db;
            }
            report.values["sweep.max_peak_error_deg"] = peak_error;
            report.values["sweep.unwanted_spread_db"] = unwanted_hi - unwanted_lo;
            report.values["sweep.hpbw_widening_deg"] = edge->hpbw_deg - centre->hpbw_deg;

            if (writer)
            {
                std::string csv = "theta_scan_deg,peak_angle_deg,sll_db,hpbw_deg,max_unwanted_db,max_am_harmonic_db\n";
                for (const auto &m : report.sweep)
                    csv += shortest(m.theta_scan_deg) + ',' + shortest(m.peak_angle_deg) + ',' + shortest(m.sll_db) +
                           ',' + shortest(m.hpbw_deg) + ',' + shortest(m.max_unwanted_db) + ',' +
                           shortest(m.max_am_harmonic_db) + '\n';
                writer->write("sweep_csv", "sweep.csv", csv);
                plot::Axes axes;
                axes.title = s.name + ": harmonic +1 across steering angles";
                axes.x_label = "theta (deg)";
                axes.y_label = "normalized power (dB)";
                axes.y_min = kPlotFloorDb;
                writer->write("sweep_svg", "sweep.svg", plot::line_chart(axes, main_beams));
            }
        }

        void run_pulse(RunReport &report, Writer *writer)
        {
            const auto &s = report.scenario;
            const int q_max = s.truncation.q_max;
            const std::size_t samples =
                std::max(kDefaultQuadratureSamples, static_cast<std::size_t>(64) * static_cast<std::size_t>(q_max));

            PulseSpec ideal;
            PulseSpec ramped;
            ramped.kind = PulseKind::TrapezoidStairStep;
            ramped.rise_fall = s.pulse.rise_fall;
            ramped.alignment = s.pulse.alignment;

            const auto quad_ideal = quadrature_spectrum(ideal, q_max, samples);
            const auto quad_ramped = quadrature_spectrum(ramped, q_max, samples);
            double max_err = 0.0;
            std::string csv = "order,closed_re,closed_im,quadrature_re,quadrature_im,ramped_re,ramped_im,"
                              "ramped_quadrature_re,ramped_quadrature_im\n";
            for (std::size_t i = 0; i < quad_ideal.size(); ++i)
            {
                const int q = quad_ideal[i].order;
                const cplx closed = analytic_coefficient(ideal, q);
                const cplx ramp = analytic_coefficient(ramped, q);
                max_err = std::max({max_err, std::abs(closed - quad_ideal[i].coefficient),
                                    std::abs(ramp - quad_ramped[i].coefficient)});
                csv += std::to_string(q) + ',' + shortest(closed.real()) + ',' + shortest(closed.imag()) + ',' +
                       shortest(quad_ideal[i].coefficient.real()) + ',' + shortest(quad_ideal[i].coefficient.imag()) +
                       ',' + shortest(ramp.real()) + ',' + shortest(ramp.imag()) + ',' +
                       shortest(quad_ramped[i].coefficient.real()) + ',' +
                       shortest(quad_ramped[i].coefficient.imag()) + '\n';
            }
            report.values["pulse.max_quadrature_error"] = max_err;

            if (!writer)
                return;
            PulseSpec two_state, tri_state;
            two_state.kind = PulseKind::TwoStateSquare;
            tri_state.kind = PulseKind::TriStateSquare;
            std::string wave = "t,u,v,w,w_ramped\n";
            plot::Series su{"u", {}, {}}, sv{"v", {}, {}}, sw{"w", {}, {}}, sr{"w ramped", {}, {}};
            for (std::size_t i = 0; i < kWaveformSamples; ++i)
            {
                const double t = static_cast<double>(i) / static_cast<double>(kWaveformSamples);
                const double u = sample_waveform(two_state, t);
                const double v = sample_waveform(tri_state, t);
                const double w = sample_waveform(ideal, t);
                const double r = sample_waveform(ramped, t);
                wave += shortest(t) + ',' + shortest(u) + ',' + shortest(v) + ',' + shortest(w) + ',' + shortest(r) +
                        '\n';
                for (auto *series : {&su, &sv, &sw, &sr})
                    series->x.push_back(t);
                su.y.push_back(u);
                sv.y.push_back(v);
                sw.y.push_back(w);
                sr.y.push_back(r);
            }
            writer->write("waveform_csv", "waveform.csv", wave);
            writer->write("spectrum_csv", "spectrum.csv", csv);
            plot::Axes axes;
            axes.title = s.name + ": switching waveforms";
            axes.x_label = "t / T0";
            axes.y_label = "level";
            axes.x_min = 0.0;
            axes.x_max = 1.0;
            axes.x_tick = 0.125;
            axes.y_min = -2.5;
            axes.y_max = 2.5;
            axes.y_tick = 0.5;
            writer->write("waveform_svg", "waveform.svg", plot::line_chart(axes, {su, sv, sw, sr}));
        }

        void run_optimizer(RunReport &report, Writer *writer)
        {
            const auto &s = report.scenario;
            report.optimizer = anneal(s.array, s.optimizer);
            const auto &r = *report.optimizer;
            report.xi = r.xi;
            report.values["optimizer.achieved_sll"] = r.achieved_sll;
            report.values["optimizer.achieved_harmonic_max"] = r.achieved_harmonic_max;
            report.values["optimizer.best_cost"] = r.best_cost;
            report.values["optimizer.iterations"] = static_cast<double>(r.iterations);
            report.values["optimizer.converged"] = r.converged ? 1.0 : 0.0;
            if (!writer)
                return;
            std::string xi_csv = "element,xi\n";
            for (std::size_t n = 0; n < r.xi.size(); ++n)
                xi_csv += std::to_string(n) + ',' + shortest(r.xi[n]) + '\n';
            writer->write("xi_csv", "xi.csv", xi_csv);
            std::string trace = "iteration,best_cost,current_cost\n";
            for (std::size_t i = 0; i < r.cost_trace.size(); ++i)
                trace += std::to_string(i) + ',' + shortest(r.cost_trace[i]) + ',' + shortest(r.current_trace[i]) +
                         '\n';
            writer->write("cost_trace_csv", "cost_trace.csv", trace);
        }

        CheckOutcome evaluate(const Check &check, const std::map<std::string, double> &values)
        {
            CheckOutcome out;
            out.check = check;
            const auto it = values.find(check.metric);
            if (it == values.end())
                return out;
            const double v = it->second;
            out.value = v;
            bool ok = std::isfinite(v);
            if (check.target && check.tolerance)
                ok = ok && std::abs(v - *check.target) <= *check.tolerance;
            if (check.min)
                ok = ok && v >= *check.min;
            if (check.max)
                ok = ok && v <= *check.max;
            out.passed = ok;
            return out;
        }

        nlohmann::json metrics_json(const PatternMetrics &m)
        {
            nlohmann::json peaks = nlohmann::json::object();
            for (const auto &[offset, level] : m.harmonic_peaks_db)
                peaks[std::to_string(offset)] = level;
            return {{"theta_scan_deg", m.theta_scan_deg},
                    {"sll_db", m.sll_db},
                    {"hpbw_deg", m.hpbw_deg},
                    {"peak_angle_deg", m.peak_angle_deg},
                    {"max_unwanted_db", m.max_unwanted_db},
                    {"max_am_harmonic_db", m.max_am_harmonic_db},
                    {"harmonic_peaks_db", peaks}};
        }

        nlohmann::json efficiency_json(const EfficiencyReport &e)
        {
            return {{"p_useful", e.p_useful}, {"p_radiated", e.p_radiated}, {"p_static", e.p_static},
                    {"eta_tma", e.eta_tma},   {"eta_bfn", e.eta_bfn},       {"eta", e.eta},
                    {"eta_tma_db", e.eta_tma_db()}, {"eta_bfn_db", e.eta_bfn_db()}, {"eta_db", e.eta_db()}};
        }
    }

    std::string_view version()
    {
        return SSBTMA_VERSION_STRING;
    }

    bool RunReport::checks_passed() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome &c) { return c.passed; });
    }

    std::string RunReport::to_json() const
    {
        nlohmann::json j;
        j["version"] = version;
        j["name"] = scenario.name;
        j["mode"] = std::string(ssbtma::to_string(scenario.mode));
        j["scenario"] = serialize(scenario);
        j["xi"] = xi;
        if (metrics)
            j["metrics"] = metrics_json(*metrics);
        if (!sweep.empty())
        {
            j["sweep"] = nlohmann::json::array();
            for (const auto &m : sweep)
                j["sweep"].push_back(metrics_json(m));
        }
        if (efficiency)
            j["efficiency"] = efficiency_json(*efficiency);
        if (efficiency_numeric)
            j["efficiency_numeric"] = efficiency_json(*efficiency_numeric);
        if (optimizer)
            j["optimizer"] = {{"xi", optimizer->xi},
                              {"achieved_sll", optimizer->achieved_sll},
                              {"achieved_harmonic_max", optimizer->achieved_harmonic_max},
                              {"best_cost", optimizer->best_cost},
                              {"iterations", optimizer->iterations},
                              {"converged", optimizer->converged},
                              {"seed", optimizer->seed_used}};
        j["values"] = values;
        j["checks"] = nlohmann::json::array();
        for (const auto &c : checks)
        {
            nlohmann::json item{{"metric", c.check.metric}, {"passed", c.passed}};
            item["value"] = c.value ? nlohmann::json(*c.value) : nlohmann::json();
            if (c.check.target)
                item["target"] = *c.check.target;
            if (c.check.tolerance)
                item["tolerance"] = *c.check.tolerance;
            if (c.check.min)
                item["min"] = *c.check.min;
            if (c.check.max)
                item["max"] = *c.check.max;
            j["checks"].push_back(item);
        }
        j["checks_passed"] = checks_passed();
        j["artifacts"] = artifacts;
        return j.dump(2) + "\n";
    }

    RunReport run(const Scenario &scenario, const RunOptions &options)
    {
        scenario.validate();
        RunReport report;
        report.scenario = scenario;
        report.version = std::string(version());

        const fs::path dir = options.output_dir.value_or(scenario.output_dir);
        std::optional<Writer> writer;
        if (options.write_files)
        {
            prepare_output(dir);
            writer.emplace(dir, report);
        }
        Writer *w = writer ? &*writer : nullptr;

        if (scenario.mode == Mode::Optimize)
            run_optimizer(report, options.efficiency_only ? nullptr : w);
        else
            report.xi = scenario.resolve_xi();

        if (scenario.mode != Mode::PulseDebug)
            compute_efficiency(report);

        if (!options.efficiency_only)
        {
            switch (scenario.mode)
            {
            case Mode::ScanSweep:
                run_sweep(report, w);
                break;
            case Mode::PulseDebug:
                run_pulse(report, w);
                break;
            default:
                run_pattern(report, w);
            }
        }

        for (const auto &check : scenario.checks)
            report.checks.push_back(evaluate(check, report.values));

        if (w)
        {
            report.artifacts["metrics_json"] = (dir / "metrics.json").string();
            w->write("metrics_json", "metrics.json", report.to_json());
        }
        return report;
    }
}
