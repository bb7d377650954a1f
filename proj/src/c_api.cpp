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


#include "ssbtma/ssbtma.h"

#include "ssbtma/efficiency.hpp"
#include "ssbtma/errors.hpp"
#include "ssbtma/optimizer.hpp"
#include "ssbtma/pattern.hpp"
#include "ssbtma/scenario.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct ssbtma_array
{
    ssbtma::ArrayConfig config;
};

struct ssbtma_pattern
{
    ssbtma::PatternGrid grid;
};

struct ssbtma_optimizer_result
{
    ssbtma::OptimizerResult result;
};

struct ssbtma_scenario
{
    ssbtma::Scenario scenario;
};

struct ssbtma_report
{
    ssbtma::RunReport report;
    std::vector<std::string> artifacts;
};

namespace
{
    thread_local std::string last_error;

    ssbtma_status fail(ssbtma_status status, const char *message)
    {
        last_error = message;
        return status;
    }

    // Runs fn and maps library exceptions onto status codes.
    template <typename Fn>
    ssbtma_status guard(Fn &&fn)
    {
        try
        {
            fn();
            return SSBTMA_OK;
        }
        catch (const ssbtma::ValidationError &e)
        {
            return fail(SSBTMA_ERR_VALIDATION, e.what());
        }
        catch (const ssbtma::DomainError &e)
        {
            return fail(SSBTMA_ERR_DOMAIN, e.what());
        }
        catch (const ssbtma::IoError &e)
        {
            return fail(SSBTMA_ERR_IO, e.what());
        }
        catch (const std::bad_alloc &)
        {
            return fail(SSBTMA_ERR_INTERNAL, "out of memory");
        }
        catch (const std::exception &e)
        {
            return fail(SSBTMA_ERR_INTERNAL, e.what());
        }
        catch (...)
        {
            return fail(SSBTMA_ERR_INTERNAL, "unknown error");
        }
    }

    template <typename T, typename U>
    ssbtma_status copy_out(const std::vector<T> &values, U *out, size_t capacity, size_t *written)
    {
        if (written)
            *written = values.size();
        if (values.size() > capacity)
            return fail(SSBTMA_ERR_BUFFER, ("buffer holds " + std::to_string(capacity) + " values, " +
                                            std::to_string(values.size()) + " needed")
                                               .c_str());
        if (!values.empty() && !out)
            return fail(SSBTMA_ERR_NULL, "output buffer is NULL");
        std::copy(values.begin(), values.end(), out);
        return SSBTMA_OK;
    }

    char *duplicate(const std::string &text)
    {
        char *copy = static_cast<char *>(std::malloc(text.size() + 1));
        if (!copy)
            throw std::bad_alloc();
        std::memcpy(copy, text.c_str(), text.size() + 1);
        return copy;
    }

    ssbtma::PulseKind to_kind(int kind)
    {
        if (kind < SSBTMA_PULSE_TWO_STATE || kind > SSBTMA_PULSE_TRAPEZOID)
            throw ssbtma::ValidationError("unknown pulse kind " + std::to_string(kind));
        return static_cast<ssbtma::PulseKind>(kind);
    }

    ssbtma::RampAlignment to_alignment(int alignment)
    {
        if (alignment < SSBTMA_RAMP_CENTERED || alignment > SSBTMA_RAMP_TRAILING)
            throw ssbtma::ValidationError("unknown ramp alignment " + std::to_string(alignment));
        return static_cast<ssbtma::RampAlignment>(alignment);
    }

    ssbtma::PulseSpec to_spec(const ssbtma_pulse_spec &s)
    {
        ssbtma::PulseSpec spec;
        spec.kind = to_kind(s.kind);
        spec.period = s.period;
        spec.delay = s.delay;
        spec.duty = s.duty;
        spec.rise_fall = s.rise_fall;
        spec.alignment = to_alignment(s.alignment);
        spec.validate();
        return spec;
    }

    void from_report(const ssbtma::EfficiencyReport &r, ssbtma_efficiency *out)
    {
        *out = {r.p_useful, r.p_radiated, r.p_static, r.eta_tma, r.eta_bfn, r.eta};
    }

    ssbtma::OptimizerConfig to_config(const ssbtma_optimizer_config &c)
    {
        ssbtma::OptimizerConfig o;
        o.sll_target = c.sll_target;
        o.harmonic_threshold = c.harmonic_threshold;
        o.symmetric = c.symmetric != 0;
        o.seed = c.seed;
        o.initial_temp = c.initial_temp;
        o.cooling_rate = c.cooling_rate;
        o.iters_per_temp = c.iters_per_temp;
        o.min_temp = c.min_temp;
        o.step_size = c.step_size;
        o.weight_sll = c.weight_sll;
        o.weight_harmonic = c.weight_harmonic;
        o.weight_efficiency = c.weight_efficiency;
        o.search_grid_step = c.search_grid_step;
        o.search_k_max = c.search_k_max;
        if (c.initial_xi_len > 0)
        {
            if (!c.initial_xi)
                throw ssbtma::ValidationError("initial_xi is NULL but initial_xi_len > 0");
            o.initial_xi.assign(c.initial_xi, c.initial_xi + c.initial_xi_len);
        }
        return o;
    }

    std::vector<double> to_vector(const double *xi, size_t n)
    {
        if (n > 0 && !xi)
            throw ssbtma::ValidationError("duty-cycle pointer is NULL");
        return std::vector<double>(xi, xi + n);
    }
}

#define SSBTMA_REQUIRE(ptr)                                                                                            \
    do                                                                                                                 \
    {                                                                                                                  \
        if (!(ptr))                                                                                                    \
            return fail(SSBTMA_ERR_NULL, #ptr " is NULL");                                                             \
    } while (0)

extern "C" {

const char *ssbtma_version(void)
{
    return SSBTMA_VERSION_STRING;
}

const char *ssbtma_status_name(ssbtma_status status)
{
    switch (status)
    {
    case SSBTMA_OK:
        return "ok";
    case SSBTMA_ERR_VALIDATION:
        return "validation error";
    case SSBTMA_ERR_DOMAIN:
        return "domain error";
    case SSBTMA_ERR_IO:
        return "i/o error";
    case SSBTMA_ERR_NULL:
        return "null pointer";
    case SSBTMA_ERR_BUFFER:
        return "buffer too small";
    case SSBTMA_ERR_NOT_FOUND:
        return "not found";
    case SSBTMA_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

const char *ssbtma_last_error(void)
{
    return last_error.c_str();
}

void ssbtma_string_free(char *text)
{
    std::free(text);
}

void ssbtma_pulse_spec_default(ssbtma_pulse_spec *spec)
{
    if (spec)
        *spec = {SSBTMA_PULSE_STAIR_STEP, 1.0, 0.0, 1.0, 0.0, SSBTMA_RAMP_CENTERED};
}

ssbtma_status ssbtma_pulse_sample(const ssbtma_pulse_spec *spec, double t, double *level)
{
    SSBTMA_REQUIRE(spec);
    SSBTMA_REQUIRE(level);
    return guard([&] { *level = ssbtma::sample_waveform(to_spec(*spec), t); });
}

ssbtma_status ssbtma_pulse_coefficient(const ssbtma_pulse_spec *spec, int order, double *re, double *im)
{
    SSBTMA_REQUIRE(spec);
    SSBTMA_REQUIRE(re);
    SSBTMA_REQUIRE(im);
    return guard([&] {
        const auto c = ssbtma::analytic_coefficient(to_spec(*spec), order);
        *re = c.real();
        *im = c.imag();
    });
}

ssbtma_status ssbtma_pulse_quadrature(const ssbtma_pulse_spec *spec, int order, size_t samples, double *re,
                                      double *im)
{
    SSBTMA_REQUIRE(spec);
    SSBTMA_REQUIRE(re);
    SSBTMA_REQUIRE(im);
    return guard([&] {
        const auto c = ssbtma::quadrature_coefficient(to_spec(*spec), order,
                                                      samples ? samples : ssbtma::kDefaultQuadratureSamples);
        *re = c.real();
        *im = c.imag();
    });
}

int ssbtma_in_upsilon(int q)
{
    return ssbtma::in_upsilon(q) ? 1 : 0;
}

int ssbtma_in_upsilon1(int q)
{
    return ssbtma::in_upsilon1(q) ? 1 : 0;
}

int ssbtma_in_upsilon2(int q)
{
    return ssbtma::in_upsilon2(q) ? 1 : 0;
}

ssbtma_status ssbtma_polygamma1(double z, double *value)
{
    SSBTMA_REQUIRE(value);
    return guard([&] { *value = ssbtma::polygamma1(z); });
}

ssbtma_status ssbtma_a0_constant(int method, long long q_max, double *value)
{
    SSBTMA_REQUIRE(value);
    return guard([&] {
        if (method != SSBTMA_A0_POLYGAMMA && method != SSBTMA_A0_DIRECT_SUM)
            throw ssbtma::ValidationError("unknown A0 method " + std::to_string(method));
        *value = ssbtma::a0_constant(static_cast<ssbtma::A0Method>(method), q_max);
    });
}

ssbtma_status ssbtma_efficiency_closed(const double *xi, size_t n, ssbtma_efficiency *out)
{
    SSBTMA_REQUIRE(out);
    return guard([&] { from_report(ssbtma::efficiency_report(to_vector(xi, n)), out); });
}

ssbtma_status ssbtma_efficiency_numeric(const double *xi, size_t n, double rise_fall, int alignment, double tau,
                                        long long k_max, long long q_max, ssbtma_efficiency *out)
{
    SSBTMA_REQUIRE(out);
    return guard([&] {
        ssbtma::NumericTruncation trunc;
        if (k_max > 0)
            trunc.k_max = k_max;
        if (q_max > 0)
            trunc.q_max = q_max;
        const ssbtma::PulseShape shape{rise_fall, to_alignment(alignment)};
        from_report(ssbtma::efficiency_report_numeric(to_vector(xi, n), shape, tau, trunc), out);
    });
}

ssbtma_status ssbtma_array_uniform(size_t n, double spacing, ssbtma_array **out)
{
    SSBTMA_REQUIRE(out);
    *out = nullptr;
    return guard([&] {
        auto config = ssbtma::ArrayConfig::uniform(n, spacing);
        config.validate();
        *out = new ssbtma_array{std::move(config)};
    });
}

ssbtma_status ssbtma_array_from_positions(const double *z, size_t n, ssbtma_array **out)
{
    SSBTMA_REQUIRE(out);
    *out = nullptr;
    return guard([&] {
        ssbtma::ArrayConfig config;
        config.n_elements = n;
        config.positions = to_vector(z, n);
        config.validate();
        *out = new ssbtma_array{std::move(config)};
    });
}

ssbtma_status ssbtma_array_set_tau(ssbtma_array *array, double tau)
{
    SSBTMA_REQUIRE(array);
    return guard([&] {
        auto config = array->config;
        config.tau = tau;
        config.validate();
        array->config = std::move(config);
    });
}

size_t ssbtma_array_size(const ssbtma_array *array)
{
    return array ? array->config.n_elements : 0;
}

void ssbtma_array_free(ssbtma_array *array)
{
    delete array;
}

ssbtma_status ssbtma_steering_delays(const ssbtma_array *array, double theta_scan_deg, double *delays,
                                     size_t capacity, size_t *written)
{
    SSBTMA_REQUIRE(array);
    std::vector<double> d;
    const auto status = guard([&] { d = ssbtma::steering_delays(array->config, theta_scan_deg).delays; });
    if (status != SSBTMA_OK)
        return status;
    return copy_out(d, delays, capacity, written);
}

void ssbtma_pattern_options_default(ssbtma_pattern_options *options)
{
    if (options)
        *options = {ssbtma::kFineGridStepDeg, ssbtma::Truncation{}.k_max, ssbtma::Truncation{}.q_max, 0.0,
                    SSBTMA_RAMP_CENTERED};
}

ssbtma_status ssbtma_pattern_build(const ssbtma_array *array, double theta_scan_deg, const double *xi, size_t n,
                                   const ssbtma_pattern_options *options, ssbtma_pattern **out)
{
    SSBTMA_REQUIRE(array);
    SSBTMA_REQUIRE(out);
    *out = nullptr;
    return guard([&] {
        ssbtma_pattern_options o;
        ssbtma_pattern_options_default(&o);
        if (options)
            o = *options;
        const ssbtma::PatternOptions po{o.grid_step_deg, ssbtma::Truncation{o.k_max, o.q_max},
                                        ssbtma::PulseShape{o.rise_fall, to_alignment(o.alignment)}};
        const auto plan = ssbtma::steering_delays(array->config, theta_scan_deg);
        *out = new ssbtma_pattern{ssbtma::build_pattern(array->config, plan, to_vector(xi, n), po)};
    });
}

size_t ssbtma_pattern_theta_count(const ssbtma_pattern *pattern)
{
    return pattern ? pattern->grid.theta_deg.size() : 0;
}

size_t ssbtma_pattern_offset_count(const ssbtma_pattern *pattern)
{
    return pattern ? pattern->grid.offsets.size() : 0;
}

ssbtma_status ssbtma_pattern_theta(const ssbtma_pattern *pattern, double *out, size_t capacity, size_t *written)
{
    SSBTMA_REQUIRE(pattern);
    return copy_out(pattern->grid.theta_deg, out, capacity, written);
}

ssbtma_status ssbtma_pattern_offsets(const ssbtma_pattern *pattern, int *out, size_t capacity, size_t *written)
{
    SSBTMA_REQUIRE(pattern);
    return copy_out(pattern->grid.offsets, out, capacity, written);
}

ssbtma_status ssbtma_pattern_row(const ssbtma_pattern *pattern, int offset, double *out, size_t capacity,
                                 size_t *written)
{
    SSBTMA_REQUIRE(pattern);
    if (!pattern->grid.has_offset(offset))
        return fail(SSBTMA_ERR_NOT_FOUND, ("no pattern at offset " + std::to_string(offset)).c_str());
    return copy_out(pattern->grid.row(offset), out, capacity, written);
}

ssbtma_status ssbtma_pattern_harmonic_peak(const ssbtma_pattern *pattern, int offset, double *level_db)
{
    SSBTMA_REQUIRE(pattern);
    SSBTMA_REQUIRE(level_db);
    if (!pattern->grid.has_offset(offset))
        return fail(SSBTMA_ERR_NOT_FOUND, ("no pattern at offset " + std::to_string(offset)).c_str());
    const auto &row = pattern->grid.row(offset);
    *level_db = *std::max_element(row.begin(), row.end());
    return SSBTMA_OK;
}

ssbtma_status ssbtma_pattern_side_lobe_level(const ssbtma_pattern *pattern, int offset, double *sll_db)
{
    SSBTMA_REQUIRE(pattern);
    SSBTMA_REQUIRE(sll_db);
    if (!pattern->grid.has_offset(offset))
        return fail(SSBTMA_ERR_NOT_FOUND, ("no pattern at offset " + std::to_string(offset)).c_str());
    return guard([&] { *sll_db = ssbtma::side_lobe_level(pattern->grid, offset); });
}

ssbtma_status ssbtma_pattern_get_metrics(const ssbtma_pattern *pattern, double theta_scan_deg,
                                         ssbtma_pattern_metrics *out)
{
    SSBTMA_REQUIRE(pattern);
    SSBTMA_REQUIRE(out);
    return guard([&] {
        const auto m = ssbtma::pattern_metrics(pattern->grid, theta_scan_deg);
        *out = {m.theta_scan_deg, m.sll_db, m.hpbw_deg, m.peak_angle_deg, m.max_unwanted_db, m.max_am_harmonic_db};
    });
}

void ssbtma_pattern_free(ssbtma_pattern *pattern)
{
    delete pattern;
}

void ssbtma_optimizer_config_default(ssbtma_optimizer_config *config)
{
    if (!config)
        return;
    const ssbtma::OptimizerConfig d;
    *config = {d.sll_target,     d.harmonic_threshold, d.symmetric ? 1 : 0, d.seed,
               d.initial_temp,   d.cooling_rate,       d.iters_per_temp,    d.min_temp,
               d.step_size,      d.weight_sll,         d.weight_harmonic,   d.weight_efficiency,
               d.search_grid_step, d.search_k_max,     nullptr,             0};
}

ssbtma_status ssbtma_cost(const ssbtma_array *array, const ssbtma_optimizer_config *config, const double *xi,
                          size_t n, double *cost)
{
    SSBTMA_REQUIRE(array);
    SSBTMA_REQUIRE(config);
    SSBTMA_REQUIRE(cost);
    return guard([&] { *cost = ssbtma::cost(to_vector(xi, n), array->config, to_config(*config)); });
}

ssbtma_status ssbtma_optimize(const ssbtma_array *array, const ssbtma_optimizer_config *config,
                              ssbtma_optimizer_result **out)
{
    SSBTMA_REQUIRE(array);
    SSBTMA_REQUIRE(config);
    SSBTMA_REQUIRE(out);
    *out = nullptr;
    return guard([&] { *out = new ssbtma_optimizer_result{ssbtma::anneal(array->config, to_config(*config))}; });
}

ssbtma_status ssbtma_optimizer_result_xi(const ssbtma_optimizer_result *result, double *out, size_t capacity,
                                         size_t *written)
{
    SSBTMA_REQUIRE(result);
    return copy_out(result->result.xi, out, capacity, written);
}

ssbtma_status ssbtma_optimizer_result_trace(const ssbtma_optimizer_result *result, double *out, size_t capacity,
                                            size_t *written)
{
    SSBTMA_REQUIRE(result);
    return copy_out(result->result.cost_trace, out, capacity, written);
}

double ssbtma_optimizer_result_sll(const ssbtma_optimizer_result *result)
{
    return result ? result->result.achieved_sll : 0.0;
}

double ssbtma_optimizer_result_harmonic_max(const ssbtma_optimizer_result *result)
{
    return result ? result->result.achieved_harmonic_max : 0.0;
}

double ssbtma_optimizer_result_best_cost(const ssbtma_optimizer_result *result)
{
    return result ? result->result.best_cost : 0.0;
}

size_t ssbtma_optimizer_result_iterations(const ssbtma_optimizer_result *result)
{
    return result ? result->result.iterations : 0;
}

int ssbtma_optimizer_result_converged(const ssbtma_optimizer_result *result)
{
    return result && result->result.converged ? 1 : 0;
}

void ssbtma_optimizer_result_free(ssbtma_optimizer_result *result)
{
    delete result;
}

ssbtma_status ssbtma_scenario_load_file(const char *path, ssbtma_scenario **out)
{
    SSBTMA_REQUIRE(path);
    SSBTMA_REQUIRE(out);
    *out = nullptr;
    return guard([&] {
        auto s = ssbtma::parse_config(path);
        *out = new ssbtma_scenario{std::move(s)};
    });
}

ssbtma_status ssbtma_scenario_load_string(const char *yaml, const char *origin, ssbtma_scenario **out)
{
    SSBTMA_REQUIRE(yaml);
    SSBTMA_REQUIRE(out);
    *out = nullptr;
    return guard([&] {
        auto s = ssbtma::parse_config_string(yaml, origin ? origin : "<string>");
        *out = new ssbtma_scenario{std::move(s)};
    });
}

ssbtma_status ssbtma_scenario_preset(const char *figure, ssbtma_scenario **out)
{
    SSBTMA_REQUIRE(figure);
    SSBTMA_REQUIRE(out);
    *out = nullptr;
    return guard([&] { *out = new ssbtma_scenario{ssbtma::preset(figure)}; });
}

size_t ssbtma_preset_count(void)
{
    return ssbtma::preset_names().size();
}

const char *ssbtma_preset_name(size_t index)
{
    static const std::vector<std::string> names = ssbtma::preset_names();
    return index < names.size() ? names[index].c_str() : nullptr;
}

ssbtma_status ssbtma_scenario_set(ssbtma_scenario *scenario, const char *key, const char *value)
{
    SSBTMA_REQUIRE(scenario);
    SSBTMA_REQUIRE(key);
    SSBTMA_REQUIRE(value);
    return guard([&] {
        auto copy = scenario->scenario;
        ssbtma::set_config_value(copy, key, value);
        scenario->scenario = std::move(copy);
    });
}

ssbtma_status ssbtma_scenario_set_many(ssbtma_scenario *scenario, const char *const *keys,
                                       const char *const *values, size_t n)
{
    SSBTMA_REQUIRE(scenario);
    if (n > 0)
    {
        SSBTMA_REQUIRE(keys);
        SSBTMA_REQUIRE(values);
    }
    return guard([&] {
        std::vector<std::pair<std::string, std::string>> overrides;
        for (size_t i = 0; i < n; ++i)
        {
            if (!keys[i] || !values[i])
                throw ssbtma::ValidationError("override " + std::to_string(i) + " has a NULL key or value");
            overrides.emplace_back(keys[i], values[i]);
        }
        auto copy = scenario->scenario;
        ssbtma::set_config_values(copy, overrides);
        scenario->scenario = std::move(copy);
    });
}

ssbtma_status ssbtma_scenario_serialize(const ssbtma_scenario *scenario, char **yaml)
{
    SSBTMA_REQUIRE(scenario);
    SSBTMA_REQUIRE(yaml);
    *yaml = nullptr;
    return guard([&] { *yaml = duplicate(ssbtma::serialize(scenario->scenario)); });
}

const char *ssbtma_scenario_name(const ssbtma_scenario *scenario)
{
    return scenario ? scenario->scenario.name.c_str() : nullptr;
}

const char *ssbtma_scenario_mode(const ssbtma_scenario *scenario)
{
    if (!scenario)
        return nullptr;
    // to_string returns a view of a literal, so data() is NUL-terminated.
    return ssbtma::to_string(scenario->scenario.mode).data();
}

void ssbtma_scenario_free(ssbtma_scenario *scenario)
{
    delete scenario;
}

void ssbtma_run_options_default(ssbtma_run_options *options)
{
    if (options)
        *options = {0, 1, nullptr};
}

ssbtma_status ssbtma_run(const ssbtma_scenario *scenario, const ssbtma_run_options *options, ssbtma_report **out)
{
    SSBTMA_REQUIRE(scenario);
    SSBTMA_REQUIRE(out);
    *out = nullptr;
    return guard([&] {
        ssbtma::RunOptions o;
        if (options)
        {
            o.efficiency_only = options->efficiency_only != 0;
            o.write_files = options->write_files != 0;
            if (options->output_dir)
                o.output_dir = options->output_dir;
        }
        auto report = ssbtma::run(scenario->scenario, o);
        std::vector<std::string> artifacts;
        for (const auto &[key, path] : report.artifacts)
            artifacts.push_back(path);
        *out = new ssbtma_report{std::move(report), std::move(artifacts)};
    });
}

ssbtma_status ssbtma_report_json(const ssbtma_report *report, char **json)
{
    SSBTMA_REQUIRE(report);
    SSBTMA_REQUIRE(json);
    *json = nullptr;
    return guard([&] { *json = duplicate(report->report.to_json()); });
}

ssbtma_status ssbtma_report_value(const ssbtma_report *report, const char *metric, double *value)
{
    SSBTMA_REQUIRE(report);
    SSBTMA_REQUIRE(metric);
    SSBTMA_REQUIRE(value);
    const auto it = report->report.values.find(metric);
    if (it == report->report.values.end())
        return fail(SSBTMA_ERR_NOT_FOUND, ("no metric named '" + std::string(metric) + "'").c_str());
    *value = it->second;
    return SSBTMA_OK;
}

size_t ssbtma_report_check_count(const ssbtma_report *report)
{
    return report ? report->report.checks.size() : 0;
}

ssbtma_status ssbtma_report_check(const ssbtma_report *report, size_t index, ssbtma_check_result *out)
{
    SSBTMA_REQUIRE(report);
    SSBTMA_REQUIRE(out);
    if (index >= report->report.checks.size())
        return fail(SSBTMA_ERR_NOT_FOUND, "check index out of range");
    const auto &c = report->report.checks[index];
    *out = {c.check.metric.c_str(), c.value ? 1 : 0, c.value.value_or(0.0), c.passed ? 1 : 0};
    return SSBTMA_OK;
}

int ssbtma_report_checks_passed(const ssbtma_report *report)
{
    return report && report->report.checks_passed() ? 1 : 0;
}

size_t ssbtma_report_artifact_count(const ssbtma_report *report)
{
    return report ? report->artifacts.size() : 0;
}

const char *ssbtma_report_artifact(const ssbtma_report *report, size_t index)
{
    return report && index < report->artifacts.size() ? report->artifacts[index].c_str() : nullptr;
}

void ssbtma_report_free(ssbtma_report *report)
{
    delete report;
}
}
