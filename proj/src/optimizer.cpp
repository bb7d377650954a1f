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

#include "ssbtma/optimizer.hpp"
#include "ssbtma/errors.hpp"
#include "ssbtma/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
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

        double excess_squared(double value, double limit)
        {
            const double e = value - limit;
            return e > 0.0 ? e * e : 0.0;
        }
    }

    void OptimizerConfig::validate() const
    {
        if (!(sll_target < 0.0))
            throw ValidationError("sll_target must be negative (dB), got " + std::to_string(sll_target));
        if (!(harmonic_threshold < 0.0))
            throw ValidationError("harmonic_threshold must be negative (dB), got " +
                                  std::to_string(harmonic_threshold));
        if (!(cooling_rate > 0.0 && cooling_rate < 1.0))
            throw ValidationError("cooling_rate must lie in (0, 1), got " + std::to_string(cooling_rate));
        if (!(initial_temp > 0.0) || !(min_temp > 0.0))
            throw ValidationError("annealing temperatures must be positive");
        if (iters_per_temp < 1)
            throw ValidationError("iters_per_temp must be at least 1");
        if (!(step_size >= 0.0 && step_size <= 1.0))
            throw ValidationError("step_size must lie in [0, 1], got " + std::to_string(step_size));
        if (weight_sll < 0.0 || weight_harmonic < 0.0 || weight_efficiency < 0.0)
            throw ValidationError("cost weights must be non-negative");
        if (search_k_max < 0)
            throw ValidationError("search_k_max must be non-negative");
        theta_grid(search_grid_step); // throws on a bad step
        for (double x : initial_xi)
            if (!(x >= kMinDutyCycle && x <= 1.0))
                throw ValidationError("initial duty cycles must lie in [0.01, 1]");
    }

    CostEvaluator::CostEvaluator(const ArrayConfig &config, const OptimizerConfig &options)
        : config_(config), options_(options)
    {
        config_.validate();
        options_.validate();

        const auto theta = theta_grid(options_.search_grid_step);
        const auto z = config_.element_positions();
        n_theta_ = theta.size();
        cos_table_.resize(n_theta_ * z.size());
        sin_table_.resize(n_theta_ * z.size());
        for (std::size_t i = 0; i < n_theta_; ++i)
        {
            const double c = cos_pi(theta[i] / 180.0);
            for (std::size_t n = 0; n < z.size(); ++n)
            {
                const cplx e = unit_phase(-z[n] * c);
                cos_table_[i * z.size() + n] = e.real();
                sin_table_[i * z.size() + n] = e.imag();
            }
        }

        const double norm = excitation_normalization();
        const int q_max = kDefaultQMax;
        for (int p = -q_max; p <= q_max; ++p)
        {
            const cplx w = closed_form_coefficient(PulseKind::StairStep, p);
            const cplx line = norm * w * (1.0 + cplx{0.0, 1.0} * unit_phase(p * config_.tau));
            if (line != cplx{})
                lines_.emplace_back(p, line);
        }
        const int reach = options_.search_k_max + q_max;
        for (int m = -reach; m <= reach; ++m)
        {
            bool reached = false, pulse = false;
            for (const auto &[p, line] : lines_)
            {
                if (std::abs(m - p) <= options_.search_k_max)
                    reached = true;
                if (m == p)
                    pulse = true;
            }
            if (reached)
            {
                offsets_.push_back(m);
                pulse_offset_.push_back(pulse);
            }
        }
    }

    CostBreakdown CostEvaluator::evaluate(std::span<const double> xi) const
    {
        validate_duty_cycles(config_, xi);
        const std::size_t n_el = config_.n_elements;
        const int k_max = options_.search_k_max;
        const std::size_t n_k = 2 * static_cast<std::size_t>(k_max) + 1;

        // G_k(theta) = sum_n C_nk exp(j 2 pi z_n cos theta)
        std::vector<cplx> rect(n_el * n_k);
        for (std::size_t n = 0; n < n_el; ++n)
            for (int k = -k_max; k <= k_max; ++k)
                rect[n * n_k + static_cast<std::size_t>(k + k_max)] = rect_coefficient(xi[n], k);

        std::vector<cplx> g(n_k * n_theta_);
        for (std::size_t kk = 0; kk < n_k; ++kk)
        {
            for (std::size_t i = 0; i < n_theta_; ++i)
            {
                double re = 0.0, im = 0.0;
                const double *ct = &cos_table_[i * n_el];
                const double *st = &sin_table_[i * n_el];
                for (std::size_t n = 0; n < n_el; ++n)
                {
                    const cplx c = rect[n * n_k + kk];
                    re += c.real() * ct[n] - c.imag() * st[n];
                    im += c.real() * st[n] + c.imag() * ct[n];
                }
                g[kk * n_theta_ + i] = {re, im};
            }
        }

        double global_max = 0.0;
        double am_max = 0.0;
        std::vector<double> main_power;
        std::vector<double> power(n_theta_);
        for (std::size_t o = 0; o < offsets_.size(); ++o)
        {
            const int m = offsets_[o];
            std::fill(power.begin(), power.end(), 0.0);
            std::vector<cplx> field(n_theta_);
            for (const auto &[p, line] : lines_)
            {
                const int k = m - p;
                if (std::abs(k) > k_max)
                    continue;
                const cplx *gk = &g[static_cast<std::size_t>(k + k_max) * n_theta_];
                for (std::size_t i = 0; i < n_theta_; ++i)
                    field[i] += line * gk[i];
            }
            double peak = 0.0;
            for (std::size_t i = 0; i < n_theta_; ++i)
            {
                power[i] = std::norm(field[i]);
                peak = std::max(peak, power[i]);
            }
            global_max = std::max(global_max, peak);
            if (m == 1)
                main_power = power;
            else if (!pulse_offset_[o])
                am_max = std::max(am_max, peak);
        }

        std::vector<double> main_db(main_power.size());
        for (std::size_t i = 0; i < main_power.size(); ++i)
            main_db[i] = to_db(global_max > 0.0 ? main_power[i] / global_max : 0.0);

        CostBreakdown b;
        b.sll_db = side_lobe_level(main_db);
        b.harmonic_db = to_db(global_max > 0.0 ? am_max / global_max : 0.0);
        b.sll_penalty = options_.weight_sll * excess_squared(b.sll_db, options_.sll_target);
        b.harmonic_penalty = options_.weight_harmonic * excess_squared(b.harmonic_db, options_.harmonic_threshold);
        double mean = 0.0;
        for (double x : xi)
            mean += x;
        mean /= static_cast<double>(xi.size());
        b.efficiency_term = options_.weight_efficiency * (1.0 - mean);
        b.total = b.sll_penalty + b.harmonic_penalty + b.efficiency_term;
        return b;
    }

    double cost(std::span<const double> xi, const ArrayConfig &config, const OptimizerConfig &options)
    {
        return CostEvaluator(config, options).evaluate(xi).total;
    }

    OptimizerResult anneal(const ArrayConfig &config, const OptimizerConfig &options)
    {
        config.validate();
        options.validate();
        const std::size_t n_el = config.n_elements;

        std::vector<double> xi = options.initial_xi.empty() ? std::vector<double>(n_el, 1.0) : options.initial_xi;
        if (xi.size() != n_el)
            throw ValidationError("initial_xi has " + std::to_string(xi.size()) + " entries for " +
                                  std::to_string(n_el) + " elements");
        if (options.symmetric)
            for (std::size_t n = 0; n < n_el; ++n)
                if (xi[n] != xi[n_el - 1 - n])
                    throw ValidationError("symmetric search needs a symmetric initial_xi");

        const CostEvaluator evaluator(config, options);
        OptimizerResult result;
        result.seed_used = options.seed;

        double current = evaluator.evaluate(xi).total;
        double best = current;
        std::vector<double> best_xi = xi;
        result.cost_trace.push_back(best);
        result.current_trace.push_back(current);

        const bool can_move = options.step_size > 0.0;
        if (can_move && best > 0.0)
        {
            std::mt19937_64 rng(options.seed);
            const std::size_t free_count = options.symmetric ? (n_el + 1) / 2 : n_el;
            std::uniform_int_distribution<std::size_t> pick(0, free_count - 1);
            std::uniform_real_distribution<double> step(-options.step_size, options.step_size);
            std::uniform_real_distribution<double> unit(0.0, 1.0);

            std::vector<double> candidate = xi;
            for (double temp = options.initial_temp; temp > options.min_temp && best > 0.0;
                 temp *= options.cooling_rate)
            {
                for (int it = 0; it < options.iters_per_temp; ++it)
                {
                    const std::size_t i = pick(rng);
                    const double moved = std::clamp(xi[i] + step(rng), kMinDutyCycle, 1.0);
                    const double u = unit(rng);
                    candidate = xi;
                    candidate[i] = moved;
                    if (options.symmetric)
                        candidate[n_el - 1 - i] = moved;

                    const double trial = evaluator.evaluate(candidate).total;
                    const double delta = trial - current;
                    if (delta <= 0.0 || u < std::exp(-delta / temp))
                    {
                        xi.swap(candidate);
                        current = trial;
                        if (current < best)
                        {
                            best = current;
                            best_xi = xi;
                        }
                    }
                    ++result.iterations;
                    result.cost_trace.push_back(best);
                    result.current_trace.push_back(current);
                    if (best == 0.0)
                        break;
                }
            }
        }

        result.xi = best_xi;
        result.best_cost = best;
        result.converged = evaluator.evaluate(best_xi).feasible();

        PatternOptions fine;
        const auto grid = build_pattern(config, SteeringPlan{90.0, {}}, result.xi, fine);
        const auto metrics = pattern_metrics(grid, 90.0);
        result.achieved_sll = metrics.sll_db;
        result.achieved_harmonic_max = metrics.max_am_harmonic_db;
        return result;
    }
}
