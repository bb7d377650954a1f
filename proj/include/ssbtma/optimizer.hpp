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

#ifndef SSBTMA_OPTIMIZER_HPP
#define SSBTMA_OPTIMIZER_HPP

#include "ssbtma/harmonic.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ssbtma
{
    inline constexpr double kMinDutyCycle = 0.01;

    struct OptimizerConfig
    {
        double sll_target = -17.0;         // dB, offset +1 pattern
        double harmonic_threshold = -30.0; // dB, k != 0 content relative to the main beam
        bool symmetric = true;             // xi_n == xi_{N-1-n}
        std::uint64_t seed = 1;

        double initial_temp = 1.0;
        double cooling_rate = 0.95;
        int iters_per_temp = 200;
        double min_temp = 1e-4;
        double step_size = 0.05;

        double weight_sll = 10.0;
        double weight_harmonic = 10.0;
        double weight_efficiency = 1.0;

        // Cost evaluation runs on a coarse grid and a short k truncation; final metrics use the
        // fine pattern.
        double search_grid_step = 0.2;
        int search_k_max = 5;

        std::vector<double> initial_xi; // empty: all ones

        void validate() const;

        bool operator==(const OptimizerConfig &) const = default;
    };

    struct CostBreakdown
    {
        double sll_db = 0.0;
        double harmonic_db = 0.0;
        double sll_penalty = 0.0;
        double harmonic_penalty = 0.0;
        double efficiency_term = 0.0;
        double total = 0.0;

        bool feasible() const { return sll_penalty == 0.0 && harmonic_penalty == 0.0; }
    };

    /// Broadside evaluator for the annealing cost. Steering only relabels angles, so the search runs
    /// with D_n = 0. Uses the factorization F_m(theta) = sum_k L_{m-k} G_k(theta), where G_k is the array
    /// factor of the k-th amplitude harmonic and L_p is the shared stair-step line.
    class CostEvaluator
    {
    public:
        CostEvaluator(const ArrayConfig &config, const OptimizerConfig &options);

        CostBreakdown evaluate(std::span<const double> xi) const;

    private:
        ArrayConfig config_;
        OptimizerConfig options_;
        std::vector<double> cos_table_; // [theta][n]
        std::vector<double> sin_table_;
        std::size_t n_theta_ = 0;
        std::vector<std::pair<int, cplx>> lines_; // signed pulse order -> normalized line
        std::vector<int> offsets_;
        std::vector<bool> pulse_offset_;
    };

    /// w_sll * max(0, SLL - target)^2 + w_h * max(0, H - threshold)^2 + w_eta * (1 - mean xi).
    double cost(std::span<const double> xi, const ArrayConfig &config, const OptimizerConfig &options);

    struct OptimizerResult
    {
        std::vector<double> xi;
        double achieved_sll = 0.0;          // fine grid, default truncation
        double achieved_harmonic_max = 0.0; // fine grid, default truncation
        double best_cost = 0.0;
        std::vector<double> cost_trace;    // best-so-far cost after each iteration (index 0: initial)
        std::vector<double> current_trace; // cost of the chain state after each iteration
        std::size_t iterations = 0;
        bool converged = false; // search-grid targets met by the best state
        std::uint64_t seed_used = 0;
    };

    /// Simulated annealing over the duty cycles: one (pair of) xi perturbed by uniform(-step, step) per
    /// move, clamped to [0.01, 1], Metropolis acceptance, geometric cooling. Deterministic per seed.
    OptimizerResult anneal(const ArrayConfig &config, const OptimizerConfig &options);
}

#endif
