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

#ifndef SSBTMA_HARMONIC_HPP
#define SSBTMA_HARMONIC_HPP

#include "ssbtma/pulse.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace ssbtma
{
    /// Linear array on the z axis with isotropic elements. Lengths are in carrier wavelengths.
    struct ArrayConfig
    {
        std::size_t n_elements = 30;
        double spacing = 0.5;          // d / lambda
        std::vector<double> positions; // z_n / lambda; empty means z_n = n * spacing
        double tau = 0.25;             // delay of the quadrature branch, fraction of T0

        static ArrayConfig uniform(std::size_t n, double spacing = 0.5);

        double position(std::size_t n) const;
        std::vector<double> element_positions() const;

        /// N >= 2, positions strictly increasing and sized N, spacing > 0, tau in [0, 1).
        void validate() const;

        /// Mirror-frequency cancellation requires w0 * tau = pi / 2.
        bool cancels_mirror() const { return tau == 0.25; }

        bool operator==(const ArrayConfig &) const = default;
    };

    /// Per-element delays D_n / T0 of the stair-step pulses.
    struct SteeringPlan
    {
        double theta_scan_deg = 90.0;
        std::vector<double> delays;
    };

    /// D_n / T0 = z_n cos(theta_scan) wrapped to [0, 1): the q = +1, k = 0 beam points to theta_scan.
    SteeringPlan steering_delays(const ArrayConfig &config, double theta_scan_deg);

    /// Number of harmonics kept: |k| <= k_max for the amplitude pulse, |q| <= q_max for the stair-step.
    struct Truncation
    {
        int k_max = 20;
        int q_max = kDefaultQMax;

        bool operator==(const Truncation &) const = default;
    };

    /// Stair-step transition model: rise_fall == 0 is the ideal pulse.
    struct PulseShape
    {
        double rise_fall = 0.0;
        RampAlignment alignment = RampAlignment::Centered;

        bool ideal() const { return rise_fall == 0.0; }
        cplx coefficient(int q) const;

        bool operator==(const PulseShape &) const = default;
    };

    enum class Branch
    {
        Plus, // q in upsilon1, radiates at offset k + q
        Minus // q in upsilon2, radiates at offset k - q
    };

    /// One (k, q, branch) contribution: the normalized dynamic excitation of every element.
    struct ExcitationSet
    {
        int k = 0;
        int q = 1;
        Branch branch = Branch::Plus;
        int offset = 1; // harmonic order relative to the carrier, in units of w0
        std::vector<cplx> weights;
    };

    /// One spectral line of w_n(t) + j w_n(t - tau), one value per element.
    struct SpectralLine
    {
        int offset = 0;
        std::vector<cplx> per_element;
    };

    struct CombinedSpectrum
    {
        std::vector<SpectralLine> lines; // every odd offset in [-q_max, q_max], ascending
        bool cancelled = true;           // false when tau != T0/4: mirror lines are not removed

        const SpectralLine *find(int offset) const;
    };

    /// Unnormalized spectrum of w_n(t) + j w_n(t - tau) for the steering delays in plan.
    CombinedSpectrum ssb_combined_spectrum(const ArrayConfig &config, const SteeringPlan &plan, int q_max = kDefaultQMax,
                                           const PulseShape &shape = {});

    /// Scale applied to the combined pulse: 1/sqrt2 per branch and 1/(1 + sqrt2) for the SP4T levels.
    double excitation_normalization();

    /// Normalized dynamic excitations for k and q in upsilon (ideal pulses). Throws DomainError for q
    /// outside upsilon and ValidationError for bad duty cycles.
    ExcitationSet dynamic_excitations(const ArrayConfig &config, const SteeringPlan &plan, std::span<const double> xi,
                                      int k, int q);

    /// F(theta) = sum_n weight_n exp(j 2 pi z_n cos theta), theta in degrees.
    std::vector<cplx> array_factor(const ArrayConfig &config, std::span<const cplx> weights,
                                   std::span<const double> theta_deg);

    /// Precomputed excitation model for one array, steering plan and duty-cycle vector.
    ///
    /// The field at harmonic offset m is the coherent sum of every (k, p) term with k + p = m, where p is
    /// a signed stair-step line (p = q for the Plus branch, p = -q for the Minus branch). Summation order
    /// is fixed: k ascending, then element index.
    class HarmonicModel
    {
    public:
        HarmonicModel(ArrayConfig config, SteeringPlan plan, std::vector<double> xi, Truncation truncation = {},
                      PulseShape shape = {});

        const ArrayConfig &config() const { return config_; }
        const std::vector<double> &xi() const { return xi_; }
        const Truncation &truncation() const { return truncation_; }

        /// Offsets with at least one nonzero element weight, ascending.
        const std::vector<int> &offsets() const { return offsets_; }

        /// Signed stair-step orders that survive the SSB combination (the k = 0 offsets).
        const std::vector<int> &pulse_orders() const { return pulse_orders_; }
        bool is_pulse_order(int offset) const;

        /// Element weights radiating at offset m (zero vector if nothing lands there).
        std::vector<cplx> weights(int offset) const;

        std::vector<cplx> field(int offset, std::span<const double> theta_deg) const;

    private:
        ArrayConfig config_;
        SteeringPlan plan_;
        std::vector<double> xi_;
        Truncation truncation_;
        PulseShape shape_;
        std::map<int, std::vector<cplx>> lines_; // p -> normalized, steered pulse line per element
        std::vector<std::vector<cplx>> rect_;    // [n][k + k_max]
        std::vector<int> pulse_orders_;
        std::vector<int> offsets_;
    };

    /// Coherent sum over all (k, q, branch) with k + q = m (Plus) or k - q = m (Minus).
    std::vector<cplx> composite_offset_field(const ArrayConfig &config, const SteeringPlan &plan,
                                             std::span<const double> xi, int offset, const Truncation &truncation,
                                             std::span<const double> theta_deg, const PulseShape &shape = {});

    /// Throws ValidationError unless every duty cycle is in (0, 1] and the count matches the array.
    void validate_duty_cycles(const ArrayConfig &config, std::span<const double> xi);
}

#endif
