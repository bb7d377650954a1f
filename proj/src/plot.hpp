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

#ifndef SSBTMA_SRC_PLOT_HPP
#define SSBTMA_SRC_PLOT_HPP

#include <string>
#include <vector>

namespace ssbtma::plot
{
    struct Series
    {
        std::string label;
        std::vector<double> x;
        std::vector<double> y;
    };

    struct Axes
    {
        std::string title;
        std::string x_label;
        std::string y_label;
        double x_min = 0.0;
        double x_max = 180.0;
        double y_min = -40.0;
        double y_max = 0.0;
        double x_tick = 30.0;
        double y_tick = 10.0;
    };

    /// Line chart as a standalone SVG document. Values outside the y range are clipped to it.
    std::string line_chart(const Axes &axes, const std::vector<Series> &series);
}

#endif
