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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace ssbtma::plot
{
    namespace
    {
        constexpr double kWidth = 720.0;
        constexpr double kHeight = 440.0;
        constexpr double kLeft = 70.0;
        constexpr double kRight = 150.0;
        constexpr double kTop = 40.0;
        constexpr double kBottom = 55.0;

        const char *const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                        "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

        std::string escape(const std::string &text)
        {
            std::string out;
            for (char c : text)
            {
                switch (c)
                {
                case '<':
                    out += "&lt;";
                    break;
                case '>':
                    out += "&gt;";
                    break;
                case '&':
                    out += "&amp;";
                    break;
                case '"':
                    out += "&quot;";
                    break;
                default:
                    out += c;
                }
            }
            return out;
        }

        std::string num(double v)
        {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.2f", v);
            return buf;
        }

        std::string tick_label(double v)
        {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%g", v);
            return buf;
        }
    }

    std::string line_chart(const Axes &axes, const std::vector<Series> &series)
    {
        const double plot_w = kWidth - kLeft - kRight;
        const double plot_h = kHeight - kTop - kBottom;
        auto px = [&](double x) { return kLeft + (x - axes.x_min) / (axes.x_max - axes.x_min) * plot_w; };
        auto py = [&](double y) {
            y = std::clamp(y, axes.y_min, axes.y_max);
            return kTop + (axes.y_max - y) / (axes.y_max - axes.y_min) * plot_h;
        };

        std::ostringstream svg;
        svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
            << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
        svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
        svg << "<text x=\"" << num(kLeft + plot_w / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
            << escape(axes.title) << "</text>\n";

        svg << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
        for (double x = axes.x_min; x <= axes.x_max + 1e-9; x += axes.x_tick)
            svg << "<line x1=\"" << num(px(x)) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(px(x)) << "\" y2=\""
                << num(kTop + plot_h) << "\"/>\n";
        for (double y = axes.y_min; y <= axes.y_max + 1e-9; y += axes.y_tick)
            svg << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(py(y)) << "\" x2=\"" << num(kLeft + plot_w)
                << "\" y2=\"" << num(py(y)) << "\"/>\n";
        svg << "</g>\n";

        svg << "<g text-anchor=\"middle\">\n";
        for (double x = axes.x_min; x <= axes.x_max + 1e-9; x += axes.x_tick)
            svg << "<text x=\"" << num(px(x)) << "\" y=\"" << num(kTop + plot_h + 18) << "\">" << tick_label(x)
                << "</text>\n";
        svg << "</g>\n<g text-anchor=\"end\">\n";
        for (double y = axes.y_min; y <= axes.y_max + 1e-9; y += axes.y_tick)
            svg << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(py(y) + 4) << "\">" << tick_label(y)
                << "</text>\n";
        svg << "</g>\n";
        svg << "<text x=\"" << num(kLeft + plot_w / 2) << "\" y=\"" << num(kHeight - 12)
            << "\" text-anchor=\"middle\">" << escape(axes.x_label) << "</text>\n";
        svg << "<text transform=\"translate(18 " << num(kTop + plot_h / 2)
            << ") rotate(-90)\" text-anchor=\"middle\">" << escape(axes.y_label) << "</text>\n";
        svg << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\"" << num(plot_w)
            << "\" height=\"" << num(plot_h) << "\" fill=\"none\" stroke=\"black\"/>\n";

        for (std::size_t s = 0; s < series.size(); ++s)
        {
            const auto &line = series[s];
            const char *colour = kPalette[s % std::size(kPalette)];
            svg << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.2\" points=\"";
            const std::size_t n = std::min(line.x.size(), line.y.size());
            for (std::size_t i = 0; i < n; ++i)
                svg << num(px(line.x[i])) << ',' << num(py(line.y[i])) << (i + 1 < n ? " " : "");
            svg << "\"/>\n";

            const double ly = kTop + 10 + 18.0 * static_cast<double>(s);
            const double lx = kLeft + plot_w + 12;
            svg << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(lx + 20) << "\" y2=\""
                << num(ly) << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
            svg << "<text x=\"" << num(lx + 26) << "\" y=\"" << num(ly + 4) << "\">" << escape(line.label)
                << "</text>\n";
        }
        svg << "</svg>\n";
        return svg.str();
    }
}
