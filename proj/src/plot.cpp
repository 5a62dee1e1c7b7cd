// SPDX-License-Identifier: Apache-2.0
//
// fdspace: degrees-of-freedom regions of full-duplex scattering channels
// Copyright (C) 2026 The fdspace authors
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

#include "fdspace/plot.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

namespace fdspace
{
    namespace
    {
        constexpr double kWidth = 640;
        constexpr double kHeight = 480;
        constexpr double kLeft = 70;
        constexpr double kRight = 30;
        constexpr double kTop = 40;
        constexpr double kBottom = 60;

        constexpr std::array<const char *, 8> kPalette = {"#000000", "#d62728", "#1f77b4", "#2ca02c",
                                                          "#9467bd", "#ff7f0e", "#8c564b", "#17becf"};

        std::string num(double v)
        {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.2f", v);
            return buf;
        }

        std::string tick_label(double v)
        {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.4g", v);
            return buf;
        }

        std::string escape(const std::string &s)
        {
            std::string out;
            for (char c : s)
            {
                switch (c)
                {
                case '&':
                    out += "&amp;";
                    break;
                case '<':
                    out += "&lt;";
                    break;
                case '>':
                    out += "&gt;";
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
    }

    std::string format_decimal(const Rational &x)
    {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", to_double(x));
        return buf;
    }

    std::string vertices_csv(const DofRegion &region)
    {
        std::string out = "d1,d2\n";
        for (const auto &v : region.vertices)
            out += format_decimal(v.d1) + "," + format_decimal(v.d2) + "\n";
        return out;
    }

    std::string regions_svg(std::span<const PlotSeries> series, const std::string &title)
    {
        double extent = 0;
        for (const auto &s : series)
            extent = std::max({extent, to_double(s.region.d1_cap), to_double(s.region.d2_cap)});
        if (extent <= 0)
            extent = 1;
        extent *= 1.15;

        const double plot_w = kWidth - kLeft - kRight;
        const double plot_h = kHeight - kTop - kBottom;
        auto px = [&](double d1) { return kLeft + d1 / extent * plot_w; };
        auto py = [&](double d2) { return kHeight - kBottom - d2 / extent * plot_h; };

        std::ostringstream svg;
        svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" viewBox=\"0 0 640 480\">\n";
        svg << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"white\"/>\n";
        svg << "<text x=\"" << num(kWidth / 2) << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
            << "font-size=\"16\">" << escape(title) << "</text>\n";

        // Axes
        svg << "<line x1=\"" << num(px(0)) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(px(extent)) << "\" y2=\""
            << num(py(0)) << "\" stroke=\"black\"/>\n";
        svg << "<line x1=\"" << num(px(0)) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(px(0)) << "\" y2=\""
            << num(py(extent)) << "\" stroke=\"black\"/>\n";
        for (int k = 0; k <= 5; ++k)
        {
            const double v = extent / 1.15 * k / 5.0;
            svg << "<line x1=\"" << num(px(v)) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(px(v)) << "\" y2=\""
                << num(py(0) + 5) << "\" stroke=\"black\"/>\n";
            svg << "<text x=\"" << num(px(v)) << "\" y=\"" << num(py(0) + 20)
                << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << tick_label(v)
                << "</text>\n";
            svg << "<line x1=\"" << num(px(0) - 5) << "\" y1=\"" << num(py(v)) << "\" x2=\"" << num(px(0)) << "\" y2=\""
                << num(py(v)) << "\" stroke=\"black\"/>\n";
            svg << "<text x=\"" << num(px(0) - 8) << "\" y=\"" << num(py(v) + 4)
                << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << tick_label(v)
                << "</text>\n";
        }
        svg << "<text x=\"" << num(kLeft + plot_w / 2) << "\" y=\"" << num(kHeight - 18)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">d1</text>\n";
        svg << "<text x=\"20\" y=\"" << num(kTop + plot_h / 2)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" transform=\"rotate(-90 20 "
            << num(kTop + plot_h / 2) << ")\">d2</text>\n";

        for (std::size_t i = 0; i < series.size(); ++i)
        {
            const auto &s = series[i];
            const char *color = kPalette[i % kPalette.size()];
            svg << "<polygon points=\"";
            for (std::size_t k = 0; k < s.region.vertices.size(); ++k)
            {
                const auto &v = s.region.vertices[k];
                if (k)
                    svg << ' ';
                svg << num(px(to_double(v.d1))) << ',' << num(py(to_double(v.d2)));
            }
            svg << "\" fill=\"" << color << "\" fill-opacity=\"0.08\" stroke=\"" << color << "\" stroke-width=\"2\"";
            if (s.dashed)
                svg << " stroke-dasharray=\"6,4\"";
            svg << "/>\n";

            const double ly = kTop + 10 + 18.0 * static_cast<double>(i);
            const double lx = kWidth - kRight - 200;
            svg << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(lx + 24) << "\" y2=\""
                << num(ly) << "\" stroke=\"" << color << "\" stroke-width=\"2\"";
            if (s.dashed)
                svg << " stroke-dasharray=\"6,4\"";
            svg << "/>\n";
            svg << "<text x=\"" << num(lx + 30) << "\" y=\"" << num(ly + 4)
                << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape(s.label) << "</text>\n";
        }
        svg << "</svg>\n";
        return svg.str();
    }
}
