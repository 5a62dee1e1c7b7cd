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

#ifndef FDSPACE_PLOT_HPP
#define FDSPACE_PLOT_HPP

#include "fdspace/dof_region.hpp"

#include <span>
#include <string>

namespace fdspace
{
    // Decimal with 12 significant digits.
    std::string format_decimal(const Rational &x);

    // Header "d1,d2", one vertex per row, counter-clockwise from the origin.
    std::string vertices_csv(const DofRegion &region);

    struct PlotSeries
    {
        std::string label;
        DofRegion region;
        bool dashed = false;
    };

    // 640x480 SVG with d1/d2 axes, one polygon per series and a legend.
    // Output depends only on the arguments.
    std::string regions_svg(std::span<const PlotSeries> series, const std::string &title);
}

#endif
