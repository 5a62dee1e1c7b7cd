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

#ifndef FDSPACE_DOF_REGION_HPP
#define FDSPACE_DOF_REGION_HPP

#include "fdspace/direction_set.hpp"
#include "fdspace/rational.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fdspace
{
    // Wavelength-normalized half-lengths; an array of half-length L spans 2L.
    struct ArrayHalfLengths
    {
        Rational l_t1 = 0; // user 1 transmitter (uplink)
        Rational l_r1 = 0; // base-station receiver
        Rational l_t2 = 0; // base-station transmitter
        Rational l_r2 = 0; // user 2 receiver (downlink)

        bool operator==(const ArrayHalfLengths &) const = default;
    };

    // Effective scattering intervals of the three-node channel. Index ij is receiver i,
    // transmitter j. The 21 cross-link is empty (the users are hidden from each other)
    // and is not stored.
    struct ScatteringGeometry
    {
        DirectionSet t11, r11; // uplink T1 -> R1
        DirectionSet t22, r22; // downlink T2 -> R2
        DirectionSet t12, r12; // self-interference T2 -> R1
        ArrayHalfLengths lengths;

        bool operator==(const ScatteringGeometry &) const = default;
    };

    // Throws DomainError when any length is negative.
    void validate(const ScatteringGeometry &g);

    struct DofCaps
    {
        Rational d1_max;
        Rational d2_max;
        Rational dsum_max;

        bool operator==(const DofCaps &) const = default;
    };

    struct DofPoint
    {
        Rational d1;
        Rational d2;

        bool operator==(const DofPoint &) const = default;
    };

    // The two achievable corners (d1', d2') and (d1'', d2'') together with the
    // intermediate quantities they are built from.
    struct CornerPoints
    {
        DofPoint p_prime;
        DofPoint p_double_prime;

        Rational d_t2;
        Rational delta_t2;
        Rational d_r1;
        Rational delta_r1;
    };

    enum class RegionKind
    {
        capped,      // {d >= 0 : d1 <= c1, d2 <= c2, d1 + d2 <= cs}
        time_shared, // convex hull of (0,0), (c1,0), (0,c2)
    };

    struct DofRegion
    {
        RegionKind kind = RegionKind::capped;
        Rational d1_cap = 0;
        Rational d2_cap = 0;
        // For time_shared regions this is max(d1_cap, d2_cap), the largest d1 + d2 in the triangle.
        Rational dsum_cap = 0;
        // Counter-clockwise from the origin, duplicates and collinear points removed.
        // Derived from the caps.
        std::vector<DofPoint> vertices;

        bool contains(const DofPoint &p) const;
    };

    enum class RegionRelation
    {
        equal,
        a_strict_subset_b,
        b_strict_subset_a,
        incomparable,
    };

    std::string to_string(RegionRelation r);

    DofCaps fd_caps(const ScatteringGeometry &g);

    CornerPoints corner_points(const ScatteringGeometry &g);

    // The corners read off the caps: (d1_max, dsum_max - d1_max) and
    // (dsum_max - d2_max, d2_max), with the sum coordinate clamped into the feasible box.
    std::pair<DofPoint, DofPoint> corners_from_caps(const DofCaps &caps);

    DofRegion fd_region(const ScatteringGeometry &g);

    // Time division between uplink and downlink.
    DofRegion hd_region(const ScatteringGeometry &g);

    DofRegion capped_region(const DofCaps &caps);

    RegionRelation region_relate(const DofRegion &a, const DofRegion &b);

    // Shoelace area of the vertex polygon.
    Rational area(const DofRegion &r);

    // The sum constraint is inactive: dsum_max >= d1_max + d2_max.
    bool is_rectangular(const ScatteringGeometry &g);

    class DegenerateGeometryError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // Enlarges T22/T12 and R11/R12 to their unions and lengthens the base-station
    // arrays so the interference link is fully overlapped. Requires nonzero union
    // measures, otherwise throws DegenerateGeometryError.
    ScatteringGeometry genie_expand(const ScatteringGeometry &g);

    // max(2 L_T2 |T22 u T12|, 2 L_R1 |R11 u R12|); equals dsum_max after genie_expand.
    Rational max_signaling_dimension(const ScatteringGeometry &g);

    // All arrays of half-length l; t11 = r11 = t22 = r22 = fwd, t12 = r12 = back.
    ScatteringGeometry make_symmetric(const Rational &l, const DirectionSet &fwd, const DirectionSet &back);

    // All six intervals are [-1, 1]; base station arrays l_bs, user arrays l_usr.
    ScatteringGeometry make_fully_spread(const Rational &l_bs, const Rational &l_usr);

    // True when g has the symmetric structure accepted by make_symmetric.
    bool is_symmetric(const ScatteringGeometry &g);

    // Scales all four half-lengths by c.
    ScatteringGeometry scale_lengths(const ScatteringGeometry &g, const Rational &c);
}

#endif
