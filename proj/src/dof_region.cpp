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

#include "fdspace/dof_region.hpp"

namespace fdspace
{
    namespace
    {
        Rational clamp(const Rational &x, const Rational &lo, const Rational &hi) { return rmin(rmax(x, lo), hi); }

        // Cross product of (b - a) x (c - a).
        Rational cross(const DofPoint &a, const DofPoint &b, const DofPoint &c)
        {
            return (b.d1 - a.d1) * (c.d2 - a.d2) - (b.d2 - a.d2) * (c.d1 - a.d1);
        }

        std::vector<DofPoint> simplify(std::vector<DofPoint> pts)
        {
            std::vector<DofPoint> out;
            for (auto &p : pts)
                if (out.empty() || !(out.back() == p))
                    out.push_back(std::move(p));
            while (out.size() > 1 && out.back() == out.front())
                out.pop_back();

            bool changed = true;
            while (changed && out.size() >= 3)
            {
                changed = false;
                for (std::size_t i = 0; i < out.size(); ++i)
                {
                    const auto &prev = out[(i + out.size() - 1) % out.size()];
                    const auto &next = out[(i + 1) % out.size()];
                    if (cross(prev, out[i], next) == 0)
                    {
                        // Never drop the origin; it anchors the vertex order.
                        if (i == 0)
                            continue;
                        out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
                        changed = true;
                        break;
                    }
                }
            }
            return out;
        }

        // Products L|Psi| that appear throughout.
        struct Products
        {
            Rational t1_11;      // L_T1 |T11|
            Rational r1_11;      // L_R1 |R11|
            Rational t2_22;      // L_T2 |T22|
            Rational r2_22;      // L_R2 |R22|
            Rational t2_12;      // L_T2 |T12|
            Rational r1_12;      // L_R1 |R12|
            Rational t2_22_only; // L_T2 |T22 \ T12|
            Rational t2_22_12;   // L_T2 |T22 n T12|
            Rational t2_12_only; // L_T2 |T12 \ T22|
            Rational r1_11_only; // L_R1 |R11 \ R12|
            Rational r1_11_12;   // L_R1 |R11 n R12|
            Rational r1_12_only; // L_R1 |R12 \ R11|
        };

        Products products(const ScatteringGeometry &g)
        {
            const auto &L = g.lengths;
            Products p;
            p.t1_11 = L.l_t1 * measure(g.t11);
            p.r1_11 = L.l_r1 * measure(g.r11);
            p.t2_22 = L.l_t2 * measure(g.t22);
            p.r2_22 = L.l_r2 * measure(g.r22);
            p.t2_12 = L.l_t2 * measure(g.t12);
            p.r1_12 = L.l_r1 * measure(g.r12);
            p.t2_22_only = L.l_t2 * measure(set_difference(g.t22, g.t12));
            p.t2_22_12 = L.l_t2 * measure(set_intersection(g.t22, g.t12));
            p.t2_12_only = L.l_t2 * measure(set_difference(g.t12, g.t22));
            p.r1_11_only = L.l_r1 * measure(set_difference(g.r11, g.r12));
            p.r1_11_12 = L.l_r1 * measure(set_intersection(g.r11, g.r12));
            p.r1_12_only = L.l_r1 * measure(set_difference(g.r12, g.r11));
            return p;
        }
    }

    void validate(const ScatteringGeometry &g)
    {
        const auto &L = g.lengths;
        if (L.l_t1 < 0 || L.l_r1 < 0 || L.l_t2 < 0 || L.l_r2 < 0)
            throw DomainError("array half-lengths must be nonnegative");
    }

    std::string to_string(RegionRelation r)
    {
        switch (r)
        {
        case RegionRelation::equal:
            return "equal";
        case RegionRelation::a_strict_subset_b:
            return "a_strict_subset_b";
        case RegionRelation::b_strict_subset_a:
            return "b_strict_subset_a";
        case RegionRelation::incomparable:
            return "incomparable";
        }
        return "?";
    }

    DofCaps fd_caps(const ScatteringGeometry &g)
    {
        const auto p = products(g);
        DofCaps caps;
        caps.d1_max = 2 * rmin(p.t1_11, p.r1_11);
        caps.d2_max = 2 * rmin(p.t2_22, p.r2_22);
        caps.dsum_max = 2 * p.t2_22_only + 2 * p.r1_11_only + 2 * rmax(p.t2_12, p.r1_12);
        return caps;
    }

    CornerPoints corner_points(const ScatteringGeometry &g)
    {
        const auto p = products(g);
        CornerPoints c;

        c.d_t2 = 2 * p.t2_22_only +
                 2 * positive_part(rmin(p.t2_22_12, positive_part(p.t2_12 - p.r1_12) + p.r1_12_only));

        // The inner (x)^+ pairs R1 with T2 here, mirroring delta_R1.
        c.delta_t2 = 2 * p.t2_22_only +
                     2 * rmin(p.t2_22_12,
                              p.t2_12 - positive_part(p.t1_11 - (p.r1_11_only + positive_part(p.r1_12 - p.t2_12))));

        c.d_r1 = 2 * p.r1_11_only +
                 2 * positive_part(rmin(p.r1_11_12, positive_part(p.r1_12 - p.t2_12) + p.t2_12_only));

        c.delta_r1 = 2 * p.r1_11_only +
                     2 * rmin(p.r1_11_12,
                              p.r1_12 - positive_part(p.r2_22 - (p.t2_22_only + positive_part(p.t2_12 - p.r1_12))));

        c.p_prime.d1 = rmin(2 * p.t1_11, 2 * p.r1_11);
        c.p_prime.d2 = p.t1_11 >= p.r1_11 ? rmin(c.d_t2, 2 * p.r2_22) : rmin(c.delta_t2, 2 * p.r2_22);

        c.p_double_prime.d1 = p.r2_22 >= p.t2_22 ? rmin(2 * p.t1_11, c.d_r1) : rmin(2 * p.t1_11, c.delta_r1);
        c.p_double_prime.d2 = rmin(2 * p.t2_22, 2 * p.r2_22);
        return c;
    }

    std::pair<DofPoint, DofPoint> corners_from_caps(const DofCaps &caps)
    {
        DofPoint first{caps.d1_max, clamp(caps.dsum_max - caps.d1_max, 0, caps.d2_max)};
        DofPoint second{clamp(caps.dsum_max - caps.d2_max, 0, caps.d1_max), caps.d2_max};
        return {first, second};
    }

    DofRegion capped_region(const DofCaps &caps)
    {
        DofRegion r;
        r.kind = RegionKind::capped;
        r.d1_cap = caps.d1_max;
        r.d2_cap = caps.d2_max;
        r.dsum_cap = caps.dsum_max;

        Rational x_max = rmin(caps.d1_max, caps.dsum_max);
        Rational y_max = rmin(caps.d2_max, caps.dsum_max);
        r.vertices = simplify({
            {0, 0},
            {x_max, 0},
            {x_max, clamp(caps.dsum_max - x_max, 0, y_max)},
            {clamp(caps.dsum_max - y_max, 0, x_max), y_max},
            {0, y_max},
        });
        return r;
    }

    DofRegion fd_region(const ScatteringGeometry &g) { return capped_region(fd_caps(g)); }

    DofRegion hd_region(const ScatteringGeometry &g)
    {
        auto caps = fd_caps(g);
        DofRegion r;
        r.kind = RegionKind::time_shared;
        r.d1_cap = caps.d1_max;
        r.d2_cap = caps.d2_max;
        r.dsum_cap = rmax(caps.d1_max, caps.d2_max);
        r.vertices = simplify({{0, 0}, {caps.d1_max, 0}, {0, caps.d2_max}});
        return r;
    }

    bool DofRegion::contains(const DofPoint &p) const
    {
        if (p.d1 < 0 || p.d2 < 0 || p.d1 > d1_cap || p.d2 > d2_cap)
            return false;
        if (kind == RegionKind::time_shared)
            return p.d1 * d2_cap + p.d2 * d1_cap <= d1_cap * d2_cap;
        return p.d1 + p.d2 <= dsum_cap;
    }

    RegionRelation region_relate(const DofRegion &a, const DofRegion &b)
    {
        auto inside = [](const DofRegion &x, const DofRegion &y)
        {
            for (const auto &v : x.vertices)
                if (!y.contains(v))
                    return false;
            return true;
        };
        bool a_in_b = inside(a, b);
        bool b_in_a = inside(b, a);
        if (a_in_b && b_in_a)
            return RegionRelation::equal;
        if (a_in_b)
            return RegionRelation::a_strict_subset_b;
        if (b_in_a)
            return RegionRelation::b_strict_subset_a;
        return RegionRelation::incomparable;
    }

    Rational area(const DofRegion &r)
    {
        Rational twice = 0;
        const auto &v = r.vertices;
        for (std::size_t i = 0; i < v.size(); ++i)
        {
            const auto &a = v[i];
            const auto &b = v[(i + 1) % v.size()];
            twice += a.d1 * b.d2 - b.d1 * a.d2;
        }
        return twice / 2;
    }

    bool is_rectangular(const ScatteringGeometry &g)
    {
        auto caps = fd_caps(g);
        return caps.dsum_max >= caps.d1_max + caps.d2_max;
    }

    ScatteringGeometry genie_expand(const ScatteringGeometry &g)
    {
        DirectionSet tx_union = set_union(g.t22, g.t12);
        DirectionSet rx_union = set_union(g.r11, g.r12);
        Rational tx_measure = measure(tx_union);
        Rational rx_measure = measure(rx_union);
        if (tx_measure == 0 || rx_measure == 0)
            throw DegenerateGeometryError("genie expansion needs |T22 u T12| > 0 and |R11 u R12| > 0");

        ScatteringGeometry out = g;
        out.t22 = out.t12 = tx_union;
        out.r11 = out.r12 = rx_union;
        out.lengths.l_t2 = g.lengths.l_t2 + g.lengths.l_r1 * measure(set_difference(g.r11, g.r12)) / tx_measure;
        out.lengths.l_r1 = g.lengths.l_r1 + g.lengths.l_t2 * measure(set_difference(g.t22, g.t12)) / rx_measure;
        return out;
    }

    Rational max_signaling_dimension(const ScatteringGeometry &g)
    {
        return rmax(2 * g.lengths.l_t2 * measure(set_union(g.t22, g.t12)),
                    2 * g.lengths.l_r1 * measure(set_union(g.r11, g.r12)));
    }

    ScatteringGeometry make_symmetric(const Rational &l, const DirectionSet &fwd, const DirectionSet &back)
    {
        if (l < 0)
            throw DomainError("array half-length must be nonnegative");
        ScatteringGeometry g;
        g.t11 = g.r11 = g.t22 = g.r22 = fwd;
        g.t12 = g.r12 = back;
        g.lengths = {l, l, l, l};
        return g;
    }

    ScatteringGeometry make_fully_spread(const Rational &l_bs, const Rational &l_usr)
    {
        if (l_bs < 0 || l_usr < 0)
            throw DomainError("array half-lengths must be nonnegative");
        ScatteringGeometry g;
        g.t11 = g.r11 = g.t22 = g.r22 = g.t12 = g.r12 = DirectionSet::full();
        g.lengths.l_t1 = l_usr;
        g.lengths.l_r2 = l_usr;
        g.lengths.l_r1 = l_bs;
        g.lengths.l_t2 = l_bs;
        return g;
    }

    bool is_symmetric(const ScatteringGeometry &g)
    {
        const auto &L = g.lengths;
        return L.l_t1 == L.l_r1 && L.l_r1 == L.l_t2 && L.l_t2 == L.l_r2 && g.t11 == g.r11 && g.r11 == g.t22 &&
               g.t22 == g.r22 && g.t12 == g.r12;
    }

    ScatteringGeometry scale_lengths(const ScatteringGeometry &g, const Rational &c)
    {
        ScatteringGeometry out = g;
        out.lengths.l_t1 *= c;
        out.lengths.l_r1 *= c;
        out.lengths.l_t2 *= c;
        out.lengths.l_r2 *= c;
        return out;
    }
}
