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

#include "fdspace/direction_set.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <map>

namespace fdspace
{
    namespace
    {
        // Sorted distinct endpoints of all inputs.
        std::vector<Rational> breakpoints(std::span<const DirectionSet> sets)
        {
            std::vector<Rational> pts;
            for (const auto &s : sets)
                for (const auto &iv : s.intervals())
                {
                    pts.push_back(iv.lo);
                    pts.push_back(iv.hi);
                }
            std::sort(pts.begin(), pts.end());
            pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
            return pts;
        }

        template <typename Pred>
        DirectionSet combine(const DirectionSet &a, const DirectionSet &b, Pred keep)
        {
            const DirectionSet both[2] = {a, b};
            auto pts = breakpoints(both);
            std::vector<Interval> out;
            for (std::size_t k = 0; k + 1 < pts.size(); ++k)
            {
                Rational mid = (pts[k] + pts[k + 1]) / 2;
                if (keep(a.contains(mid), b.contains(mid)))
                {
                    if (!out.empty() && out.back().hi == pts[k])
                        out.back().hi = pts[k + 1];
                    else
                        out.push_back({pts[k], pts[k + 1]});
                }
            }
            return canonicalize(std::move(out));
        }
    }

    DirectionSet DirectionSet::full() { return interval(-1, 1); }

    DirectionSet DirectionSet::interval(const Rational &lo, const Rational &hi)
    {
        return canonicalize({Interval{lo, hi}});
    }

    bool DirectionSet::contains(const Rational &x) const
    {
        auto it = std::upper_bound(intervals_.begin(), intervals_.end(), x,
                                   [](const Rational &v, const Interval &iv) { return v < iv.lo; });
        if (it == intervals_.begin())
            return false;
        --it;
        return x >= it->lo && x < it->hi;
    }

    DirectionSet canonicalize(std::vector<Interval> raw)
    {
        for (const auto &iv : raw)
        {
            if (iv.lo < -1 || iv.lo > 1 || iv.hi < -1 || iv.hi > 1)
                throw DomainError("interval [" + to_string(iv.lo) + ", " + to_string(iv.hi) +
                                  ") leaves [-1, 1]");
            if (iv.lo >= iv.hi)
                throw MalformedIntervalError("interval [" + to_string(iv.lo) + ", " + to_string(iv.hi) +
                                             ") has lo >= hi");
        }
        std::sort(raw.begin(), raw.end(), [](const Interval &x, const Interval &y) { return x.lo < y.lo; });

        DirectionSet result;
        for (auto &iv : raw)
        {
            auto &out = result.intervals_;
            if (!out.empty() && iv.lo <= out.back().hi)
                out.back().hi = rmax(out.back().hi, iv.hi);
            else
                out.push_back(std::move(iv));
        }
        return result;
    }

    DirectionSet set_union(const DirectionSet &a, const DirectionSet &b)
    {
        return combine(a, b, [](bool x, bool y) { return x || y; });
    }

    DirectionSet set_intersection(const DirectionSet &a, const DirectionSet &b)
    {
        return combine(a, b, [](bool x, bool y) { return x && y; });
    }

    DirectionSet set_difference(const DirectionSet &a, const DirectionSet &b)
    {
        return combine(a, b, [](bool x, bool y) { return x && !y; });
    }

    bool is_subset(const DirectionSet &a, const DirectionSet &b) { return set_difference(a, b).empty(); }

    Rational measure(const DirectionSet &a)
    {
        Rational total = 0;
        for (const auto &iv : a.intervals())
            total += iv.hi - iv.lo;
        return total;
    }

    std::vector<DirectionSet> refine(std::span<const DirectionSet> sets)
    {
        auto pts = breakpoints(sets);
        std::vector<DirectionSet> atoms;
        std::vector<bool> prev_signature;
        Rational run_lo, run_hi;
        bool open = false;

        auto flush = [&]
        {
            if (open)
                atoms.push_back(DirectionSet::interval(run_lo, run_hi));
            open = false;
        };

        for (std::size_t k = 0; k + 1 < pts.size(); ++k)
        {
            Rational mid = (pts[k] + pts[k + 1]) / 2;
            std::vector<bool> signature;
            signature.reserve(sets.size());
            bool inside_any = false;
            for (const auto &s : sets)
            {
                signature.push_back(s.contains(mid));
                inside_any = inside_any || signature.back();
            }
            if (!inside_any)
            {
                flush();
                continue;
            }
            if (open && run_hi == pts[k] && signature == prev_signature)
            {
                run_hi = pts[k + 1];
                continue;
            }
            flush();
            run_lo = pts[k];
            run_hi = pts[k + 1];
            prev_signature = std::move(signature);
            open = true;
        }
        flush();
        return atoms;
    }

    Rational rational_cos_deg(const Rational &deg, const CosineOptions &opts)
    {
        if (deg < 0 || deg > 180)
            throw DomainError("angle " + to_string(deg) + " deg outside [0, 180]");

        static const std::map<Rational, Rational> exact = {
            {Rational(0), Rational(1)},    {Rational(60), Rational(1, 2)},   {Rational(90), Rational(0)},
            {Rational(120), Rational(-1, 2)}, {Rational(180), Rational(-1)},
        };
        if (auto it = exact.find(deg); it != exact.end())
            return it->second;

        using Float = boost::multiprecision::cpp_bin_float_50;
        Float radians = Float(numerator(deg)) / Float(denominator(deg)) * boost::math::constants::pi<Float>() / 180;
        Float scaled = boost::multiprecision::cos(radians) * Float(opts.denominator);
        BigInt nearest = boost::multiprecision::round(scaled).convert_to<BigInt>();
        return Rational(nearest, opts.denominator);
    }

    DirectionSet from_angles(std::span<const AnglePair> angles, const CosineOptions &opts)
    {
        std::vector<Interval> raw;
        for (const auto &a : angles)
        {
            if (a.lo_deg < 0 || a.hi_deg > 180 || a.hi_deg < 0 || a.lo_deg > 180)
                throw DomainError("angle pair [" + to_string(a.lo_deg) + ", " + to_string(a.hi_deg) +
                                  "] deg outside [0, 180]");
            if (a.lo_deg > a.hi_deg)
                throw MalformedIntervalError("angle pair [" + to_string(a.lo_deg) + ", " + to_string(a.hi_deg) +
                                             "] has lo > hi");
            Rational lo = rational_cos_deg(a.hi_deg, opts);
            Rational hi = rational_cos_deg(a.lo_deg, opts);
            if (lo < hi)
                raw.push_back({lo, hi});
        }
        return canonicalize(std::move(raw));
    }

    std::string to_string(const DirectionSet &s)
    {
        if (s.empty())
            return "{}";
        std::string out;
        for (const auto &iv : s.intervals())
        {
            if (!out.empty())
                out += " u ";
            out += "[" + to_string(iv.lo) + ", " + to_string(iv.hi) + ")";
        }
        return out;
    }
}
