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

#ifndef FDSPACE_DIRECTION_SET_HPP
#define FDSPACE_DIRECTION_SET_HPP

#include "fdspace/rational.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fdspace
{
    // Endpoint outside [-1,1], or an angle outside [0,180] degrees.
    class DomainError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // lo >= hi.
    class MalformedIntervalError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // Half-open interval [lo, hi) of direction cosines.
    struct Interval
    {
        Rational lo;
        Rational hi;

        bool operator==(const Interval &) const = default;
    };

    // A finite union of disjoint half-open subintervals of [-1,1], kept sorted with
    // no two pieces touching. Instances are only produced in canonical form.
    class DirectionSet
    {
    public:
        DirectionSet() = default;

        // The whole direction-cosine range [-1, 1].
        static DirectionSet full();

        // Single interval convenience; same checks as canonicalize().
        static DirectionSet interval(const Rational &lo, const Rational &hi);

        const std::vector<Interval> &intervals() const { return intervals_; }
        bool empty() const { return intervals_.empty(); }
        std::size_t size() const { return intervals_.size(); }

        bool contains(const Rational &x) const;

        bool operator==(const DirectionSet &) const = default;

    private:
        friend DirectionSet canonicalize(std::vector<Interval> raw);
        std::vector<Interval> intervals_;
    };

    // Sorts and merges overlapping or touching pieces.
    // Throws DomainError for endpoints outside [-1,1], MalformedIntervalError for lo >= hi.
    DirectionSet canonicalize(std::vector<Interval> raw);

    DirectionSet set_union(const DirectionSet &a, const DirectionSet &b);
    DirectionSet set_intersection(const DirectionSet &a, const DirectionSet &b);
    DirectionSet set_difference(const DirectionSet &a, const DirectionSet &b);

    bool is_subset(const DirectionSet &a, const DirectionSet &b);

    // Lebesgue measure, exact. In [0, 2].
    Rational measure(const DirectionSet &a);

    // Coarsest partition of the union of `sets` into intervals such that every atom is
    // either contained in or disjoint from each input. Atoms are returned in increasing
    // order, each as a single-interval DirectionSet.
    std::vector<DirectionSet> refine(std::span<const DirectionSet> sets);

    // Angle pair in degrees, closed range [lo, hi] within [0, 180].
    struct AnglePair
    {
        Rational lo_deg;
        Rational hi_deg;
    };

    struct CosineOptions
    {
        // cos(theta) is rounded to the nearest multiple of 1/denominator.
        BigInt denominator = BigInt(1000000000000LL);
    };

    // Cosine image of an elevation set. cos reverses orientation, so [a, b] maps to
    // [cos b, cos a]. Angles with well-known cosines (0, 60, 90, 120, 180 degrees) map
    // exactly. Zero-width pairs are dropped.
    DirectionSet from_angles(std::span<const AnglePair> angles, const CosineOptions &opts = {});

    // cos of an angle given in degrees, under the same rules as from_angles().
    Rational rational_cos_deg(const Rational &deg, const CosineOptions &opts = {});

    std::string to_string(const DirectionSet &s);
}

#endif
