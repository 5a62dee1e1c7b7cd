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

#ifndef FDSPACE_RATIONAL_HPP
#define FDSPACE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace fdspace
{
    // Arbitrary precision rational. All interval endpoints, lengths and DoF values use it.
    using Rational = boost::multiprecision::cpp_rational;
    using BigInt = boost::multiprecision::cpp_int;

    // Parses "p/q", "p", or a plain decimal such as "-0.75" (taken exactly as -75/100).
    // Throws std::invalid_argument on anything else, including a zero denominator.
    Rational parse_rational(std::string_view text);

    // "p/q", or "p" when the denominator is one.
    std::string to_string(const Rational &value);

    double to_double(const Rational &value);

    inline Rational rmin(const Rational &a, const Rational &b) { return a < b ? a : b; }
    inline Rational rmax(const Rational &a, const Rational &b) { return a < b ? b : a; }

    // (x)^+
    inline Rational positive_part(const Rational &x) { return x > 0 ? x : Rational(0); }

    inline bool is_integer(const Rational &x) { return denominator(x) == 1; }
}

#endif
