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

#include "fdspace/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace fdspace
{
    namespace
    {
        bool all_digits(std::string_view s)
        {
            if (s.empty())
                return false;
            for (char c : s)
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    return false;
            return true;
        }

        BigInt parse_signed_integer(std::string_view s, std::string_view whole)
        {
            bool negative = false;
            if (!s.empty() && (s.front() == '-' || s.front() == '+'))
            {
                negative = s.front() == '-';
                s.remove_prefix(1);
            }
            if (!all_digits(s))
                throw std::invalid_argument("not a rational number: \"" + std::string(whole) + "\"");
            BigInt v{std::string(s)};
            return negative ? BigInt(-v) : v;
        }
    }

    Rational parse_rational(std::string_view text)
    {
        while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
            text.remove_prefix(1);
        while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
            text.remove_suffix(1);

        if (auto slash = text.find('/'); slash != std::string_view::npos)
        {
            BigInt num = parse_signed_integer(text.substr(0, slash), text);
            std::string_view den_text = text.substr(slash + 1);
            if (!all_digits(den_text))
                throw std::invalid_argument("not a rational number: \"" + std::string(text) + "\"");
            BigInt den(std::string{den_text});
            if (den == 0)
                throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
            return Rational(num, den);
        }

        if (auto dot = text.find('.'); dot != std::string_view::npos)
        {
            std::string_view int_part = text.substr(0, dot);
            std::string_view frac_part = text.substr(dot + 1);
            bool negative = !int_part.empty() && int_part.front() == '-';
            if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+'))
                int_part.remove_prefix(1);
            if ((!int_part.empty() && !all_digits(int_part)) || !all_digits(frac_part))
                throw std::invalid_argument("not a rational number: \"" + std::string(text) + "\"");
            BigInt scale = 1;
            for (std::size_t i = 0; i < frac_part.size(); ++i)
                scale *= 10;
            BigInt whole = int_part.empty() ? BigInt(0) : BigInt(std::string(int_part));
            BigInt num = whole * scale + BigInt(std::string(frac_part));
            return Rational(negative ? BigInt(-num) : num, scale);
        }

        return Rational(parse_signed_integer(text, text));
    }

    std::string to_string(const Rational &value)
    {
        if (denominator(value) == 1)
            return numerator(value).str();
        return numerator(value).str() + "/" + denominator(value).str();
    }

    double to_double(const Rational &value) { return value.convert_to<double>(); }
}
