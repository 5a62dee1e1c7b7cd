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

#include "fdspace/scenario.hpp"

#include <fstream>
#include <sstream>

namespace fdspace
{
    namespace
    {
        using nlohmann::json;

        const json &require(const json &obj, const std::string &key, const std::string &path)
        {
            if (!obj.is_object())
                throw ScenarioSchemaError(path, "expected an object");
            auto it = obj.find(key);
            if (it == obj.end())
                throw ScenarioSchemaError(path.empty() ? key : path + "." + key, "missing required field");
            return *it;
        }

        Rational read_rational(const json &v, const std::string &path)
        {
            if (v.is_number_integer())
                return Rational(v.get<long long>());
            if (v.is_string())
            {
                try
                {
                    return parse_rational(v.get<std::string>());
                }
                catch (const std::invalid_argument &e)
                {
                    throw ScenarioSchemaError(path, e.what());
                }
            }
            throw ScenarioSchemaError(path, "expected a rational as a \"p/q\" string or an integer");
        }

        std::vector<std::pair<Rational, Rational>> read_pairs(const json &v, const std::string &path)
        {
            if (!v.is_array())
                throw ScenarioSchemaError(path, "expected an array of [lo, hi] pairs");
            std::vector<std::pair<Rational, Rational>> out;
            for (std::size_t i = 0; i < v.size(); ++i)
            {
                const std::string p = path + "[" + std::to_string(i) + "]";
                if (!v[i].is_array() || v[i].size() != 2)
                    throw ScenarioSchemaError(p, "expected a two-element array");
                out.emplace_back(read_rational(v[i][0], p + "[0]"), read_rational(v[i][1], p + "[1]"));
            }
            return out;
        }

        DirectionSet read_set(const json &v, const std::string &path)
        {
            try
            {
                if (v.is_object())
                {
                    const auto pairs = read_pairs(require(v, "angles_deg", path), path + ".angles_deg");
                    std::vector<AnglePair> angles;
                    for (const auto &[lo, hi] : pairs)
                        angles.push_back({lo, hi});
                    return from_angles(angles);
                }
                std::vector<Interval> raw;
                for (const auto &[lo, hi] : read_pairs(v, path))
                    raw.push_back({lo, hi});
                return canonicalize(std::move(raw));
            }
            catch (const DomainError &e)
            {
                throw ScenarioInvariantError(path, e.what());
            }
            catch (const MalformedIntervalError &e)
            {
                throw ScenarioInvariantError(path, e.what());
            }
        }

        Rational read_length(const json &lengths, const char *key)
        {
            const std::string path = std::string("lengths.") + key;
            Rational v = read_rational(require(lengths, key, "lengths"), path);
            if (v < 0)
                throw ScenarioInvariantError(path, "array half-length must be nonnegative");
            return v;
        }

        json write_set(const DirectionSet &s)
        {
            json arr = json::array();
            for (const auto &iv : s.intervals())
                arr.push_back(json::array({to_string(iv.lo), to_string(iv.hi)}));
            return arr;
        }
    }

    Scenario parse_scenario(const nlohmann::json &doc)
    {
        if (!doc.is_object())
            throw ScenarioSchemaError("", "scenario must be a JSON object");

        Scenario s;
        const json &name = require(doc, "name", "");
        if (!name.is_string())
            throw ScenarioSchemaError("name", "expected a string");
        s.name = name.get<std::string>();

        const json &lengths = require(doc, "lengths", "");
        auto &L = s.geometry.lengths;
        L.l_t1 = read_length(lengths, "l_t1");
        L.l_r1 = read_length(lengths, "l_r1");
        L.l_t2 = read_length(lengths, "l_t2");
        L.l_r2 = read_length(lengths, "l_r2");

        const json &iv = require(doc, "intervals", "");
        auto &g = s.geometry;
        g.t11 = read_set(require(iv, "t11", "intervals"), "intervals.t11");
        g.r11 = read_set(require(iv, "r11", "intervals"), "intervals.r11");
        g.t22 = read_set(require(iv, "t22", "intervals"), "intervals.t22");
        g.r22 = read_set(require(iv, "r22", "intervals"), "intervals.r22");
        g.t12 = read_set(require(iv, "t12", "intervals"), "intervals.t12");
        g.r12 = read_set(require(iv, "r12", "intervals"), "intervals.r12");

        if (auto it = doc.find("oracle"); it != doc.end())
        {
            const json &o = *it;
            if (!o.is_object())
                throw ScenarioSchemaError("oracle", "expected an object");
            if (auto seeds = o.find("seeds"); seeds != o.end())
            {
                if (!seeds->is_number_integer() || seeds->get<long long>() < 1)
                    throw ScenarioSchemaError("oracle.seeds", "expected a positive integer");
                s.oracle.seeds = seeds->get<int>();
            }
            if (auto tol = o.find("rank_tol"); tol != o.end())
            {
                if (!tol->is_number() || tol->get<double>() <= 0.0)
                    throw ScenarioSchemaError("oracle.rank_tol", "expected a positive number");
                s.oracle.rank_tol = tol->get<double>();
            }
        }
        return s;
    }

    Scenario load_scenario(const std::filesystem::path &path)
    {
        std::ifstream in(path);
        if (!in)
            throw ScenarioFileError("", "cannot open scenario file " + path.string());
        json doc;
        try
        {
            doc = json::parse(in);
        }
        catch (const json::parse_error &e)
        {
            throw ScenarioSchemaError("", std::string("invalid JSON: ") + e.what());
        }
        return parse_scenario(doc);
    }

    nlohmann::json to_json(const Scenario &s)
    {
        const auto &g = s.geometry;
        json doc;
        doc["name"] = s.name;
        doc["lengths"] = {
            {"l_t1", to_string(g.lengths.l_t1)},
            {"l_r1", to_string(g.lengths.l_r1)},
            {"l_t2", to_string(g.lengths.l_t2)},
            {"l_r2", to_string(g.lengths.l_r2)},
        };
        doc["intervals"] = {
            {"t11", write_set(g.t11)}, {"r11", write_set(g.r11)}, {"t22", write_set(g.t22)},
            {"r22", write_set(g.r22)}, {"t12", write_set(g.t12)}, {"r12", write_set(g.r12)},
        };
        doc["oracle"] = {{"seeds", s.oracle.seeds}, {"rank_tol", s.oracle.rank_tol}};
        return doc;
    }
}
