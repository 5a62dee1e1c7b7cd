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

#include <catch2/catch_amalgamated.hpp>

#include "fdspace/scenario.hpp"

#include <cstdlib>
#include <fstream>

using namespace fdspace;
using nlohmann::json;

namespace
{
    std::filesystem::path scenario_dir()
    {
        const char *dir = std::getenv("FDSPACE_SCENARIOS");
        return dir ? dir : "scenarios";
    }

    json minimal()
    {
        return json::parse(R"({
            "name": "minimal",
            "lengths": {"l_t1": 1, "l_r1": "1", "l_t2": "1/2", "l_r2": "0.25"},
            "intervals": {
                "t11": [["-1", "0"]], "r11": [["-1", "0"]],
                "t22": [["0", "1"]], "r22": [["0", "1"]],
                "t12": [["-1/2", "1/2"]], "r12": []
            }
        })");
    }

    template <class E>
    std::string error_path(const json &doc)
    {
        try
        {
            parse_scenario(doc);
        }
        catch (const E &e)
        {
            return e.path();
        }
        return "<no error>";
    }
}

TEST_CASE("parse a minimal scenario")
{
    auto s = parse_scenario(minimal());
    CHECK(s.name == "minimal");
    CHECK(s.geometry.lengths == ArrayHalfLengths{1, 1, Rational(1, 2), Rational(1, 4)});
    CHECK(s.geometry.t12 == DirectionSet::interval(Rational(-1, 2), Rational(1, 2)));
    CHECK(s.geometry.r12.empty());
    CHECK(s.oracle.seeds == 20);
    CHECK(s.oracle.rank_tol == 1e-9);
}

TEST_CASE("overlapping input intervals are merged")
{
    auto doc = minimal();
    doc["intervals"]["t11"] = json::parse(R"([["-1", "0"], ["-1/2", "1/2"], ["1/2", "3/4"]])");
    auto s = parse_scenario(doc);
    CHECK(s.geometry.t11 == DirectionSet::interval(-1, Rational(3, 4)));
}

TEST_CASE("schema errors name the field")
{
    auto doc = minimal();
    doc.erase("name");
    CHECK(error_path<ScenarioSchemaError>(doc) == "name");

    doc = minimal();
    doc["lengths"].erase("l_t2");
    CHECK(error_path<ScenarioSchemaError>(doc) == "lengths.l_t2");

    doc = minimal();
    doc["intervals"]["t12"][0][1] = "1/0";
    CHECK(error_path<ScenarioSchemaError>(doc) == "intervals.t12[0][1]");

    doc = minimal();
    doc["intervals"]["r22"] = json::parse(R"([["0"]])");
    CHECK(error_path<ScenarioSchemaError>(doc) == "intervals.r22[0]");

    doc = minimal();
    doc["lengths"]["l_r1"] = 0.5;
    CHECK(error_path<ScenarioSchemaError>(doc) == "lengths.l_r1");

    doc = minimal();
    doc["oracle"] = {{"seeds", 0}};
    CHECK(error_path<ScenarioSchemaError>(doc) == "oracle.seeds");

    CHECK_THROWS_AS(parse_scenario(json::array()), ScenarioSchemaError);
}

TEST_CASE("invariant errors name the field")
{
    auto doc = minimal();
    doc["intervals"]["r11"] = json::parse(R"([["-2", "0"]])");
    CHECK(error_path<ScenarioInvariantError>(doc) == "intervals.r11");

    doc = minimal();
    doc["intervals"]["t22"] = json::parse(R"([["1/2", "0"]])");
    CHECK(error_path<ScenarioInvariantError>(doc) == "intervals.t22");

    doc = minimal();
    doc["lengths"]["l_t1"] = "-1";
    CHECK(error_path<ScenarioInvariantError>(doc) == "lengths.l_t1");

    doc = minimal();
    doc["intervals"]["t11"] = json::parse(R"({"angles_deg": [["0", "200"]]})");
    CHECK(error_path<ScenarioInvariantError>(doc) == "intervals.t11");
}

TEST_CASE("angle intervals")
{
    auto doc = minimal();
    doc["intervals"]["t11"] = json::parse(R"({"angles_deg": [["60", "120"]]})");
    doc["intervals"]["r11"] = json::parse(R"({"angles_deg": [["0", "90"], ["90", "180"]]})");
    auto s = parse_scenario(doc);
    CHECK(s.geometry.t11 == DirectionSet::interval(Rational(-1, 2), Rational(1, 2)));
    CHECK(s.geometry.r11 == DirectionSet::full());
}

TEST_CASE("to_json round trip")
{
    auto s = parse_scenario(minimal());
    s.oracle.seeds = 7;
    auto back = parse_scenario(to_json(s));
    CHECK(back.name == s.name);
    CHECK(back.geometry == s.geometry);
    CHECK(back.oracle.seeds == 7);
    CHECK(to_json(s)["lengths"]["l_t2"] == "1/2");
}

TEST_CASE("files")
{
    auto s = load_scenario(scenario_dir() / "symmetric_overlap_075.json");
    CHECK(s.geometry == make_symmetric(1, DirectionSet::interval(-1, 0),
                                       DirectionSet::interval(Rational(-3, 4), Rational(1, 4))));

    CHECK_THROWS_AS(load_scenario(scenario_dir() / "does_not_exist.json"), ScenarioFileError);

    auto bad = std::filesystem::temp_directory_path() / "fdspace_bad_scenario.json";
    std::ofstream(bad) << "{ \"name\": ";
    CHECK_THROWS_AS(load_scenario(bad), ScenarioSchemaError);
    std::filesystem::remove(bad);

    for (const auto &entry : std::filesystem::directory_iterator(scenario_dir()))
    {
        INFO(entry.path());
        CHECK_NOTHROW(load_scenario(entry.path()));
    }
}
