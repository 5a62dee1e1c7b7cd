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

#ifndef FDSPACE_SCENARIO_HPP
#define FDSPACE_SCENARIO_HPP

#include "fdspace/dof_region.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>

namespace fdspace
{
    struct OracleSettings
    {
        int seeds = 20;
        double rank_tol = 1e-9;
    };

    struct Scenario
    {
        std::string name;
        ScatteringGeometry geometry;
        OracleSettings oracle;
    };

    // Base for load failures; path() names the offending JSON field ("" when not field specific).
    class ScenarioError : public std::runtime_error
    {
    public:
        ScenarioError(const std::string &path, const std::string &what)
            : std::runtime_error(path.empty() ? what : path + ": " + what), path_(path)
        {
        }
        const std::string &path() const { return path_; }

    private:
        std::string path_;
    };

    class ScenarioFileError : public ScenarioError
    {
    public:
        using ScenarioError::ScenarioError;
    };

    // Malformed JSON, missing keys, wrong types, unparsable rationals.
    class ScenarioSchemaError : public ScenarioError
    {
    public:
        using ScenarioError::ScenarioError;
    };

    // Well-formed, but an interval or length violates its invariants.
    class ScenarioInvariantError : public ScenarioError
    {
    public:
        using ScenarioError::ScenarioError;
    };

    Scenario parse_scenario(const nlohmann::json &doc);
    Scenario load_scenario(const std::filesystem::path &path);

    // Rationals are written as "p/q" strings; intervals in the direction domain.
    nlohmann::json to_json(const Scenario &s);
}

#endif
