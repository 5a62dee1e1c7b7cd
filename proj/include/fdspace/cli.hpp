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

#ifndef FDSPACE_CLI_HPP
#define FDSPACE_CLI_HPP

#include <optional>
#include <ostream>
#include <string>

namespace fdspace::cli
{
    enum ExitCode : int
    {
        kOk = 0,
        kVerificationFailure = 1,
        kMissingFile = 2,
        kSchema = 3,
        kInvariant = 4,
        kBadSweepBase = 5,
        kQuantization = 6,
    };

    struct Options
    {
        std::string command;
        std::string scenario_path;
        std::optional<std::string> csv_path;
        std::optional<std::string> svg_path;
        std::optional<int> seeds;
        bool auto_rescale = false;
        std::optional<double> rank_tol;
        // Comma separated overlap values for sweep, e.g. "1,3/4,1/2".
        std::optional<std::string> grid;
        // Test hook for the verify negative control.
        bool corrupt_support = false;
    };

    int cmd_region(const Options &opt, std::ostream &out, std::ostream &err);
    int cmd_compare(const Options &opt, std::ostream &out, std::ostream &err);
    int cmd_sweep(const Options &opt, std::ostream &out, std::ostream &err);
    int cmd_verify(const Options &opt, std::ostream &out, std::ostream &err);

    // Parses argv and dispatches. Returns the process exit code.
    int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);
}

#endif
