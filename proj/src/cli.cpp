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

#include "fdspace/cli.hpp"

#include "fdspace/dof_region.hpp"
#include "fdspace/hilbert_oracle.hpp"
#include "fdspace/plot.hpp"
#include "fdspace/scenario.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>

namespace fdspace::cli
{
    namespace
    {
        constexpr double kLeakageBound = 1e-8;

        std::string point(const DofPoint &p) { return "(" + to_string(p.d1) + ", " + to_string(p.d2) + ")"; }

        std::string vertex_list(const DofRegion &r)
        {
            std::string s;
            for (const auto &v : r.vertices)
                s += (s.empty() ? "" : " ") + point(v);
            return s;
        }

        // Loads the scenario, mapping failures to exit codes. Returns nullopt on success.
        std::optional<int> load(const Options &opt, Scenario &scenario, std::ostream &err)
        {
            try
            {
                scenario = load_scenario(opt.scenario_path);
                return std::nullopt;
            }
            catch (const ScenarioFileError &e)
            {
                err << "error: " << e.what() << "\n";
                return kMissingFile;
            }
            catch (const ScenarioSchemaError &e)
            {
                err << "schema error: " << e.what() << "\n";
                return kSchema;
            }
            catch (const ScenarioInvariantError &e)
            {
                err << "invariant violation: " << e.what() << "\n";
                return kInvariant;
            }
        }

        bool write_file(const std::string &path, const std::string &content, std::ostream &err)
        {
            std::ofstream f(path, std::ios::binary);
            if (!f)
            {
                err << "error: cannot write " << path << "\n";
                return false;
            }
            f << content;
            return static_cast<bool>(f);
        }

        void print_caps(std::ostream &out, const DofRegion &r)
        {
            out << "  d1_cap   = " << to_string(r.d1_cap) << "\n";
            out << "  d2_cap   = " << to_string(r.d2_cap) << "\n";
            out << "  dsum_cap = " << to_string(r.dsum_cap) << "\n";
            out << "  vertices: " << vertex_list(r) << "\n";
        }

        DirectionSet leading_interval(const Rational &lo, const Rational &width)
        {
            if (width == 0)
                return {};
            return DirectionSet::interval(lo, lo + width);
        }

        std::vector<Rational> parse_grid(const std::string &text)
        {
            std::vector<Rational> grid;
            std::stringstream ss(text);
            std::string item;
            while (std::getline(ss, item, ','))
                grid.push_back(parse_rational(item));
            return grid;
        }

        struct SeedOutcome
        {
            std::uint64_t seed = 0;
            OperatorDimsReport dims;
            ZeroForcingResult zf;
        };

        struct Row
        {
            std::string name;
            std::string expected;
            std::function<bool(const SeedOutcome &)> pass;
        };
    }

    int cmd_region(const Options &opt, std::ostream &out, std::ostream &err)
    {
        Scenario sc;
        if (auto code = load(opt, sc, err))
            return *code;

        const auto &g = sc.geometry;
        const auto caps = fd_caps(g);
        const auto corners = corner_points(g);
        const auto region = fd_region(g);

        out << "scenario: " << sc.name << "\n";
        out << "d1_max   = " << to_string(caps.d1_max) << "\n";
        out << "d2_max   = " << to_string(caps.d2_max) << "\n";
        out << "dsum_max = " << to_string(caps.dsum_max) << "\n";
        out << "corner (d1', d2')   = " << point(corners.p_prime) << "\n";
        out << "corner (d1'', d2'') = " << point(corners.p_double_prime) << "\n";
        out << "rectangular = " << (is_rectangular(g) ? "true" : "false") << "\n";
        out << "vertices: " << vertex_list(region) << "\n";

        if (opt.csv_path && !write_file(*opt.csv_path, vertices_csv(region), err))
            return kMissingFile;
        if (opt.svg_path)
        {
            const PlotSeries series[] = {{"D_FD", region, false}};
            if (!write_file(*opt.svg_path, regions_svg(series, sc.name), err))
                return kMissingFile;
        }
        return kOk;
    }

    int cmd_compare(const Options &opt, std::ostream &out, std::ostream &err)
    {
        Scenario sc;
        if (auto code = load(opt, sc, err))
            return *code;

        const auto fd = fd_region(sc.geometry);
        const auto hd = hd_region(sc.geometry);
        const auto rel = region_relate(hd, fd);

        out << "scenario: " << sc.name << "\n";
        out << "half-duplex region:\n";
        print_caps(out, hd);
        out << "full-duplex region:\n";
        print_caps(out, fd);

        std::string relation;
        switch (rel)
        {
        case RegionRelation::equal:
            relation = "equal";
            break;
        case RegionRelation::a_strict_subset_b:
            relation = "HD strictly inside FD";
            break;
        case RegionRelation::b_strict_subset_a:
            relation = "FD strictly inside HD";
            break;
        case RegionRelation::incomparable:
            relation = "incomparable";
            break;
        }
        out << "relation: " << relation << "\n";

        const Rational hd_area = area(hd);
        if (hd_area == 0)
            out << "area gain FD/HD: n/a (HD region has zero area)\n";
        else
        {
            const Rational gain = area(fd) / hd_area;
            out << "area gain FD/HD: " << to_string(gain) << " (" << format_decimal(gain) << ")\n";
        }

        if (opt.csv_path && !write_file(*opt.csv_path, vertices_csv(fd), err))
            return kMissingFile;
        if (opt.svg_path)
        {
            const PlotSeries series[] = {{"D_HD", hd, true}, {"D_FD", fd, false}};
            if (!write_file(*opt.svg_path, regions_svg(series, sc.name), err))
                return kMissingFile;
        }
        return kOk;
    }

    int cmd_sweep(const Options &opt, std::ostream &out, std::ostream &err)
    {
        Scenario sc;
        if (auto code = load(opt, sc, err))
            return *code;

        const auto &base = sc.geometry;
        if (!is_symmetric(base))
        {
            err << "error: sweep needs a symmetric base scenario (equal lengths, t11 = r11 = t22 = r22, t12 = r12)\n";
            return kBadSweepBase;
        }
        const Rational fwd = measure(base.t11);
        const Rational back = measure(base.t12);
        const Rational max_overlap = rmin(fwd, back);

        std::vector<Rational> grid;
        if (opt.grid)
        {
            try
            {
                grid = parse_grid(*opt.grid);
            }
            catch (const std::invalid_argument &e)
            {
                err << "schema error: --grid: " << e.what() << "\n";
                return kSchema;
            }
        }
        else
        {
            for (int k = 0; k <= 4; ++k)
                grid.push_back(max_overlap * k / 4);
        }

        struct Point
        {
            Rational overlap;
            DofRegion region;
            bool rectangular;
        };
        std::vector<Point> points;
        for (const auto &o : grid)
        {
            if (o < 0 || o > max_overlap)
            {
                err << "error: overlap " << to_string(o) << " outside [0, " << to_string(max_overlap) << "]\n";
                return kBadSweepBase;
            }
            // fwd = [-1, -1 + |fwd|), back starts o before the end of fwd.
            const Rational back_lo = Rational(-1) + fwd - o;
            if (back_lo + back > 1)
            {
                err << "error: |fwd| + |back| - overlap exceeds 2 for overlap " << to_string(o) << "\n";
                return kBadSweepBase;
            }
            auto g = make_symmetric(base.lengths.l_t1, leading_interval(-1, fwd), leading_interval(back_lo, back));
            points.push_back({o, fd_region(g), is_rectangular(g)});
        }

        std::string csv = "overlap,d1_cap,d2_cap,dsum_cap,rectangular\n";
        out << "scenario: " << sc.name << "  |fwd| = " << to_string(fwd) << "  |back| = " << to_string(back)
            << "\n";
        out << "overlap  d1_cap  d2_cap  dsum_cap  rectangular  vertices\n";
        for (const auto &p : points)
        {
            csv += format_decimal(p.overlap) + "," + format_decimal(p.region.d1_cap) + "," +
                   format_decimal(p.region.d2_cap) + "," + format_decimal(p.region.dsum_cap) + "," +
                   (p.rectangular ? "true" : "false") + "\n";
            out << to_string(p.overlap) << "  " << to_string(p.region.d1_cap) << "  " << to_string(p.region.d2_cap)
                << "  " << to_string(p.region.dsum_cap) << "  " << (p.rectangular ? "true" : "false") << "  "
                << vertex_list(p.region) << "\n";
        }

        if (opt.csv_path && !write_file(*opt.csv_path, csv, err))
            return kMissingFile;
        if (opt.svg_path)
        {
            std::vector<PlotSeries> series;
            series.push_back({"D_HD", hd_region(base), true});
            for (const auto &p : points)
                series.push_back({"D_FD overlap " + to_string(p.overlap), p.region, false});
            if (!write_file(*opt.svg_path, regions_svg(series, sc.name + " overlap sweep"), err))
                return kMissingFile;
        }
        return kOk;
    }

    int cmd_verify(const Options &opt, std::ostream &out, std::ostream &err)
    {
        Scenario sc;
        if (auto code = load(opt, sc, err))
            return *code;

        const int seeds = opt.seeds.value_or(sc.oracle.seeds);
        const double rank_tol = opt.rank_tol.value_or(sc.oracle.rank_tol);
        if (seeds < 1 || !(rank_tol > 0.0))
        {
            err << "error: --seeds must be positive and --rank-tol > 0\n";
            return kSchema;
        }

        ScatteringGeometry g = sc.geometry;
        BigInt scale = 1;
        try
        {
            allocate_basis(g);
        }
        catch (const QuantizationError &e)
        {
            if (!opt.auto_rescale)
            {
                err << "quantization error: " << e.what() << " (rerun with --auto-rescale)\n";
                return kQuantization;
            }
            auto rescaled = integer_rescale(g);
            g = rescaled.geometry;
            scale = rescaled.scale;
        }
        catch (const std::length_error &e)
        {
            err << "error: " << e.what() << "\n";
            return kQuantization;
        }

        BasisAllocation basis;
        try
        {
            basis = allocate_basis(g);
        }
        catch (const std::exception &e)
        {
            err << "error: " << e.what() << "\n";
            return kQuantization;
        }

        const auto caps = fd_caps(g);
        const auto expected = corners_from_caps(caps).first;
        const auto corners = corner_points(g);
        const auto from_caps = corners_from_caps(caps);
        const bool corner_identity =
            corners.p_prime == from_caps.first && corners.p_double_prime == from_caps.second;
        const bool orthogonal_case = orthogonal_construction_applies(g);

        ChannelOptions copt;
        copt.rank_tol = rank_tol;
        copt.corrupt_support = opt.corrupt_support;

        std::vector<SeedOutcome> outcomes;
        for (int s = 1; s <= seeds; ++s)
        {
            SeedOutcome o;
            o.seed = static_cast<std::uint64_t>(s);
            auto ch = sample_channel(g, o.seed, copt);
            o.dims = verify_operator_dims(ch, g);
            o.zf = zero_forcing_corner(ch, g);
            outcomes.push_back(std::move(o));
        }

        const long exp_d1 = numerator(expected.d1).convert_to<long>();
        const long exp_d2 = numerator(expected.d2).convert_to<long>();

        std::vector<Row> rows;
        const std::size_t n_checks = outcomes.front().dims.checks.size();
        for (std::size_t k = 0; k < n_checks; ++k)
        {
            const auto &c = outcomes.front().dims.checks[k];
            rows.push_back({c.name, std::to_string(c.expected),
                            [k](const SeedOutcome &o) { return o.dims.checks[k].pass(); }});
        }
        rows.push_back({"zf d1", std::to_string(exp_d1), [=](const SeedOutcome &o) { return o.zf.d1 == exp_d1; }});
        rows.push_back({"zf d2", std::to_string(exp_d2), [=](const SeedOutcome &o) { return o.zf.d2 == exp_d2; }});
        rows.push_back({"zf uplink after filter", std::to_string(exp_d1),
                        [=](const SeedOutcome &o) { return o.zf.filtered_uplink_rank == exp_d1; }});
        rows.push_back(
            {"zf leakage", "<1e-8", [](const SeedOutcome &o) { return o.zf.leakage < kLeakageBound; }});
        if (orthogonal_case)
        {
            rows.push_back({"zf-orth d2", std::to_string(exp_d2),
                            [=](const SeedOutcome &o) { return o.zf.d2_orthogonal == exp_d2; }});
            rows.push_back({"zf-orth leakage", "<1e-8",
                            [](const SeedOutcome &o) { return o.zf.leakage_orthogonal < kLeakageBound; }});
        }

        bool all_ok = corner_identity;
        out << "scenario: " << sc.name << "\n";
        out << "scale: " << scale.str() << (scale == 1 ? "" : " (all lengths multiplied to make atom dimensions integral)")
            << "\n";
        out << "dimensions: T1=" << basis.t1.dimension << " T2=" << basis.t2.dimension << " R1=" << basis.r1.dimension
            << " R2=" << basis.r2.dimension << "\n";
        out << "caps: d1_max=" << to_string(caps.d1_max) << " d2_max=" << to_string(caps.d2_max)
            << " dsum_max=" << to_string(caps.dsum_max) << "\n";
        out << "seeds: " << seeds << "  rank_tol: " << rank_tol << "\n\n";

        std::size_t width = 0;
        for (const auto &r : rows)
            width = std::max(width, r.name.size());
        out << std::string(width, ' ') << "  expected  per-seed (P pass, F fail)\n";
        for (const auto &r : rows)
        {
            std::string cells;
            for (const auto &o : outcomes)
            {
                const bool ok = r.pass(o);
                all_ok = all_ok && ok;
                cells += ok ? 'P' : 'F';
            }
            out << r.name << std::string(width - r.name.size(), ' ') << "  " << r.expected
                << std::string(r.expected.size() < 8 ? 8 - r.expected.size() : 0, ' ') << "  " << cells << "\n";
        }

        for (const auto &o : outcomes)
            if (o.dims.ill_conditioned || o.zf.ill_conditioned)
                err << "warning: seed " << o.seed << " has a singular value within half a decade of rank_tol; "
                    << "results may be ill-conditioned, reseed\n";

        if (opt.csv_path)
        {
            std::string csv = "check,expected,seed,pass\n";
            for (const auto &r : rows)
                for (const auto &o : outcomes)
                    csv += r.name + "," + r.expected + "," + std::to_string(o.seed) + "," +
                           (r.pass(o) ? "true" : "false") + "\n";
            if (!write_file(*opt.csv_path, csv, err))
                return kMissingFile;
        }
        if (opt.svg_path)
        {
            const PlotSeries series[] = {{"D_HD", hd_region(g), true}, {"D_FD", fd_region(g), false}};
            if (!write_file(*opt.svg_path, regions_svg(series, sc.name), err))
                return kMissingFile;
        }

        out << "\nzero-forcing corner: (" << outcomes.front().zf.d1 << ", " << outcomes.front().zf.d2 << ")"
            << "  expected " << point(expected) << "\n";
        out << "corner cross-check (closed-form corners vs caps): " << (corner_identity ? "PASS" : "FAIL") << "\n";
        out << "result: " << (all_ok ? "PASS" : "FAIL") << "\n";
        return all_ok ? kOk : kVerificationFailure;
    }

    int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"Degrees-of-freedom regions of a three-node full-duplex channel", "fdspace"};
        app.require_subcommand(1);

        Options opt;
        auto add_common = [&](CLI::App *sub)
        {
            sub->add_option("scenario", opt.scenario_path, "Scenario JSON file")->required();
            sub->add_option("--csv", opt.csv_path, "Write CSV output to PATH");
            sub->add_option("--svg", opt.svg_path, "Write an SVG plot to PATH");
            sub->add_option("--seeds", opt.seeds, "Number of oracle seeds");
            sub->add_flag("--auto-rescale", opt.auto_rescale, "Rescale lengths to integral atom dimensions");
            sub->add_option("--rank-tol", opt.rank_tol, "Relative singular-value threshold");
        };

        auto *region = app.add_subcommand("region", "Full-duplex region, caps and corner points");
        auto *compare = app.add_subcommand("compare", "Half-duplex versus full-duplex");
        auto *sweep = app.add_subcommand("sweep", "Symmetric overlap sweep");
        auto *verify = app.add_subcommand("verify", "Random-operator verification of the closed forms");
        for (auto *sub : {region, compare, sweep, verify})
            add_common(sub);
        sweep->add_option("--grid", opt.grid, "Overlap values, comma separated rationals");
        verify->add_flag("--corrupt-support", opt.corrupt_support, "Test hook: break the s12 support pattern")
            ->group("");

        try
        {
            app.parse(argc, argv);
        }
        catch (const CLI::ParseError &e)
        {
            return app.exit(e, out, err);
        }

        if (region->parsed())
            return cmd_region(opt, out, err);
        if (compare->parsed())
            return cmd_compare(opt, out, err);
        if (sweep->parsed())
            return cmd_sweep(opt, out, err);
        return cmd_verify(opt, out, err);
    }
}
