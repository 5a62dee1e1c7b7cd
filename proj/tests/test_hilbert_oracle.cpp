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

#include "fdspace/hilbert_oracle.hpp"
#include "support/generators.hpp"

#include <map>

using namespace fdspace;

namespace
{
    ScatteringGeometry symmetric_overlap(const Rational &overlap, const Rational &l)
    {
        return make_symmetric(l, DirectionSet::interval(-1, 0), DirectionSet::interval(-overlap, 1 - overlap));
    }

    std::map<std::string, IdentityCheck> by_name(const OperatorDimsReport &r)
    {
        std::map<std::string, IdentityCheck> out;
        for (const auto &c : r.checks)
            out[c.name] = c;
        return out;
    }

    std::vector<std::size_t> atom_dims(const SpaceBasis &b)
    {
        std::vector<std::size_t> out;
        for (const auto &a : b.atoms)
            out.push_back(a.dims);
        return out;
    }

    // Support of a block: rows of atoms inside rx, columns of atoms inside tx.
    bool zero_outside(const ComplexMatrix &m, const SpaceBasis &rows, const DirectionSet &rx,
                      const SpaceBasis &cols, const DirectionSet &tx)
    {
        for (const auto &ra : rows.atoms)
            for (const auto &ca : cols.atoms)
            {
                bool inside = is_subset(ra.atom, rx) && is_subset(ca.atom, tx);
                auto block = m.block(ra.offset, ca.offset, ra.dims, ca.dims);
                if (!inside && block.size() > 0 && block.norm() != 0.0)
                    return false;
                if (inside && block.size() > 0 && block.norm() == 0.0)
                    return false;
            }
        return true;
    }
}

TEST_CASE("basis allocation on the symmetric L=2 example")
{
    auto g = symmetric_overlap(Rational(3, 4), 2);
    auto b = allocate_basis(g);
    CHECK(atom_dims(b.t1) == std::vector<std::size_t>{4});
    CHECK(atom_dims(b.t2) == std::vector<std::size_t>{1, 3, 1});
    CHECK(b.t2.dimension == 5);
    CHECK(b.r1.dimension == 5);
    CHECK(b.r2.dimension == 4);
    CHECK(b.t2.atoms[1].offset == 1);
    CHECK(b.t2.atoms[2].offset == 4);
    CHECK(b.t2.atoms[0].atom == DirectionSet::interval(-1, Rational(-3, 4)));
}

TEST_CASE("space dimensions equal 2 L |union of intervals|")
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i)
    {
        auto g = fdspace::testing::random_integral_geometry(rng);
        auto b = allocate_basis(g);
        const auto &L = g.lengths;
        CHECK(Rational(b.t1.dimension) == 2 * L.l_t1 * measure(g.t11));
        CHECK(Rational(b.t2.dimension) == 2 * L.l_t2 * measure(set_union(g.t22, g.t12)));
        CHECK(Rational(b.r1.dimension) == 2 * L.l_r1 * measure(set_union(g.r11, g.r12)));
        CHECK(Rational(b.r2.dimension) == 2 * L.l_r2 * measure(g.r22));
        std::size_t sum = 0;
        for (const auto &a : b.t2.atoms)
        {
            CHECK(a.offset == sum);
            sum += a.dims;
        }
        CHECK(sum == b.t2.dimension);
    }
}

TEST_CASE("quantization errors and integer rescaling")
{
    auto g = symmetric_overlap(Rational(3, 4), 1);
    try
    {
        allocate_basis(g);
        FAIL("expected a quantization error");
    }
    catch (const QuantizationError &e)
    {
        CHECK(e.suggested_scale() == 2);
        CHECK(e.dimension() == Rational(1, 2));
    }

    auto r = integer_rescale(g);
    CHECK(r.scale == 2);
    CHECK(r.geometry.lengths.l_t1 == 2);
    CHECK_NOTHROW(allocate_basis(r.geometry));

    auto third = make_symmetric(Rational(1, 3), DirectionSet::interval(-1, 0), DirectionSet::interval(0, 1));
    CHECK(integer_rescale(third).scale == 3);

    auto integral = symmetric_overlap(Rational(3, 4), 2);
    CHECK(integer_rescale(integral).scale == 1);

    auto huge = make_fully_spread(5000, 5000);
    CHECK_THROWS_AS(allocate_basis(huge), std::length_error);
}

TEST_CASE("rescaling is minimal")
{
    std::mt19937_64 rng(2);
    for (int i = 0; i < 200; ++i)
    {
        auto g = fdspace::testing::random_geometry(rng, 2, 6, 2);
        auto r = integer_rescale(g);
        CHECK_NOTHROW(allocate_basis(r.geometry, 1u << 20));
        for (BigInt k = 1; k < r.scale; ++k)
        {
            if (r.scale % k != 0)
                continue;
            CHECK_THROWS_AS(allocate_basis(scale_lengths(g, Rational(k)), 1u << 20), QuantizationError);
        }
    }
}

TEST_CASE("sampled channel structure")
{
    auto g = symmetric_overlap(Rational(3, 4), 2);
    auto ch = sample_channel(g, 1);
    REQUIRE(ch.s12.rows() == 5);
    REQUIRE(ch.s12.cols() == 5);
    // T2 atom [-1,-3/4) lies only in T22, [0,1/4) only in T12.
    CHECK(ch.s12.col(0).norm() == 0.0);
    CHECK(ch.s12.col(4).norm() != 0.0);
    // R1 atoms: [-3/4,0) in both, [0,1/4) only in R12 and [-1,-3/4) only in R11.
    CHECK(ch.s12.row(0).norm() == 0.0);
    CHECK(zero_outside(ch.s12, ch.basis.r1, g.r12, ch.basis.t2, g.t12));
    CHECK(zero_outside(ch.s11, ch.basis.r1, g.r11, ch.basis.t1, g.t11));
    CHECK(zero_outside(ch.s22, ch.basis.r2, g.r22, ch.basis.t2, g.t22));

    auto again = sample_channel(g, 1);
    CHECK(again.s11 == ch.s11);
    CHECK(again.s12 == ch.s12);
    CHECK(again.s22 == ch.s22);
    CHECK(sample_channel(g, 2).s11 != ch.s11);

    auto quiet = g;
    quiet.t12 = quiet.r12 = DirectionSet{};
    auto qc = sample_channel(quiet, 3);
    CHECK((qc.s12.size() == 0 || qc.s12.norm() == 0.0));

    auto corrupt = sample_channel(g, 1, {1e-9, true});
    CHECK(corrupt.s12.col(0).norm() != 0.0);
    CHECK_FALSE(verify_operator_dims(corrupt, g).all_pass());
}

TEST_CASE("operator identities on the symmetric L=2 example")
{
    auto g = symmetric_overlap(Rational(3, 4), 2);
    auto ch = sample_channel(g, 1);
    auto report = verify_operator_dims(ch, g);
    CHECK(report.all_pass());
    CHECK(report.checks.size() == 9);
    auto m = by_name(report);
    CHECK(m["rank(S12)"].observed == 4);
    CHECK(m["nullity(S12)"].observed == 1);
    CHECK(m["codim R(S11)"].observed == 1);
    CHECK(m["rank(S11)"].observed == 4);
    CHECK(m["rank(S22)"].observed == 4);
}

TEST_CASE("operator identities hold across seeds on integral geometries")
{
    std::mt19937_64 rng(101);
    for (int i = 0; i < 30; ++i)
    {
        auto g = fdspace::testing::random_integral_geometry(rng, 32);
        std::vector<long> first;
        for (std::uint64_t seed = 1; seed <= 3; ++seed)
        {
            auto report = verify_operator_dims(sample_channel(g, seed), g);
            INFO("geometry " << i << " seed " << seed);
            for (const auto &c : report.checks)
            {
                INFO(c.name << " expected " << c.expected << " observed " << c.observed);
                CHECK(c.pass());
            }
            std::vector<long> obs;
            for (const auto &c : report.checks)
                obs.push_back(c.observed);
            if (seed == 1)
                first = obs;
            else
                CHECK(obs == first);
        }
    }
}

TEST_CASE("zero-forcing on the symmetric L=2 example")
{
    auto g = symmetric_overlap(Rational(3, 4), 2);
    auto zf = zero_forcing_corner(sample_channel(g, 1), g);
    CHECK(zf.d1 == 4);
    CHECK(zf.d2 == 2);
    CHECK(zf.filtered_uplink_rank == 4);
    CHECK(zf.leakage < 1e-8);
    CHECK(orthogonal_construction_applies(g));
    CHECK(zf.d2_orthogonal == 2);
    CHECK(zf.leakage_orthogonal < 1e-8);
}

TEST_CASE("zero-forcing on fully spread arrays")
{
    auto g = make_fully_spread(2, 1);
    auto zf = zero_forcing_corner(sample_channel(g, 7), g);
    CHECK(zf.d1 == 4);
    CHECK(zf.d2 == 4);
    CHECK(zf.leakage < 1e-8);

    auto tight = make_fully_spread(1, 1);
    auto zt = zero_forcing_corner(sample_channel(tight, 7), tight);
    CHECK(zt.d1 == 4);
    CHECK(zt.d2 == 0);
}

TEST_CASE("zero-forcing reaches the clamped corner")
{
    std::mt19937_64 rng(55);
    int orthogonal = 0;
    for (int i = 0; i < 60; ++i)
    {
        auto g = fdspace::testing::random_integral_geometry(rng, 32);
        auto caps = fd_caps(g);
        auto corner = corner_points(g).p_prime;
        auto ch = sample_channel(g, 1 + i);
        auto zf = zero_forcing_corner(ch, g);
        INFO("geometry " << i);
        CHECK(Rational(zf.d1) == corner.d1);
        CHECK(Rational(zf.d2) == corner.d2);
        CHECK(zf.filtered_uplink_rank == zf.d1);
        CHECK(zf.leakage < 1e-8);
        CHECK(zf.transmit_basis.cols() == zf.d2);
        CHECK(Rational(zf.d1) == caps.d1_max);
        if (orthogonal_construction_applies(g))
        {
            ++orthogonal;
            CHECK(Rational(zf.d2_orthogonal) == corner.d2);
            CHECK(zf.leakage_orthogonal < 1e-8);
        }
        else
        {
            CHECK(Rational(zf.d2_orthogonal) <= corner.d2);
        }
    }
    CHECK(orthogonal > 0);
}

TEST_CASE("zero-forcing when the transmit subspace lies in N(s12)")
{
    // Interference image is numerically zero; the receive filter must keep all of R1.
    ScatteringGeometry g;
    g.t11 = g.r11 = DirectionSet::interval(Rational(-1, 2), 1);
    g.t22 = g.r22 = DirectionSet::interval(-1, Rational(3, 4));
    g.t12 = DirectionSet::interval(-1, Rational(1, 2));
    g.r12 = DirectionSet::interval(Rational(-1, 2), 0);
    g.lengths = {16, 6, 10, 16};
    auto ch = sample_channel(g, 1);
    auto zf = zero_forcing_corner(ch, g);
    CHECK(zf.d1 == 18);
    CHECK(zf.d2 == 29);
    CHECK(zf.receive_filter.cols() == ch.s11.rows());
    CHECK(zf.filtered_uplink_rank == 18);
    CHECK(zf.leakage < 1e-8);
}
