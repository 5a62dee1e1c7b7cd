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

#include "fdspace/subspace.hpp"

#include <random>

using namespace fdspace;
using Catch::Matchers::WithinAbs;

namespace
{
    ComplexMatrix random_matrix(std::mt19937_64 &rng, long rows, long cols)
    {
        std::normal_distribution<double> n(0.0, 1.0);
        ComplexMatrix m(rows, cols);
        for (long j = 0; j < cols; ++j)
            for (long i = 0; i < rows; ++i)
                m(i, j) = {n(rng), n(rng)};
        return m;
    }

    // Product of random n x r and r x m factors: rank r with probability one.
    ComplexMatrix random_rank(std::mt19937_64 &rng, long rows, long cols, long r)
    {
        return random_matrix(rng, rows, r) * random_matrix(rng, r, cols);
    }

    double orthonormality_error(const ComplexMatrix &q)
    {
        if (q.cols() == 0)
            return 0.0;
        return (q.adjoint() * q - ComplexMatrix::Identity(q.cols(), q.cols())).norm();
    }
}

TEST_CASE("rank of known matrices")
{
    ComplexMatrix d = ComplexMatrix::Zero(4, 3);
    d(0, 0) = 3.0;
    d(1, 1) = 1e-3;
    CHECK(numerical_rank(d, 1e-9) == 2);
    CHECK(numerical_rank(d, 1e-2) == 1);
    // Against an external reference.
    CHECK(numerical_rank(d, 1e-9, 1e7) == 1);

    CHECK(numerical_rank(ComplexMatrix::Zero(3, 3), 1e-9) == 0);
    CHECK(numerical_rank(ComplexMatrix(0, 5), 1e-9) == 0);
    CHECK(numerical_rank(ComplexMatrix(5, 0), 1e-9) == 0);
    CHECK(singular_values(ComplexMatrix(0, 0)).empty());
    CHECK(spectral_norm(ComplexMatrix(0, 0)) == 0.0);

    auto sv = singular_values(d);
    REQUIRE(sv.size() == 3);
    CHECK_THAT(sv[0], WithinAbs(3.0, 1e-14));
    CHECK_THAT(sv[1], WithinAbs(1e-3, 1e-14));
    CHECK(sv[2] == 0.0);
}

TEST_CASE("fragile rank decisions are flagged")
{
    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = 2e-9;
    CHECK(rank_is_fragile(d, 1e-9));
    d(1, 1) = 1e-3;
    CHECK_FALSE(rank_is_fragile(d, 1e-9));
    d(1, 1) = 0.0;
    CHECK_FALSE(rank_is_fragile(d, 1e-9));
}

TEST_CASE("random low-rank products")
{
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 50; ++trial)
    {
        long rows = 1 + static_cast<long>(rng() % 12);
        long cols = 1 + static_cast<long>(rng() % 12);
        long r = static_cast<long>(rng() % (std::min(rows, cols) + 1));
        ComplexMatrix m = random_rank(rng, rows, cols, r);
        CHECK(numerical_rank(m, 1e-9) == r);

        auto range = range_basis(m, 1e-9);
        auto null = null_basis(m, 1e-9);
        CHECK(range.rows() == rows);
        CHECK(range.cols() == r);
        CHECK(null.rows() == cols);
        CHECK(null.cols() == cols - r);
        CHECK(orthonormality_error(range) < 1e-10);
        CHECK(orthonormality_error(null) < 1e-10);
        if (null.cols() > 0 && r > 0)
            CHECK((m * null).norm() < 1e-9 * spectral_norm(m) * std::sqrt(double(cols)));
        // Range captures every column.
        if (r > 0)
            CHECK((m - range * (range.adjoint() * m)).norm() < 1e-9 * m.norm());

        auto comp = complement_basis(range, 1e-9);
        CHECK(comp.cols() == rows - r);
        if (comp.cols() > 0 && r > 0)
            CHECK((comp.adjoint() * range).norm() < 1e-10);
    }
}

TEST_CASE("intersection and join of coordinate subspaces")
{
    ComplexMatrix e = ComplexMatrix::Identity(5, 5);
    ComplexMatrix a = e.leftCols(3);     // e0 e1 e2
    ComplexMatrix b = e.rightCols(3);    // e2 e3 e4
    auto i = intersection_basis(a, b, 1e-9);
    REQUIRE(i.cols() == 1);
    CHECK_THAT(std::abs(i(2, 0)), WithinAbs(1.0, 1e-12));
    CHECK(join_basis(a, b, 1e-9).cols() == 5);

    ComplexMatrix none(5, 0);
    CHECK(intersection_basis(a, none, 1e-9).cols() == 0);
    CHECK(join_basis(a, none, 1e-9).cols() == 3);
    CHECK(complement_basis(none, 1e-9).cols() == 5);
}

TEST_CASE("intersection dimension of random subspaces")
{
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 40; ++trial)
    {
        long n = 2 + static_cast<long>(rng() % 10);
        long shared = static_cast<long>(rng() % (n / 2 + 1));
        long extra_a = static_cast<long>(rng() % (n - 2 * shared + 1));
        long extra_b = static_cast<long>(rng() % (n - 2 * shared - extra_a + 1));
        // Generic subspaces of dims ka, kb in C^n meet in max(0, ka + kb - n); build a
        // known common part on top of that.
        ComplexMatrix basis = random_matrix(rng, n, n);
        ComplexMatrix c = basis.leftCols(shared);
        ComplexMatrix ea = basis.middleCols(shared, extra_a);
        ComplexMatrix eb = basis.middleCols(shared + extra_a, extra_b);
        ComplexMatrix ma(n, shared + extra_a), mb(n, shared + extra_b);
        ma << c, ea;
        mb << c, eb;
        auto qa = range_basis(ma, 1e-9), qb = range_basis(mb, 1e-9);
        CHECK(intersection_basis(qa, qb, 1e-8).cols() == shared);
        CHECK(join_basis(qa, qb, 1e-8).cols() == shared + extra_a + extra_b);
    }
}

TEST_CASE("range basis against an external reference")
{
    ComplexMatrix tiny = ComplexMatrix::Zero(3, 2);
    tiny(0, 0) = 1e-15;
    tiny(1, 1) = 5e-16;
    CHECK(range_basis(tiny, 1e-9).cols() == 2);
    CHECK(range_basis(tiny, 1e-9, 1.0).cols() == 0);
    CHECK(range_basis(tiny, 1e-9, 1e-15).cols() == 2);
}
