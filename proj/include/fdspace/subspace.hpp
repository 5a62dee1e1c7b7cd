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

#ifndef FDSPACE_SUBSPACE_HPP
#define FDSPACE_SUBSPACE_HPP

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace fdspace
{
    using ComplexMatrix = Eigen::MatrixXcd;

    // Singular values of m, largest first. Empty for an empty matrix.
    std::vector<double> singular_values(const ComplexMatrix &m);

    // Number of singular values above tol * reference. A negative reference means
    // "use the largest singular value of m". An all-zero or empty matrix has rank 0.
    long numerical_rank(const ComplexMatrix &m, double tol, double reference = -1.0);

    // True when some nonzero singular value ratio sigma_k / sigma_max lies within half a
    // decade of tol, i.e. the rank decision is fragile.
    bool rank_is_fragile(const ComplexMatrix &m, double tol);

    // Largest singular value (0 for empty).
    double spectral_norm(const ComplexMatrix &m);

    // Orthonormal basis of the column space. reference as in numerical_rank().
    ComplexMatrix range_basis(const ComplexMatrix &m, double tol, double reference = -1.0);

    // Orthonormal basis of the null space.
    ComplexMatrix null_basis(const ComplexMatrix &m, double tol);

    // Orthonormal basis of the orthogonal complement of span(basis) in C^n,
    // where basis is n x k with orthonormal columns (k may be 0).
    ComplexMatrix complement_basis(const ComplexMatrix &basis, double tol);

    // Orthonormal basis of span(a) n span(b), both given with orthonormal columns.
    ComplexMatrix intersection_basis(const ComplexMatrix &a, const ComplexMatrix &b, double tol);

    // Columns of both, orthonormalized.
    ComplexMatrix join_basis(const ComplexMatrix &a, const ComplexMatrix &b, double tol);
}

#endif
