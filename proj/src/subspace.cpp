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

#include "fdspace/subspace.hpp"

#include <Eigen/SVD>

#include <cmath>

namespace fdspace
{
    namespace
    {
        long count_above(const Eigen::VectorXd &sv, double threshold)
        {
            long r = 0;
            for (Eigen::Index i = 0; i < sv.size(); ++i)
                if (sv(i) > threshold)
                    ++r;
            return r;
        }
    }

    std::vector<double> singular_values(const ComplexMatrix &m)
    {
        if (m.size() == 0)
            return {};
        Eigen::JacobiSVD<ComplexMatrix> svd(m);
        const auto &sv = svd.singularValues();
        return {sv.data(), sv.data() + sv.size()};
    }

    double spectral_norm(const ComplexMatrix &m)
    {
        auto sv = singular_values(m);
        return sv.empty() ? 0.0 : sv.front();
    }

    long numerical_rank(const ComplexMatrix &m, double tol, double reference)
    {
        if (m.size() == 0)
            return 0;
        Eigen::JacobiSVD<ComplexMatrix> svd(m);
        const auto &sv = svd.singularValues();
        double ref = reference < 0 ? sv(0) : reference;
        if (ref <= 0.0)
            return 0;
        return count_above(sv, tol * ref);
    }

    bool rank_is_fragile(const ComplexMatrix &m, double tol)
    {
        auto sv = singular_values(m);
        if (sv.empty() || sv.front() <= 0.0)
            return false;
        const double log_tol = std::log10(tol);
        for (double s : sv)
        {
            if (s <= 0.0)
                continue;
            if (std::abs(std::log10(s / sv.front()) - log_tol) < 0.5)
                return true;
        }
        return false;
    }

    ComplexMatrix range_basis(const ComplexMatrix &m, double tol, double reference)
    {
        if (m.cols() == 0 || m.rows() == 0)
            return ComplexMatrix(m.rows(), 0);
        Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU);
        const auto &sv = svd.singularValues();
        const double scale = reference < 0.0 ? sv(0) : reference;
        long r = sv(0) > 0.0 && scale > 0.0 ? count_above(sv, tol * scale) : 0;
        return svd.matrixU().leftCols(r);
    }

    ComplexMatrix null_basis(const ComplexMatrix &m, double tol)
    {
        const Eigen::Index n = m.cols();
        if (m.rows() == 0 || n == 0)
            return ComplexMatrix::Identity(n, n);
        Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
        const auto &sv = svd.singularValues();
        long r = sv(0) > 0.0 ? count_above(sv, tol * sv(0)) : 0;
        return svd.matrixV().rightCols(n - r);
    }

    ComplexMatrix complement_basis(const ComplexMatrix &basis, double tol)
    {
        const Eigen::Index n = basis.rows();
        if (basis.cols() == 0)
            return ComplexMatrix::Identity(n, n);
        // Orthonormal input: singular values are 1, so tol is effectively absolute.
        return null_basis(basis.adjoint(), tol);
    }

    ComplexMatrix intersection_basis(const ComplexMatrix &a, const ComplexMatrix &b, double tol)
    {
        const Eigen::Index n = a.rows();
        if (a.cols() == 0 || b.cols() == 0)
            return ComplexMatrix(n, 0);
        // x = a*c lies in span(b) iff (I - b b^H) a c = 0.
        ComplexMatrix residual = a - b * (b.adjoint() * a);
        const Eigen::Index k = a.cols();
        Eigen::JacobiSVD<ComplexMatrix> svd(residual, Eigen::ComputeFullV);
        const auto &sv = svd.singularValues();
        // Columns of a are unit length, so an absolute threshold is meaningful here.
        long r = count_above(sv, tol);
        ComplexMatrix coeffs = svd.matrixV().rightCols(k - r);
        return range_basis(a * coeffs, tol);
    }

    ComplexMatrix join_basis(const ComplexMatrix &a, const ComplexMatrix &b, double tol)
    {
        ComplexMatrix both(a.rows(), a.cols() + b.cols());
        both << a, b;
        return range_basis(both, tol);
    }
}
