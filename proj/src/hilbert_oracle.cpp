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

#include "fdspace/hilbert_oracle.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

namespace fdspace
{
    namespace
    {
        struct SpaceSpec
        {
            SignalSpace space;
            Rational half_length;
            std::vector<DirectionSet> family;
        };

        std::vector<SpaceSpec> space_specs(const ScatteringGeometry &g)
        {
            const auto &L = g.lengths;
            return {
                {SignalSpace::t1, L.l_t1, {g.t11}},
                {SignalSpace::t2, L.l_t2, {g.t22, g.t12}},
                {SignalSpace::r1, L.l_r1, {g.r11, g.r12}},
                {SignalSpace::r2, L.l_r2, {g.r22}},
            };
        }

        BigInt required_scale(const ScatteringGeometry &g)
        {
            BigInt scale = 1;
            for (const auto &spec : space_specs(g))
                for (const auto &atom : refine(spec.family))
                    scale = boost::multiprecision::lcm(scale, denominator(2 * spec.half_length * measure(atom)));
            return scale;
        }

        // Block-supported standard complex normal matrix.
        ComplexMatrix sample_block(const SpaceBasis &rows, const SpaceBasis &cols, const DirectionSet &rx_set,
                                   const DirectionSet &tx_set, std::mt19937_64 &rng, bool fill_everything)
        {
            ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(rows.dimension),
                                                  static_cast<Eigen::Index>(cols.dimension));
            std::normal_distribution<double> normal(0.0, 1.0);
            const double scale = 1.0 / std::sqrt(2.0);
            for (const auto &ca : cols.atoms)
            {
                const bool tx_in = is_subset(ca.atom, tx_set);
                for (const auto &ra : rows.atoms)
                {
                    const bool rx_in = is_subset(ra.atom, rx_set);
                    if (!(tx_in && rx_in) && !fill_everything)
                        continue;
                    for (std::size_t c = 0; c < ca.dims; ++c)
                        for (std::size_t r = 0; r < ra.dims; ++r)
                        {
                            double re = normal(rng);
                            double im = normal(rng);
                            m(static_cast<Eigen::Index>(ra.offset + r), static_cast<Eigen::Index>(ca.offset + c)) =
                                std::complex<double>(re, im) * scale;
                        }
                }
            }
            return m;
        }

        long to_long(const Rational &x)
        {
            if (!is_integer(x))
                throw std::logic_error("closed-form dimension " + to_string(x) + " is not an integer");
            return numerator(x).convert_to<long>();
        }

        // max over columns x of basis of |filter^H op x| / (|x| |op|).
        double max_leakage(const ComplexMatrix &filter, const ComplexMatrix &op, const ComplexMatrix &basis)
        {
            const double op_norm = spectral_norm(op);
            if (op_norm == 0.0 || basis.cols() == 0 || filter.cols() == 0)
                return 0.0;
            double worst = 0.0;
            for (Eigen::Index k = 0; k < basis.cols(); ++k)
            {
                const double xn = basis.col(k).norm();
                if (xn == 0.0)
                    continue;
                const double leak = (filter.adjoint() * (op * basis.col(k))).norm() / (xn * op_norm);
                worst = std::max(worst, leak);
            }
            return worst;
        }

        ComplexMatrix random_gaussian(Eigen::Index rows, Eigen::Index cols, std::mt19937_64 &rng)
        {
            std::normal_distribution<double> normal(0.0, 1.0);
            ComplexMatrix m(rows, cols);
            for (Eigen::Index c = 0; c < cols; ++c)
                for (Eigen::Index r = 0; r < rows; ++r)
                {
                    double re = normal(rng);
                    double im = normal(rng);
                    m(r, c) = std::complex<double>(re, im);
                }
            return m;
        }
    }

    std::string to_string(SignalSpace s)
    {
        switch (s)
        {
        case SignalSpace::t1:
            return "T1";
        case SignalSpace::t2:
            return "T2";
        case SignalSpace::r1:
            return "R1";
        case SignalSpace::r2:
            return "R2";
        }
        return "?";
    }

    QuantizationError::QuantizationError(SignalSpace space, DirectionSet atom, Rational dimension, BigInt suggested_scale)
        : std::runtime_error("atom " + fdspace::to_string(atom) + " of " + fdspace::to_string(space) + " has dimension " +
                             fdspace::to_string(dimension) + ", not an integer; scale all lengths by " +
                             suggested_scale.str()),
          space_(space), atom_(std::move(atom)), dimension_(std::move(dimension)),
          suggested_scale_(std::move(suggested_scale))
    {
    }

    BasisAllocation allocate_basis(const ScatteringGeometry &g, std::size_t max_dimension)
    {
        validate(g);
        BasisAllocation out;
        for (const auto &spec : space_specs(g))
        {
            SpaceBasis basis;
            basis.space = spec.space;
            basis.half_length = spec.half_length;
            for (auto &atom : refine(spec.family))
            {
                Rational dim = 2 * spec.half_length * measure(atom);
                if (!is_integer(dim))
                    throw QuantizationError(spec.space, atom, dim, required_scale(g));
                if (dim > Rational(max_dimension) || Rational(basis.dimension) + dim > Rational(max_dimension))
                    throw std::length_error(to_string(spec.space) + " would need more than " +
                                            std::to_string(max_dimension) + " basis functions");
                BasisAtom ba;
                ba.atom = std::move(atom);
                ba.offset = basis.dimension;
                ba.dims = numerator(dim).convert_to<std::size_t>();
                basis.dimension += ba.dims;
                basis.atoms.push_back(std::move(ba));
            }
            switch (spec.space)
            {
            case SignalSpace::t1:
                out.t1 = std::move(basis);
                break;
            case SignalSpace::t2:
                out.t2 = std::move(basis);
                break;
            case SignalSpace::r1:
                out.r1 = std::move(basis);
                break;
            case SignalSpace::r2:
                out.r2 = std::move(basis);
                break;
            }
        }
        return out;
    }

    RescaledGeometry integer_rescale(const ScatteringGeometry &g)
    {
        RescaledGeometry out;
        out.scale = required_scale(g);
        out.geometry = scale_lengths(g, Rational(out.scale));
        return out;
    }

    DiscretizedChannel sample_channel(const ScatteringGeometry &g, std::uint64_t seed, const ChannelOptions &options)
    {
        DiscretizedChannel ch;
        ch.basis = allocate_basis(g);
        ch.seed = seed;
        ch.rank_tol = options.rank_tol;

        std::mt19937_64 rng(seed);
        ch.s11 = sample_block(ch.basis.r1, ch.basis.t1, g.r11, g.t11, rng, false);
        ch.s12 = sample_block(ch.basis.r1, ch.basis.t2, g.r12, g.t12, rng, options.corrupt_support);
        ch.s22 = sample_block(ch.basis.r2, ch.basis.t2, g.r22, g.t22, rng, false);
        return ch;
    }

    bool OperatorDimsReport::all_pass() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck &c) { return c.pass(); });
    }

    OperatorDimsReport verify_operator_dims(const DiscretizedChannel &ch, const ScatteringGeometry &g)
    {
        const auto &L = g.lengths;
        const double tol = ch.rank_tol;

        const Rational t1_11 = L.l_t1 * measure(g.t11);
        const Rational r1_11 = L.l_r1 * measure(g.r11);
        const Rational t2_22 = L.l_t2 * measure(g.t22);
        const Rational r2_22 = L.l_r2 * measure(g.r22);
        const Rational t2_12 = L.l_t2 * measure(g.t12);
        const Rational r1_12 = L.l_r1 * measure(g.r12);

        const Rational range11 = 2 * rmin(t1_11, r1_11);
        const Rational range12 = 2 * rmin(t2_12, r1_12);
        const Rational range22 = 2 * rmin(t2_22, r2_22);
        const Rational null12 = 2 * L.l_t2 * measure(set_difference(g.t22, g.t12)) + 2 * positive_part(t2_12 - r1_12);
        const Rational codim11 = 2 * L.l_r1 * measure(set_difference(g.r12, g.r11)) + 2 * positive_part(r1_11 - t1_11);

        const long dim_t1 = static_cast<long>(ch.basis.t1.dimension);
        const long dim_t2 = static_cast<long>(ch.basis.t2.dimension);
        const long dim_r1 = static_cast<long>(ch.basis.r1.dimension);
        const long dim_r2 = static_cast<long>(ch.basis.r2.dimension);

        const long rank11 = numerical_rank(ch.s11, tol);
        const long rank12 = numerical_rank(ch.s12, tol);
        const long rank22 = numerical_rank(ch.s22, tol);

        OperatorDimsReport rep;
        rep.checks = {
            {"rank(S11)", to_long(range11), rank11},
            {"rank(S12)", to_long(range12), rank12},
            {"rank(S22)", to_long(range22), rank22},
            {"nullity(S11)", dim_t1 - to_long(range11), dim_t1 - rank11},
            {"nullity(S12)", to_long(null12), dim_t2 - rank12},
            {"nullity(S22)", dim_t2 - to_long(range22), dim_t2 - rank22},
            {"codim R(S11)", to_long(codim11), dim_r1 - rank11},
            {"codim R(S12)", dim_r1 - to_long(range12), dim_r1 - rank12},
            {"codim R(S22)", dim_r2 - to_long(range22), dim_r2 - rank22},
        };
        rep.ill_conditioned =
            rank_is_fragile(ch.s11, tol) || rank_is_fragile(ch.s12, tol) || rank_is_fragile(ch.s22, tol);
        return rep;
    }

    bool orthogonal_construction_applies(const ScatteringGeometry &g)
    {
        const auto &L = g.lengths;
        return L.l_t1 * measure(g.t11) >= L.l_r1 * measure(g.r11) &&
               L.l_t2 * measure(g.t12) >= L.l_r1 * measure(g.r12);
    }

    ZeroForcingResult zero_forcing_corner(const DiscretizedChannel &ch, const ScatteringGeometry &)
    {
        const double tol = ch.rank_tol;
        const Eigen::Index n2 = ch.s12.cols();
        const Eigen::Index m1 = ch.s12.rows();
        const double norm22 = spectral_norm(ch.s22);

        ZeroForcingResult out;
        out.ill_conditioned =
            rank_is_fragile(ch.s11, tol) || rank_is_fragile(ch.s12, tol) || rank_is_fragile(ch.s22, tol);

        const ComplexMatrix uplink = range_basis(ch.s11, tol); // R(s11)
        out.d1 = uplink.cols();

        const ComplexMatrix null12 = null_basis(ch.s12, tol);
        const ComplexMatrix range12 = range_basis(ch.s12, tol);
        std::optional<Eigen::JacobiSVD<ComplexMatrix>> s12_svd;
        if (m1 > 0 && n2 > 0)
            s12_svd.emplace(ch.s12, Eigen::ComputeThinU | Eigen::ComputeThinV);

        // Least-squares preimages under s12.
        auto solve_s12 = [&](const ComplexMatrix &targets) -> ComplexMatrix
        {
            if (targets.cols() == 0 || !s12_svd)
                return ComplexMatrix(n2, 0);
            return s12_svd->solve(targets);
        };
        auto rank22 = [&](const ComplexMatrix &basis) -> long
        {
            if (basis.cols() == 0 || norm22 == 0.0)
                return 0;
            return numerical_rank(ch.s22 * basis, tol, norm22);
        };

        // Orthogonal construction: P12 = N(s12) + s12^+ (R(s11)^perp n R(s12)).
        {
            const ComplexMatrix uplink_perp = complement_basis(uplink, tol);
            const ComplexMatrix reachable = intersection_basis(uplink_perp, range12, tol);
            out.preimage_basis = join_basis(null12, solve_s12(reachable), tol);
            out.d2_orthogonal = std::min<long>(rank22(out.preimage_basis), ch.s22.rows());
            out.leakage_orthogonal = max_leakage(uplink, ch.s12, out.preimage_basis);
        }

        // General construction.
        {
            // Preimage of R(s11): the directions whose interference would be inseparable.
            const ComplexMatrix shared = intersection_basis(range12, uplink, tol);
            const ComplexMatrix blocked = join_basis(null12, solve_s12(shared), tol);

            // Part of N(s12) that R2 can see.
            const ComplexMatrix null22 = null_basis(ch.s22, tol);
            const ComplexMatrix silent = intersection_basis(null12, null22, tol);
            const ComplexMatrix free_null = intersection_basis(null12, complement_basis(silent, tol), tol);
            const long base = free_null.cols();
            const long blocked_dim = blocked.cols();

            std::mt19937_64 rng(ch.seed ^ 0x9e3779b97f4a7c15ULL);
            const ComplexMatrix generic = random_gaussian(n2, n2, rng);

            auto candidate = [&](long extra)
            {
                ComplexMatrix p(n2, base + extra);
                p << free_null, generic.leftCols(extra);
                return p;
            };
            auto feasible = [&](long extra)
            {
                ComplexMatrix p = candidate(extra);
                if (rank22(p) != base + extra)
                    return false;
                ComplexMatrix with_blocked(n2, p.cols() + blocked_dim);
                with_blocked << p, blocked;
                // p n blocked must stay inside N(s12), which contributes exactly `base`.
                return numerical_rank(with_blocked, tol) == extra + blocked_dim;
            };

            // Feasibility is inherited by sub-subspaces, so the largest extra is found by bisection.
            long lo = 0;
            long hi = static_cast<long>(n2) - base;
            while (lo < hi)
            {
                long mid = (lo + hi + 1) / 2;
                if (feasible(mid))
                    lo = mid;
                else
                    hi = mid - 1;
            }

            out.transmit_basis = range_basis(candidate(lo), tol);
            out.d2 = std::min<long>(rank22(out.transmit_basis), ch.s22.rows());

            // Against |s12|: a numerically zero image must give an empty interference basis.
            const ComplexMatrix interference = range_basis(ch.s12 * out.transmit_basis, tol, spectral_norm(ch.s12));
            out.receive_filter = complement_basis(interference, tol);
            const double norm11 = spectral_norm(ch.s11);
            out.filtered_uplink_rank =
                norm11 == 0.0 || out.receive_filter.cols() == 0
                    ? 0
                    : numerical_rank(out.receive_filter.adjoint() * ch.s11, tol, norm11);
            out.leakage = max_leakage(out.receive_filter, ch.s12, out.transmit_basis);
        }
        return out;
    }
}
