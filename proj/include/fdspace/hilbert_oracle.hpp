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

#ifndef FDSPACE_HILBERT_ORACLE_HPP
#define FDSPACE_HILBERT_ORACLE_HPP

#include "fdspace/dof_region.hpp"
#include "fdspace/subspace.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

/// Finite-dimensional stand-in for the Hilbert-space channel.
///
/// Every signal space (T1, T2, R1, R2) is split into refinement atoms of its scattering
/// intervals; an atom of width w seen by an array of half-length L receives 2Lw
/// orthonormal basis functions. The scattering operators become complex matrices whose
/// entries are nonzero only where the row atom lies in the receive interval and the
/// column atom in the transmit interval of that link. Nonzero entries are i.i.d.
/// standard complex normal, so generic-rank statements hold with probability one.
namespace fdspace
{
    enum class SignalSpace
    {
        t1,
        t2,
        r1,
        r2,
    };

    std::string to_string(SignalSpace s);

    struct BasisAtom
    {
        DirectionSet atom;
        std::size_t offset = 0; // first basis index of the atom within its space
        std::size_t dims = 0;
    };

    struct SpaceBasis
    {
        SignalSpace space = SignalSpace::t1;
        Rational half_length = 0;
        std::vector<BasisAtom> atoms;
        std::size_t dimension = 0;
    };

    struct BasisAllocation
    {
        SpaceBasis t1, t2, r1, r2;
    };

    // An atom whose dimension 2L|atom| is not an integer.
    class QuantizationError : public std::runtime_error
    {
    public:
        QuantizationError(SignalSpace space, DirectionSet atom, Rational dimension, BigInt suggested_scale);

        SignalSpace space() const { return space_; }
        const DirectionSet &atom() const { return atom_; }
        const Rational &dimension() const { return dimension_; }
        // Least integer factor on all lengths that makes every atom dimension integral.
        const BigInt &suggested_scale() const { return suggested_scale_; }

    private:
        SignalSpace space_;
        DirectionSet atom_;
        Rational dimension_;
        BigInt suggested_scale_;
    };

    // Per-space totals equal 2 L_Tj |T_jj u T_ij| and 2 L_Ri |R_ii u R_ij|.
    // Throws QuantizationError on a non-integral atom and std::length_error when a
    // space would exceed max_dimension basis functions.
    BasisAllocation allocate_basis(const ScatteringGeometry &g, std::size_t max_dimension = 4096);

    struct RescaledGeometry
    {
        ScatteringGeometry geometry;
        BigInt scale = 1;
    };

    // Multiplies all lengths by the least positive integer that makes every atom
    // dimension integral.
    RescaledGeometry integer_rescale(const ScatteringGeometry &g);

    struct ChannelOptions
    {
        double rank_tol = 1e-9;
        // Negative control: fill s12 outside its support pattern.
        bool corrupt_support = false;
    };

    struct DiscretizedChannel
    {
        BasisAllocation basis;
        ComplexMatrix s11; // R1 x T1
        ComplexMatrix s12; // R1 x T2
        ComplexMatrix s22; // R2 x T2
        std::uint64_t seed = 0;
        double rank_tol = 1e-9;
    };

    // Deterministic in (g, seed, options). Propagates QuantizationError.
    DiscretizedChannel sample_channel(const ScatteringGeometry &g, std::uint64_t seed,
                                      const ChannelOptions &options = {});

    struct IdentityCheck
    {
        std::string name;
        long expected = 0;
        long observed = 0;

        bool pass() const { return expected == observed; }
    };

    struct OperatorDimsReport
    {
        std::vector<IdentityCheck> checks;
        bool ill_conditioned = false;

        bool all_pass() const;
    };

    // Numerical rank, nullity and column-space codimension of s11, s12 and s22 against
    // the closed-form operator dimensions.
    OperatorDimsReport verify_operator_dims(const DiscretizedChannel &ch, const ScatteringGeometry &g);

    struct ZeroForcingResult
    {
        long d1 = 0;
        long d2 = 0;

        // Transmit subspace of T2 and the receive filter at R1 that removes its interference.
        ComplexMatrix transmit_basis;
        ComplexMatrix receive_filter;
        // rank of the desired uplink signal after the receive filter; must equal d1.
        long filtered_uplink_rank = 0;
        // max over transmit basis vectors x of |F^H s12 x| / (|x| |s12|), F the receive filter.
        double leakage = 0.0;

        // Preimage construction P12 = s12^{-1}(R(s11)^perp).
        long d2_orthogonal = 0;
        ComplexMatrix preimage_basis;
        // max over x in P12 of |proj_{R(s11)} s12 x| / (|x| |s12|).
        double leakage_orthogonal = 0.0;

        bool ill_conditioned = false;
    };

    // Zero-forcing corner with the uplink at full rate.
    //
    // Two transmit subspaces for T2 are built. The preimage P12 of R(s11)^perp under s12 is
    // the orthogonal construction; it reaches the corner whenever
    // orthogonal_construction_applies(g). The general construction keeps only the
    // requirement that s12 X2 be linearly independent of R(s11): it takes the part of
    // N(s12) that R2 can see plus a generic complement of the preimage of R(s11), grown as
    // far as s22 stays injective. R1 then filters onto the orthogonal complement of the
    // interference. (d1, d2) report the general construction.
    ZeroForcingResult zero_forcing_corner(const DiscretizedChannel &ch, const ScatteringGeometry &g);

    // L_T1 |T11| >= L_R1 |R11| and L_T2 |T12| >= L_R1 |R12|: R(s11) fills R11 and s12 is
    // onto R12, which is when orthogonal zero-forcing is already optimal.
    bool orthogonal_construction_applies(const ScatteringGeometry &g);
}

#endif
