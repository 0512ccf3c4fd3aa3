// Copyright 2026 The platgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PLATGATE_CABLE_HPP
#define PLATGATE_CABLE_HPP

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <string>

#include "platgate/core.hpp"

namespace platgate {

using Matrix3c = Eigen::Matrix3cd;
using Matrix3r = Eigen::Matrix3d;

/// Fusion channels of a pair of adjoint cables, in basis order.
enum class CableChannel { Trivial = 0, Adjoint = 1, FourBox = 2 };

/// Which braiding matrix a crossing of two adjoint cables uses.
///   SameComponentParallel     -> T     = q^-4 R
///   SameComponentAntiparallel -> T-bar = R
///   DifferentComponents       -> T_i   = q^-8 R
enum class CrossingKind { SameComponentParallel, SameComponentAntiparallel, DifferentComponents };

inline constexpr std::array<CrossingKind, 3> kAllCrossingKinds{
    CrossingKind::SameComponentParallel, CrossingKind::SameComponentAntiparallel, CrossingKind::DifferentComponents};

inline const char* to_string(CrossingKind kind) {
    switch (kind) {
        case CrossingKind::SameComponentParallel:
            return "parallel";
        case CrossingKind::SameComponentAntiparallel:
            return "antiparallel";
        case CrossingKind::DifferentComponents:
            return "different";
    }
    return "?";
}

struct CableSet {
    Matrix3c r;
    Matrix3r mixing;
    Matrix3r mixing_inverse;
    Matrix3c t_parallel;
    Matrix3c t_antiparallel;
    Matrix3c t_different;
    TheoryParams params;

    const Matrix3c& diagonal(CrossingKind kind) const {
        switch (kind) {
            case CrossingKind::SameComponentParallel:
                return t_parallel;
            case CrossingKind::SameComponentAntiparallel:
                return t_antiparallel;
            case CrossingKind::DifferentComponents:
                return t_different;
        }
        return t_antiparallel;
    }

    /// Scalar relating the kind's matrix to R.
    complex prefactor(CrossingKind kind) const {
        switch (kind) {
            case CrossingKind::SameComponentParallel:
                return std::pow(params.q(), -4);
            case CrossingKind::SameComponentAntiparallel:
                return 1.0;
            case CrossingKind::DifferentComponents:
                return std::pow(params.q(), -8);
        }
        return 1.0;
    }
};

namespace detail {

inline double root_of_qint(int n, const TheoryParams& params) {
    double v = qint(n, params);
    if (v < 0.0) {
        if (v < -1e-12) {
            throw NegativeRadicand("[" + std::to_string(n) + "]_q = " + std::to_string(v) + " < 0 at k=" +
                                   std::to_string(params.level()) + "; its square root is not real");
        }
        v = 0.0;
    }
    return std::sqrt(v);
}

}  // namespace detail

/// Braiding and mixing matrices of two adjoint U_q(SU(2)) cables on the
/// channel basis (trivial, adjoint, [4]).
inline CableSet cable_matrices(const TheoryParams& params) {
    if (params.rank() != 2) {
        throw InvalidInput("the adjoint cable calculus is implemented for N=2 only, got N=" +
                           std::to_string(params.rank()));
    }
    const complex q = params.q();
    const double q2 = qint(2, params);
    const double q3 = qint(3, params);
    const double q4 = qint(4, params);
    const double q6 = qint(6, params);
    const double r3 = detail::root_of_qint(3, params);
    const double r5 = detail::root_of_qint(5, params);

    Matrix3c r = Matrix3c::Zero();
    r(0, 0) = 1.0;
    r(1, 1) = -q * q;
    r(2, 2) = std::pow(q, 6);

    const double d34 = q3 * q4;
    Matrix3r mix;
    mix << 1.0 / q3, r3 / q3, r5 / q3,                //
        r3 / q3, q6 / d34, -q2 * r3 * r5 / d34,       //
        -r5 / q3, q2 * r3 * r5 / d34, -q2 / d34;

    Matrix3r inv = mix.inverse();
    const std::string where = " at k=" + std::to_string(params.level());
    if ((mix.transpose() * mix - Matrix3r::Identity()).norm() > 1e-10) {
        throw BranchInconsistency("mixing matrix is not orthogonal" + where);
    }
    if ((inv - mix.transpose()).norm() > 1e-10) {
        throw BranchInconsistency("mixing matrix inverse disagrees with its transpose" + where);
    }

    CableSet set{r, mix, inv, std::pow(q, -4) * r, r, std::pow(q, -8) * r, params};
    return set;
}

/// Operator of one signed crossing at cable position 1, 2 or 3. Positions 1
/// and 3 are diagonal in the channel basis; position 2 is conjugated by the
/// mixing matrix.
inline Matrix3c crossing_operator(int position, CrossingKind kind, int sign, const CableSet& set) {
    if (position < 1 || position > 3) throw InvalidInput("crossing position must be 1, 2 or 3");
    if (sign != 1 && sign != -1) throw InvalidInput("crossing sign must be +1 or -1");
    Matrix3c d = set.diagonal(kind);
    if (sign < 0) {
        for (int i = 0; i < 3; ++i) d(i, i) = 1.0 / d(i, i);
    }
    if (position == 2) {
        return set.mixing.cast<complex>() * d * set.mixing_inverse.cast<complex>();
    }
    return d;
}

/// All 18 crossing operators, precomputed.
class CrossingTable {
   public:
    explicit CrossingTable(const CableSet& set) {
        for (int pos = 1; pos <= 3; ++pos) {
            for (auto kind : kAllCrossingKinds) {
                for (int sign : {-1, 1}) at(pos, kind, sign) = crossing_operator(pos, kind, sign, set);
            }
        }
    }

    const Matrix3c& operator()(int position, CrossingKind kind, int sign) const {
        return ops_[index(position, kind, sign)];
    }

   private:
    static std::size_t index(int position, CrossingKind kind, int sign) {
        return static_cast<std::size_t>((position - 1) * 6 + static_cast<int>(kind) * 2 + (sign > 0 ? 1 : 0));
    }
    Matrix3c& at(int position, CrossingKind kind, int sign) { return ops_[index(position, kind, sign)]; }

    std::array<Matrix3c, 18> ops_;
};

}  // namespace platgate

#endif  // PLATGATE_CABLE_HPP
