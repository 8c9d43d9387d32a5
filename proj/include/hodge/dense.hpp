// Copyright the hodge-precond authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef HODGE_DENSE_HPP
#define HODGE_DENSE_HPP

#include <Eigen/Dense>
#include "hodge/common.hpp"

namespace hodge
{

// Largest dimension accepted by the dense spectral routines.
inline constexpr Index kDenseCap = 2000;

struct GeneralizedEigensystem
{
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // B-orthonormal columns
};

// Eigenvalues of A x = lambda B x for symmetric A and SPD B, ascending. Throws
// std::invalid_argument if B is not SPD and SizeError above `cap`.
Vector dense_generalized_eigs(const Eigen::MatrixXd &a, const Eigen::MatrixXd &b,
                              Index cap = kDenseCap);

GeneralizedEigensystem dense_generalized_eigensystem(const Eigen::MatrixXd &a,
                                                     const Eigen::MatrixXd &b,
                                                     Index cap = kDenseCap);

// Orthonormal basis of the null space of m, from a column-pivoted QR of m^T. For the
// integer incidence matrices used here the rank decision is exact.
Eigen::MatrixXd null_space(const Eigen::MatrixXd &m);

// Orthonormal basis of {x : c^T x = 0}; c may have zero columns.
Eigen::MatrixXd orthogonal_complement(const Eigen::MatrixXd &c, Index n);

}  // namespace hodge

#endif  // HODGE_DENSE_HPP
