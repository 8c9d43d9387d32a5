// Copyright the hodge-precond authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef HODGE_PRECOND_HPP
#define HODGE_PRECOND_HPP

#include <span>
#include "hodge/complex.hpp"
#include "hodge/ldlt.hpp"

namespace hodge
{

//
// Block-diagonal preconditioner for the mixed Hodge-Laplace system at degree k:
//
//   P = diag( (1+alpha)^{-1} M_k + D_k^T M_{k+1} D_k,
//             alpha M_{k-1} + (1+alpha) D_{k-1}^T M_k D_{k-1} )^{-1},
//
// applied exactly through sparse LDL^T factorizations of both blocks. The stiffness term
// of the first block vanishes at k = n.
//
class BlockPreconditioner
{
public:
  BlockPreconditioner(const DeRhamComplex &complex, int k, double alpha);

  int Degree() const { return k; }
  double Alpha() const { return alpha; }
  Index NumU() const { return pv_matrix.Rows(); }
  Index NumP() const { return pq_matrix.Rows(); }

  const SparseMatrix &VBlock() const { return pv_matrix; }
  const SparseMatrix &QBlock() const { return pq_matrix; }

  // (PV^{-1} r_u, PQ^{-1} r_p) for a stacked residual.
  void Apply(std::span<const double> r, std::span<double> z) const;
  Vector Apply(std::span<const double> r) const;

private:
  int k;
  double alpha;
  SparseMatrix pv_matrix, pq_matrix;
  SymmetricFactorization pv, pq;
};

BlockPreconditioner build_preconditioner(const DeRhamComplex &complex, int k, double alpha);

// The two SPD block matrices without factoring them.
SparseMatrix preconditioner_v_block(const DeRhamComplex &complex, int k, double alpha);
SparseMatrix preconditioner_q_block(const DeRhamComplex &complex, int k, double alpha);

}  // namespace hodge

#endif  // HODGE_PRECOND_HPP
