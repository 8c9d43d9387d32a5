// Copyright the hodge-precond authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef HODGE_LDLT_HPP
#define HODGE_LDLT_HPP

#include <span>
#include <vector>
#include "hodge/sparse.hpp"

namespace hodge
{

enum class Ordering
{
  Natural,
  MinimumDegree
};

//
// Sparse LDL^T factorization P M P^T = L D L^T of a symmetric positive definite matrix,
// with L unit lower triangular and a fill-reducing permutation P. Immutable after
// construction and safe to share between threads.
//
class SymmetricFactorization
{
public:
  // Throws NotSpdError on a pivot below 1e-14 * max |diag(M)|.
  explicit SymmetricFactorization(const SparseMatrix &m,
                                  Ordering ordering = Ordering::MinimumDegree);

  Index Size() const { return n; }

  // Number of strictly lower entries of L.
  std::size_t FactorNonZeros() const { return lx.size(); }

  // Elimination order: position i of the factorization holds original index Permutation()[i].
  const std::vector<Index> &Permutation() const { return perm; }
  const std::vector<double> &Pivots() const { return d; }

  Vector Solve(std::span<const double> b) const;
  void Solve(std::span<const double> b, std::span<double> x) const;

private:
  Index n = 0;
  std::vector<Index> perm;
  std::vector<Index> lp, li;
  std::vector<double> lx, d;
};

SymmetricFactorization ldlt_factorize(const SparseMatrix &m);

}  // namespace hodge

#endif  // HODGE_LDLT_HPP
