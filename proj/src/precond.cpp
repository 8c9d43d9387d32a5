// Copyright the hodge-precond authors.
// SPDX-License-Identifier: Apache-2.0

#include "hodge/precond.hpp"

#include <cmath>

namespace hodge
{

namespace
{

void CheckArguments(const DeRhamComplex &complex, int k, double alpha)
{
  if (k < 1 || k > complex.Dim())
  {
    throw std::invalid_argument("preconditioner: degree must satisfy 1 <= k <= n");
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha))
  {
    throw std::invalid_argument("preconditioner: alpha must be positive");
  }
}

}  // namespace

SparseMatrix preconditioner_v_block(const DeRhamComplex &complex, int k, double alpha)
{
  CheckArguments(complex, k, alpha);
  return add_scaled(complex.Stiffness(k), complex.Mass(k), 1.0 / (1.0 + alpha));
}

SparseMatrix preconditioner_q_block(const DeRhamComplex &complex, int k, double alpha)
{
  CheckArguments(complex, k, alpha);
  return add_scaled(scaled(complex.Mass(k - 1), alpha), complex.Stiffness(k - 1), 1.0 + alpha);
}

BlockPreconditioner::BlockPreconditioner(const DeRhamComplex &complex, int k_, double alpha_)
  : k(k_), alpha(alpha_), pv_matrix(preconditioner_v_block(complex, k_, alpha_)),
    pq_matrix(preconditioner_q_block(complex, k_, alpha_)), pv(pv_matrix), pq(pq_matrix)
{
}

void BlockPreconditioner::Apply(std::span<const double> r, std::span<double> z) const
{
  const auto nu = static_cast<std::size_t>(NumU()), np = static_cast<std::size_t>(NumP());
  if (r.size() != nu + np || z.size() != nu + np)
  {
    throw std::invalid_argument("BlockPreconditioner::Apply: length mismatch");
  }
  pv.Solve(r.subspan(0, nu), z.subspan(0, nu));
  pq.Solve(r.subspan(nu, np), z.subspan(nu, np));
}

Vector BlockPreconditioner::Apply(std::span<const double> r) const
{
  Vector z(r.size());
  Apply(r, z);
  return z;
}

BlockPreconditioner build_preconditioner(const DeRhamComplex &complex, int k, double alpha)
{
  return BlockPreconditioner(complex, k, alpha);
}

}  // namespace hodge
