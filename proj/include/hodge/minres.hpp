// Copyright the hodge-precond authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef HODGE_MINRES_HPP
#define HODGE_MINRES_HPP

#include <functional>
#include <span>
#include <utility>
#include "hodge/precond.hpp"
#include "hodge/system.hpp"

namespace hodge
{

using LinearOperator = std::function<void(std::span<const double>, std::span<double>)>;

struct MinresOptions
{
  double tol = 1e-7;
  int maxiter = 200;
};

struct SolveReport
{
  int iterations = 0;
  double final_relres = 0.0;  // ||b - A x|| / ||b||, recomputed explicitly
  Vector residual_history;    // true relative residual, one entry per iterate incl. x_0
  Vector preconditioned_residual_history;  // ||r||_{P} estimate from the recurrence
  bool converged = false;
};

// Preconditioned MINRES from x = 0. `precond` must be SPD. Stops when the explicitly
// recomputed unpreconditioned relative residual drops below tol. Throws BreakdownError if
// the Lanczos process terminates with the residual above tol, or if the preconditioner is
// found to be indefinite.
SolveReport minres(const LinearOperator &op, const LinearOperator &precond,
                   std::span<const double> b, std::span<double> x,
                   const MinresOptions &options = {});

std::pair<Vector, SolveReport> minres_solve(const SaddleSystem &system,
                                            const BlockPreconditioner &precond,
                                            double tol = 1e-7, int maxiter = 200);

}  // namespace hodge

#endif  // HODGE_MINRES_HPP
