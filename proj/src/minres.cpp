// Copyright the hodge-precond authors.
// SPDX-License-Identifier: Apache-2.0

#include "hodge/minres.hpp"

#include <cmath>
#include <string>

namespace hodge
{

SolveReport minres(const LinearOperator &op, const LinearOperator &precond,
                   std::span<const double> b, std::span<double> x, const MinresOptions &options)
{
  const std::size_t n = b.size();
  if (x.size() != n)
  {
    throw std::invalid_argument("minres: length mismatch");
  }
  std::fill(x.begin(), x.end(), 0.0);
  SolveReport report;
  const double bnorm = norm2(b);
  if (bnorm == 0.0)
  {
    report.residual_history = {0.0};
    report.preconditioned_residual_history = {0.0};
    report.converged = true;
    return report;
  }

  Vector v_prev(n, 0.0), v(b.begin(), b.end()), v_next(n);
  Vector z(n), az(n), w_prev(n, 0.0), w(n, 0.0), w_next(n), r(n), ax(n);
  precond(v, z);
  double gamma_sq = dot(z, v);
  if (!(gamma_sq > 0.0))
  {
    throw BreakdownError("minres: preconditioner is not positive definite");
  }
  double gamma = std::sqrt(gamma_sq), gamma_prev = 1.0;
  double eta = gamma;
  double s_prev = 0.0, s = 0.0, c_prev = 1.0, c = 1.0;
  report.residual_history.push_back(1.0);
  report.preconditioned_residual_history.push_back(std::abs(eta));

  for (int it = 1; it <= options.maxiter; ++it)
  {
    for (double &zi : z)
    {
      zi /= gamma;
    }
    op(z, az);
    const double delta = dot(az, z);
    for (std::size_t i = 0; i < n; ++i)
    {
      v_next[i] = az[i] - (delta / gamma) * v[i] - (gamma / gamma_prev) * v_prev[i];
    }
    Vector z_next(n);
    precond(v_next, z_next);
    const double gamma_next_sq = dot(z_next, v_next);
    if (gamma_next_sq < 0.0)
    {
      throw BreakdownError("minres: preconditioner is not positive definite");
    }
    const double gamma_next = std::sqrt(gamma_next_sq);

    // Apply the previous two rotations and build the new one.
    const double a0 = c * delta - c_prev * s * gamma;
    const double a1 = std::sqrt(a0 * a0 + gamma_next * gamma_next);
    const double a2 = s * delta + c_prev * c * gamma;
    const double a3 = s_prev * gamma;
    if (a1 == 0.0)
    {
      throw BreakdownError("minres: singular tridiagonal factor at iteration " +
                           std::to_string(it));
    }
    const double c_next = a0 / a1, s_next = gamma_next / a1;
    for (std::size_t i = 0; i < n; ++i)
    {
      w_next[i] = (z[i] - a3 * w_prev[i] - a2 * w[i]) / a1;
      x[i] += c_next * eta * w_next[i];
    }
    eta = -s_next * eta;

    op(x, ax);
    for (std::size_t i = 0; i < n; ++i)
    {
      r[i] = b[i] - ax[i];
    }
    const double relres = norm2(r) / bnorm;
    report.iterations = it;
    report.final_relres = relres;
    report.residual_history.push_back(relres);
    report.preconditioned_residual_history.push_back(std::abs(eta));
    if (relres <= options.tol)
    {
      report.converged = true;
      return report;
    }
    // Invariant Krylov subspace, up to roundoff in the three-term recurrence.
    if (gamma_next <= 1e-14 * (std::abs(delta) + gamma))
    {
      throw BreakdownError("minres: Lanczos breakdown at iteration " + std::to_string(it) +
                           " with relative residual " + std::to_string(relres));
    }

    std::swap(v_prev, v);
    std::swap(v, v_next);
    z = std::move(z_next);
    std::swap(w_prev, w);
    std::swap(w, w_next);
    gamma_prev = gamma;
    gamma = gamma_next;
    c_prev = c;
    c = c_next;
    s_prev = s;
    s = s_next;
  }
  return report;
}

std::pair<Vector, SolveReport> minres_solve(const SaddleSystem &system,
                                            const BlockPreconditioner &precond, double tol,
                                            int maxiter)
{
  if (system.NumU() != precond.NumU() || system.NumP() != precond.NumP() ||
      system.k != precond.Degree())
  {
    throw std::invalid_argument("minres_solve: system and preconditioner do not match");
  }
  const Vector b = system.Rhs();
  Vector x(b.size());
  auto op = [&system](std::span<const double> in, std::span<double> out)
  { system.Apply(in, out); };
  auto pre = [&precond](std::span<const double> in, std::span<double> out)
  { precond.Apply(in, out); };
  SolveReport report = minres(op, pre, b, x, {tol, maxiter});
  return {std::move(x), std::move(report)};
}

}  // namespace hodge
