// Copyright the hodge-precond authors.
// SPDX-License-Identifier: Apache-2.0

#include "hodge/oracle.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace hodge
{

namespace
{

Eigen::MatrixXd SolveSpd(const Eigen::MatrixXd &a, const Eigen::MatrixXd &rhs, const char *what)
{
  Eigen::LLT<Eigen::MatrixXd> llt(a);
  if (llt.info() != Eigen::Success)
  {
    throw NotSpdError(std::string(what) + " is not SPD");
  }
  return llt.solve(rhs);
}

Eigen::MatrixXd Sym(const Eigen::MatrixXd &a)
{
  return 0.5 * (a + a.transpose());
}

void CheckCap(Index n, Index cap, const std::string &what)
{
  if (n > cap)
  {
    throw SizeError(what + ": " + std::to_string(n) + " degrees of freedom exceed the dense cap " +
                    std::to_string(cap));
  }
}

}  // namespace

DenseBlocks::DenseBlocks(const DeRhamComplex &complex, int k_, Index cap) : k(k_)
{
  const int n = complex.Dim();
  if (k < 1 || k > n)
  {
    throw std::invalid_argument("DenseBlocks: degree must satisfy 1 <= k <= n");
  }
  CheckCap(complex.Size(k) + complex.Size(k - 1), cap, "DenseBlocks");
  mass_prev = to_dense(complex.Mass(k - 1));
  mass = to_dense(complex.Mass(k));
  d_prev = to_dense(complex.Coboundary(k - 1));
  stiff = to_dense(complex.Stiffness(k));
  if (k < n)
  {
    d = to_dense(complex.Coboundary(k));
    mass_next = to_dense(complex.Mass(k + 1));
  }
  else
  {
    d = Eigen::MatrixXd::Zero(0, mass.rows());
    mass_next = Eigen::MatrixXd::Zero(0, 0);
  }
  stiff_prev = Sym(d_prev.transpose() * mass * d_prev);
  coupling = d_prev.transpose() * mass;
  const Eigen::MatrixXd kernel = null_space(d_prev);
  q_complement = orthogonal_complement(mass_prev * kernel, complex.Size(k - 1));
}

NormMatrices norm_matrices(const DenseBlocks &b, double alpha)
{
  if (!(alpha > 0.0))
  {
    throw std::invalid_argument("norm_matrices: alpha must be positive");
  }
  NormMatrices nm;
  nm.alpha = alpha;
  nm.NV = b.mass / (1.0 + alpha) + b.stiff;
  nm.NQ = alpha * b.mass_prev + (1.0 + alpha) * b.stiff_prev;
  nm.NV_fitted = Sym(b.stiff + b.coupling.transpose() * SolveSpd(nm.NQ, b.coupling, "NQ"));
  return nm;
}

double poincare_constant(const DeRhamComplex &complex, int k, Index cap)
{
  const int n = complex.Dim();
  if (k < 0 || k > n)
  {
    throw std::invalid_argument("poincare_constant: degree must satisfy 0 <= k <= n");
  }
  if (k == n)
  {
    return 0.0;  // d_n = 0, so no constraint to control
  }
  CheckCap(complex.Size(k), cap, "poincare_constant");
  const Eigen::MatrixXd m = to_dense(complex.Mass(k));
  const Eigen::MatrixXd d = to_dense(complex.Coboundary(k));
  const Eigen::MatrixXd a = Sym(d.transpose() * to_dense(complex.Mass(k + 1)) * d);
  const Eigen::MatrixXd z = orthogonal_complement(m * null_space(d), complex.Size(k));
  const Vector eigs =
      dense_generalized_eigs(Sym(z.transpose() * a * z), Sym(z.transpose() * m * z), cap);
  return 1.0 / eigs.front();
}

HodgeParts hodge_decompose(const DenseBlocks &b, std::span<const double> v)
{
  if (v.size() != static_cast<std::size_t>(b.mass.rows()))
  {
    throw std::invalid_argument("hodge_decompose: length mismatch");
  }
  const Eigen::Map<const Eigen::VectorXd> vv(v.data(), static_cast<Eigen::Index>(v.size()));
  const Eigen::MatrixXd dz = b.d_prev * b.q_complement;
  const Eigen::MatrixXd gram = Sym(dz.transpose() * b.mass * dz);
  const Eigen::VectorXd coeff = SolveSpd(gram, dz.transpose() * (b.mass * vv), "range Gram matrix");
  const Eigen::VectorXd w = b.q_complement * coeff;
  const Eigen::VectorXd z = vv - b.d_prev * w;
  return {Vector(w.data(), w.data() + w.size()), Vector(z.data(), z.data() + z.size())};
}

Eigen::MatrixXd range_projection(const DenseBlocks &b)
{
  const Eigen::MatrixXd dz = b.d_prev * b.q_complement;
  const Eigen::MatrixXd gram = Sym(dz.transpose() * b.mass * dz);
  return dz * SolveSpd(gram, dz.transpose() * b.mass, "range Gram matrix");
}

double inf_sup_constant(const DenseBlocks &b, const NormMatrices &norms)
{
  const Eigen::MatrixXd &z = b.q_complement;
  const Eigen::MatrixXd bz = b.coupling.transpose() * z;  // Bmat^T Z
  const Eigen::MatrixXd num = Sym(bz.transpose() * SolveSpd(norms.NV_fitted, bz, "NV_fitted"));
  const Eigen::MatrixXd den = Sym((1.0 + norms.alpha) * (z.transpose() * b.stiff_prev * z));
  return std::sqrt(dense_generalized_eigs(num, den, static_cast<Index>(num.rows())).front());
}

FlippedResult flipped_inf_sup_constant(const DenseBlocks &b, double alpha)
{
  if (!(alpha >= 0.0))
  {
    throw std::invalid_argument("flipped_inf_sup_constant: alpha must be non-negative");
  }
  const Eigen::MatrixXd &z = b.q_complement;
  const Eigen::MatrixXd dz = b.d_prev * z;
  const Eigen::MatrixXd gram = Sym(dz.transpose() * b.mass * dz);
  const Eigen::MatrixXd mdz = b.mass * dz;
  // Gram matrix of the seminorm ||Pi v||^2.
  const Eigen::MatrixXd proj = Sym(mdz * SolveSpd(gram, mdz.transpose(), "range Gram matrix"));

  // Solve with Vbar in the basis [range(D_{k-1}), its M-complement]. D_k D_{k-1} is an exact
  // integer zero, so the stiffness never leaks into the range block; forming Vbar directly
  // loses about alpha / h^2 ulps there.
  const Index nk = static_cast<Index>(b.mass.rows());
  const Eigen::MatrixXd w = orthogonal_complement(mdz, nk);
  Eigen::MatrixXd t(nk, dz.cols() + w.cols());
  t << dz, w;
  Eigen::MatrixXd tvt = t.transpose() * proj * t / (1.0 + alpha);
  if (b.d.rows() > 0)
  {
    Eigen::MatrixXd dt(b.d.rows(), t.cols());
    dt << (b.d * b.d_prev) * z, b.d * w;
    tvt += dt.transpose() * b.mass_next * dt;
  }
  tvt = Sym(tvt);

  FlippedResult out;
  const Eigen::MatrixXd bt = b.coupling.transpose();
  const Eigen::MatrixXd x = t * SolveSpd(tvt, t.transpose() * bt, "flipped V norm");
  out.NQ_flipped = Sym(alpha * b.mass_prev + b.coupling * x);

  // q ranges over the complement of ker D_{k-1}; v over range(D_{k-1}).
  const Eigen::MatrixXd qz = Sym(z.transpose() * out.NQ_flipped * z);
  const Eigen::MatrixXd bvz = z.transpose() * b.coupling * dz;
  const Eigen::MatrixXd num = Sym(bvz.transpose() * SolveSpd(qz, bvz, "flipped Q norm"));
  const Eigen::MatrixXd den = gram / (1.0 + alpha);
  out.beta = std::sqrt(dense_generalized_eigs(num, den, static_cast<Index>(num.rows())).front());
  return out;
}

std::pair<double, double> norm_equivalence_constants(const NormMatrices &norms)
{
  const Vector e = dense_generalized_eigs(norms.NV_fitted, norms.NV,
                                          static_cast<Index>(norms.NV.rows()));
  return {e.front(), e.back()};
}

double preconditioned_condition_number(const Eigen::MatrixXd &system, const Eigen::MatrixXd &norm,
                                       Index cap)
{
  const Vector e = dense_generalized_eigs(system, norm, cap);
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (double l : e)
  {
    lo = std::min(lo, std::abs(l));
    hi = std::max(hi, std::abs(l));
  }
  if (hi == 0.0 || lo <= 1e-12 * hi)
  {
    return std::numeric_limits<double>::infinity();
  }
  return hi / lo;
}

double preconditioned_condition_number(const SaddleSystem &system, const NormMatrices &norms,
                                       Index cap)
{
  CheckCap(system.Size(), cap, "preconditioned_condition_number");
  const Index nu = system.NumU(), np = system.NumP();
  Eigen::MatrixXd n = Eigen::MatrixXd::Zero(nu + np, nu + np);
  n.topLeftCorner(nu, nu) = norms.NV;
  n.bottomRightCorner(np, np) = norms.NQ;
  return preconditioned_condition_number(to_dense(system.Assembled()), n, cap);
}

bool SpectralReport::InfSupHolds() const
{
  return beta >= 1.0 - 1e-8;
}

bool SpectralReport::EquivalenceHolds() const
{
  const double c1 = 1.0 + std::max(poincare.at(k), poincare.at(k - 1));
  return equivalence_high / equivalence_low <= c1 + 1e-6;
}

bool SpectralReport::FlippedHolds() const
{
  return beta_flipped >= 1.0 / std::sqrt(poincare.at(k - 1) + 1.0) - 1e-8;
}

bool SpectralReport::FlippedNormMatches() const
{
  return flipped_q_error <= 1e-10;
}

SpectralReport spectral_report(const DeRhamComplex &complex, const DenseBlocks &blocks,
                               double alpha, const std::map<int, double> &poincare)
{
  SpectralReport r;
  r.k = blocks.k;
  r.alpha = alpha;
  r.poincare[r.k - 1] = poincare.contains(r.k - 1) ? poincare.at(r.k - 1)
                                                   : poincare_constant(complex, r.k - 1);
  r.poincare[r.k] = poincare.contains(r.k) ? poincare.at(r.k) : poincare_constant(complex, r.k);
  const NormMatrices norms = norm_matrices(blocks, alpha);
  const SaddleSystem system = assemble_system(complex, r.k, alpha);
  r.kappa = preconditioned_condition_number(system, norms);
  r.beta = inf_sup_constant(blocks, norms);
  const FlippedResult flipped = flipped_inf_sup_constant(blocks, alpha);
  r.beta_flipped = flipped.beta;
  r.flipped_q_error = (flipped.NQ_flipped - norms.NQ).norm() / norms.NQ.norm();
  std::tie(r.equivalence_low, r.equivalence_high) = norm_equivalence_constants(norms);
  return r;
}

}  // namespace hodge
