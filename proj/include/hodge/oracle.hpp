// Copyright the hodge-precond authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef HODGE_ORACLE_HPP
#define HODGE_ORACLE_HPP

#include <map>
#include <span>
#include <Eigen/Dense>
#include "hodge/complex.hpp"
#include "hodge/dense.hpp"
#include "hodge/system.hpp"

namespace hodge
{

//
// Dense matrices of the complex around degree k, for small meshes only. Kernel bases are
// computed once here and reused for every alpha.
//
struct DenseBlocks
{
  DenseBlocks(const DeRhamComplex &complex, int k, Index cap = kDenseCap);

  int k;
  Eigen::MatrixXd mass_prev;    // M_{k-1}
  Eigen::MatrixXd mass;         // M_k
  Eigen::MatrixXd d_prev;       // D_{k-1}
  Eigen::MatrixXd d;            // D_k, no rows at k = n
  Eigen::MatrixXd mass_next;    // M_{k+1}, empty at k = n
  Eigen::MatrixXd stiff;        // D_k^T M_{k+1} D_k, zero at k = n
  Eigen::MatrixXd stiff_prev;   // D_{k-1}^T M_k D_{k-1}
  Eigen::MatrixXd coupling;     // Bmat = D_{k-1}^T M_k
  // Orthonormal basis of the M_{k-1}-orthogonal complement of ker D_{k-1}.
  Eigen::MatrixXd q_complement;
};

struct NormMatrices
{
  double alpha = 0.0;
  Eigen::MatrixXd NV;         // (1+alpha)^{-1} M_k + D_k^T M_{k+1} D_k
  Eigen::MatrixXd NQ;         // alpha M_{k-1} + (1+alpha) D_{k-1}^T M_k D_{k-1}
  Eigen::MatrixXd NV_fitted;  // A + Bmat^T NQ^{-1} Bmat
};

NormMatrices norm_matrices(const DenseBlocks &blocks, double alpha);

// c_k^P = 1 / (smallest eigenvalue of D_k^T M_{k+1} D_k x = lambda M_k x on the
// M_k-orthogonal complement of ker D_k), for 0 <= k <= n-1. Returns 0 at k = n.
double poincare_constant(const DeRhamComplex &complex, int k, Index cap = kDenseCap);

struct HodgeParts
{
  Vector w;        // degree k-1, M-orthogonal to ker D_{k-1}
  Vector z_proxy;  // v - D_{k-1} w
};

// M_k-orthogonal split of v into range(D_{k-1}) and its complement.
HodgeParts hodge_decompose(const DenseBlocks &blocks, std::span<const double> v);

// Coefficient matrix of the M_k-orthogonal projection onto range(D_{k-1}).
Eigen::MatrixXd range_projection(const DenseBlocks &blocks);

// inf-sup constant of b(v, q) = (v, dq) for the fitted norms with NV_fitted on V and the
// Q-seminorm (1+alpha) ||dq||^2.
double inf_sup_constant(const DenseBlocks &blocks, const NormMatrices &norms);

struct FlippedResult
{
  double beta = 0.0;
  Eigen::MatrixXd NQ_flipped;  // alpha M_{k-1} + Bmat Vbar^{-1} Bmat^T
};

// inf-sup constant for the flipped norms. alpha = 0 evaluates the alpha -> 0 limit.
FlippedResult flipped_inf_sup_constant(const DenseBlocks &blocks, double alpha);

// Extreme generalized eigenvalues of NV_fitted x = lambda NV x.
std::pair<double, double> norm_equivalence_constants(const NormMatrices &norms);

// kappa = max|lambda| / min|lambda| for system x = lambda N x; infinite if singular.
double preconditioned_condition_number(const Eigen::MatrixXd &system, const Eigen::MatrixXd &norm,
                                       Index cap = kDenseCap);
double preconditioned_condition_number(const SaddleSystem &system, const NormMatrices &norms,
                                       Index cap = kDenseCap);

struct SpectralReport
{
  int k = 0;
  double alpha = 0.0;
  double kappa = 0.0;
  double beta = 0.0;
  double beta_flipped = 0.0;
  double equivalence_low = 0.0;
  double equivalence_high = 0.0;
  double flipped_q_error = 0.0;  // ||NQ_flipped - NQ|| / ||NQ||
  std::map<int, double> poincare;  // degrees k-1 and k (c_n^P = 0)

  // Lemma bounds with the discrete Poincare constants.
  bool InfSupHolds() const;
  bool EquivalenceHolds() const;
  bool FlippedHolds() const;
  bool FlippedNormMatches() const;
};

// Full report for one (k, alpha); Poincare constants may be supplied to avoid recomputing.
SpectralReport spectral_report(const DeRhamComplex &complex, const DenseBlocks &blocks,
                               double alpha, const std::map<int, double> &poincare);

}  // namespace hodge

#endif  // HODGE_ORACLE_HPP
