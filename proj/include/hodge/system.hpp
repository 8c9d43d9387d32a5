// Copyright the hodge-precond authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef HODGE_SYSTEM_HPP
#define HODGE_SYSTEM_HPP

#include <functional>
#include <span>
#include <utility>
#include "hodge/complex.hpp"

namespace hodge
{

//
// Source field for a load vector. `eval` fills every component of the Euclidean proxy at
// a point (one component for scalar degrees, n for vector degrees).
//
struct LoadSpec
{
  std::function<void(const Point &, std::span<double>)> eval;

  // sum_i sin(2 pi x_i) in every component.
  static LoadSpec Psi();
  static LoadSpec Zero();
  static LoadSpec Constant(double c);
};

// Quadrature degree for right-hand sides.
inline constexpr int kLoadQuadratureDegree = 4;

//
// Mixed Hodge-Laplace system at degree k:
//   [ A     Bmat^T ] [u]   [ F]
//   [ Bmat  -C     ] [p] = [-G]
// with A = D_k^T M_{k+1} D_k, Bmat = D_{k-1}^T M_k, C = alpha M_{k-1}.
//
struct SaddleSystem
{
  int k = 0;
  double alpha = 0.0;
  SparseMatrix A, Bmat, C;
  Vector F, G;

  Index NumU() const { return A.Rows(); }
  Index NumP() const { return C.Rows(); }
  Index Size() const { return NumU() + NumP(); }

  // Block operator applied to a stacked (u, p) vector.
  void Apply(std::span<const double> x, std::span<double> y) const;
  Vector Apply(std::span<const double> x) const;

  // Stacked right-hand side (F, -G).
  Vector Rhs() const;

  // The full symmetric block matrix.
  SparseMatrix Assembled() const;
};

// Blocks only; F and G are zero. Throws std::invalid_argument unless 1 <= k <= n, alpha > 0.
SaddleSystem assemble_system(const DeRhamComplex &complex, int k, double alpha);

// F_j = (f, phi_j) against degree-k Whitney proxies, G_j = (g, psi_j) against degree k-1.
// G is returned unnegated; Rhs() applies the sign.
std::pair<Vector, Vector> assemble_rhs(const DeRhamComplex &complex, int k,
                                       const LoadSpec &load_u, const LoadSpec &load_p,
                                       int quadrature_degree = kLoadQuadratureDegree);

Vector load_vector(const SimplicialMesh &mesh, int k, const LoadSpec &load,
                   int quadrature_degree = kLoadQuadratureDegree);

}  // namespace hodge

#endif  // HODGE_SYSTEM_HPP
