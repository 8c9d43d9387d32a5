// Copyright the hodge-precond authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef HODGE_QUADRATURE_HPP
#define HODGE_QUADRATURE_HPP

#include <array>
#include <vector>

namespace hodge
{

//
// Quadrature rule on the reference n-simplex in barycentric coordinates. Weights sum to one,
// so the integral over a cell T is |T| * sum_q w_q f(x_q).
//
struct SimplexRule
{
  int dim = 0;
  std::vector<std::array<double, 4>> points;  // barycentric, dim + 1 entries used
  std::vector<double> weights;
};

// Rule exact for polynomials of total degree <= `degree`. Degrees up to 2 use symmetric
// interior rules; higher degrees use a collapsed Gauss-Legendre product rule.
SimplexRule simplex_rule(int dim, int degree);

// Gauss-Legendre nodes and weights on [0, 1].
void gauss_legendre(int npoints, std::vector<double> &nodes, std::vector<double> &weights);

}  // namespace hodge

#endif  // HODGE_QUADRATURE_HPP
