// Copyright the hodge-precond authors.
// SPDX-License-Identifier: Apache-2.0

#include "hodge/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hodge
{

void gauss_legendre(int npoints, std::vector<double> &nodes, std::vector<double> &weights)
{
  if (npoints < 1)
  {
    throw std::invalid_argument("gauss_legendre: need at least one point");
  }
  nodes.assign(npoints, 0.0);
  weights.assign(npoints, 0.0);
  for (int i = 0; i < npoints; ++i)
  {
    // Newton iteration on P_n from the Chebyshev-like initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (npoints + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it)
    {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= npoints; ++j)
      {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      const double pn = npoints == 1 ? x : p1;
      const double pm = npoints == 1 ? 1.0 : p0;
      dp = npoints * (x * pn - pm) / (x * x - 1.0);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16)
      {
        break;
      }
    }
    nodes[i] = 0.5 * (1.0 - x);
    weights[i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
}

SimplexRule simplex_rule(int dim, int degree)
{
  if (dim != 2 && dim != 3)
  {
    throw std::invalid_argument("simplex_rule: dimension must be 2 or 3");
  }
  if (degree < 0)
  {
    throw std::invalid_argument("simplex_rule: negative degree");
  }
  SimplexRule rule;
  rule.dim = dim;
  if (degree <= 1)
  {
    const double c = 1.0 / (dim + 1);
    rule.points.push_back({c, c, c, dim == 3 ? c : 0.0});
    rule.weights.push_back(1.0);
    return rule;
  }
  if (degree == 2)
  {
    if (dim == 2)
    {
      const double a = 2.0 / 3.0, b = 1.0 / 6.0;
      rule.points = {{a, b, b, 0.0}, {b, a, b, 0.0}, {b, b, a, 0.0}};
      rule.weights.assign(3, 1.0 / 3.0);
    }
    else
    {
      const double b = (5.0 - std::sqrt(5.0)) / 20.0, a = 1.0 - 3.0 * b;
      rule.points = {{a, b, b, b}, {b, a, b, b}, {b, b, a, b}, {b, b, b, a}};
      rule.weights.assign(4, 0.25);
    }
    return rule;
  }

  // Collapsed (Duffy) product rule; the Jacobian adds dim - 1 to the degree in the first
  // collapsed direction.
  const int npoints = (degree + dim + 1) / 2;
  std::vector<double> x, w;
  gauss_legendre(npoints, x, w);
  const double ref_volume = dim == 2 ? 0.5 : 1.0 / 6.0;
  if (dim == 2)
  {
    for (int i = 0; i < npoints; ++i)
    {
      for (int j = 0; j < npoints; ++j)
      {
        const double s = x[i], t = (1.0 - x[i]) * x[j];
        rule.points.push_back({1.0 - s - t, s, t, 0.0});
        rule.weights.push_back(w[i] * w[j] * (1.0 - x[i]) / ref_volume);
      }
    }
  }
  else
  {
    for (int i = 0; i < npoints; ++i)
    {
      for (int j = 0; j < npoints; ++j)
      {
        for (int l = 0; l < npoints; ++l)
        {
          const double s = x[i], t = (1.0 - x[i]) * x[j], u = (1.0 - x[i]) * (1.0 - x[j]) * x[l];
          rule.points.push_back({1.0 - s - t - u, s, t, u});
          rule.weights.push_back(w[i] * w[j] * w[l] * (1.0 - x[i]) * (1.0 - x[i]) *
                                 (1.0 - x[j]) / ref_volume);
        }
      }
    }
  }
  return rule;
}

}  // namespace hodge
