// Copyright the hodge-precond authors.
// SPDX-License-Identifier: Apache-2.0

#include "hodge/system.hpp"

#include <cmath>
#include <numbers>
#include "hodge/quadrature.hpp"
#include "hodge/whitney.hpp"

namespace hodge
{

LoadSpec LoadSpec::Psi()
{
  return {[](const Point &x, std::span<double> out)
          {
            double s = 0.0;
            for (std::size_t i = 0; i < 3; ++i)
            {
              s += std::sin(2.0 * std::numbers::pi * x[i]);
            }
            std::fill(out.begin(), out.end(), s);
          }};
}

LoadSpec LoadSpec::Zero()
{
  return Constant(0.0);
}

LoadSpec LoadSpec::Constant(double c)
{
  return {[c](const Point &, std::span<double> out) { std::fill(out.begin(), out.end(), c); }};
}

void SaddleSystem::Apply(std::span<const double> x, std::span<double> y) const
{
  const auto nu = static_cast<std::size_t>(NumU()), np = static_cast<std::size_t>(NumP());
  if (x.size() != nu + np || y.size() != nu + np)
  {
    throw std::invalid_argument("SaddleSystem::Apply: length mismatch");
  }
  auto xu = x.subspan(0, nu), xp = x.subspan(nu, np);
  auto yu = y.subspan(0, nu), yp = y.subspan(nu, np);
  Vector tu(nu), tp(np);
  spmv(A, xu, yu);
  // Bmat^T p without forming the transpose: accumulate row contributions.
  std::fill(tu.begin(), tu.end(), 0.0);
  for (Index i = 0; i < Bmat.Rows(); ++i)
  {
    auto c = Bmat.RowColumns(i);
    auto v = Bmat.RowValues(i);
    for (std::size_t q = 0; q < c.size(); ++q)
    {
      tu[c[q]] += v[q] * xp[i];
    }
  }
  for (std::size_t i = 0; i < nu; ++i)
  {
    yu[i] += tu[i];
  }
  spmv(Bmat, xu, yp);
  spmv(C, xp, tp);
  for (std::size_t i = 0; i < np; ++i)
  {
    yp[i] -= tp[i];
  }
}

Vector SaddleSystem::Apply(std::span<const double> x) const
{
  Vector y(Size());
  Apply(x, y);
  return y;
}

Vector SaddleSystem::Rhs() const
{
  Vector b(F);
  for (double g : G)
  {
    b.push_back(-g);
  }
  return b;
}

SparseMatrix SaddleSystem::Assembled() const
{
  std::vector<Triplet> t;
  const Index nu = NumU();
  auto add = [&t](const SparseMatrix &m, Index r0, Index c0, double s, bool trans)
  {
    for (Index i = 0; i < m.Rows(); ++i)
    {
      auto c = m.RowColumns(i);
      auto v = m.RowValues(i);
      for (std::size_t q = 0; q < c.size(); ++q)
      {
        if (trans)
        {
          t.push_back({r0 + c[q], c0 + i, s * v[q]});
        }
        else
        {
          t.push_back({r0 + i, c0 + c[q], s * v[q]});
        }
      }
    }
  };
  add(A, 0, 0, 1.0, false);
  add(Bmat, 0, nu, 1.0, true);
  add(Bmat, nu, 0, 1.0, false);
  add(C, nu, nu, -1.0, false);
  return from_triplets(Size(), Size(), t);
}

SaddleSystem assemble_system(const DeRhamComplex &complex, int k, double alpha)
{
  if (k < 1 || k > complex.Dim())
  {
    throw std::invalid_argument("assemble_system: degree must satisfy 1 <= k <= n");
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha))
  {
    throw std::invalid_argument("assemble_system: alpha must be positive");
  }
  SaddleSystem s;
  s.k = k;
  s.alpha = alpha;
  s.A = complex.Stiffness(k);
  s.Bmat = spgemm(transpose(complex.Coboundary(k - 1)), complex.Mass(k));
  s.C = scaled(complex.Mass(k - 1), alpha);
  s.F.assign(s.NumU(), 0.0);
  s.G.assign(s.NumP(), 0.0);
  return s;
}

Vector load_vector(const SimplicialMesh &mesh, int k, const LoadSpec &load, int quadrature_degree)
{
  const int dim = mesh.Dim();
  if (k < 0 || k > dim)
  {
    throw std::invalid_argument("load_vector: degree out of range");
  }
  const SimplexRule rule = simplex_rule(dim, quadrature_degree);
  const int ncomp = proxy_components(dim, k);
  const auto nloc = local_faces(dim, k).size();
  std::vector<double> phi(nloc * ncomp), f(ncomp);
  Vector out(mesh.NumSimplices(k), 0.0);
  for (std::size_t c = 0; c < mesh.NumCells(); ++c)
  {
    const CellGeometry geom = cell_geometry(mesh, c);
    auto faces = mesh.CellFaces(k, c);
    for (std::size_t q = 0; q < rule.weights.size(); ++q)
    {
      whitney_proxies(geom, k, rule.points[q], phi);
      load.eval(geom.ToPhysical(rule.points[q]), f);
      const double w = rule.weights[q] * geom.Volume();
      for (std::size_t a = 0; a < nloc; ++a)
      {
        double s = 0.0;
        for (int i = 0; i < ncomp; ++i)
        {
          s += phi[a * ncomp + i] * f[i];
        }
        out[faces[a]] += w * s;
      }
    }
  }
  return out;
}

std::pair<Vector, Vector> assemble_rhs(const DeRhamComplex &complex, int k,
                                       const LoadSpec &load_u, const LoadSpec &load_p,
                                       int quadrature_degree)
{
  if (k < 1 || k > complex.Dim())
  {
    throw std::invalid_argument("assemble_rhs: degree must satisfy 1 <= k <= n");
  }
  return {load_vector(complex.Mesh(), k, load_u, quadrature_degree),
          load_vector(complex.Mesh(), k - 1, load_p, quadrature_degree)};
}

}  // namespace hodge
