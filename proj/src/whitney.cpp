// Copyright the hodge-precond authors.
// SPDX-License-Identifier: Apache-2.0

#include "hodge/whitney.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <Eigen/Dense>

namespace hodge
{

namespace
{

using Vec3 = std::array<double, 3>;

Vec3 Cross(const Vec3 &a, const Vec3 &b)
{
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Proxy of the wedge product of the given gradients (k of them) in R^dim.
void WedgeProxy(int dim, std::span<const Vec3 *const> g, std::span<double> out)
{
  switch (g.size())
  {
    case 0:
      out[0] = 1.0;
      break;
    case 1:
      for (int i = 0; i < dim; ++i)
      {
        out[i] = (*g[0])[i];
      }
      break;
    case 2:
      if (dim == 2)
      {
        out[0] = (*g[0])[0] * (*g[1])[1] - (*g[0])[1] * (*g[1])[0];
      }
      else
      {
        const Vec3 c = Cross(*g[0], *g[1]);
        std::copy(c.begin(), c.end(), out.begin());
      }
      break;
    case 3:
    {
      const Vec3 c = Cross(*g[1], *g[2]);
      out[0] = (*g[0])[0] * c[0] + (*g[0])[1] * c[1] + (*g[0])[2] * c[2];
      break;
    }
    default:
      throw std::logic_error("WedgeProxy: unsupported degree");
  }
}

std::vector<std::vector<int>> Combinations(int n, int k)
{
  std::vector<std::vector<int>> out;
  std::vector<int> comb(k + 1);
  std::iota(comb.begin(), comb.end(), 0);
  while (true)
  {
    out.push_back(comb);
    int i = k;
    while (i >= 0 && comb[i] == n - k + i)
    {
      --i;
    }
    if (i < 0)
    {
      return out;
    }
    ++comb[i];
    for (int j = i + 1; j <= k; ++j)
    {
      comb[j] = comb[j - 1] + 1;
    }
  }
}

}  // namespace

double CellGeometry::Volume() const
{
  return std::abs(signed_volume);
}

Point CellGeometry::ToPhysical(std::span<const double> lambda) const
{
  Point x{0.0, 0.0, 0.0};
  for (int v = 0; v <= dim; ++v)
  {
    for (int i = 0; i < dim; ++i)
    {
      x[i] += lambda[v] * vertices[v][i];
    }
  }
  return x;
}

CellGeometry simplex_geometry(int dim, std::span<const Point> vertices)
{
  CellGeometry g;
  g.dim = dim;
  for (int v = 0; v <= dim; ++v)
  {
    g.vertices[v] = vertices[v];
  }
  Eigen::Matrix3d jac = Eigen::Matrix3d::Identity();
  for (int j = 0; j < dim; ++j)
  {
    for (int i = 0; i < dim; ++i)
    {
      jac(i, j) = vertices[j + 1][i] - vertices[0][i];
    }
  }
  const double det = jac.determinant();
  double scale = 0.0;
  for (int j = 0; j < dim; ++j)
  {
    scale = std::max(scale, jac.col(j).norm());
  }
  if (!(std::abs(det) > 1e-14 * std::pow(scale, dim)))
  {
    throw AssemblyError("cell_geometry: degenerate simplex");
  }
  g.signed_volume = det / (dim == 2 ? 2.0 : 6.0);
  // Rows of J^{-1} are the gradients of lambda_1..lambda_n.
  const Eigen::Matrix3d inv = jac.inverse();
  for (int v = 1; v <= dim; ++v)
  {
    for (int i = 0; i < dim; ++i)
    {
      g.grad_lambda[v][i] = inv(v - 1, i);
      g.grad_lambda[0][i] -= inv(v - 1, i);
    }
  }
  return g;
}

CellGeometry cell_geometry(const SimplicialMesh &mesh, std::size_t cell)
{
  auto c = mesh.Cells()[cell];
  std::array<Point, 4> pts{};
  for (int v = 0; v <= mesh.Dim(); ++v)
  {
    pts[v] = mesh.Vertices()[c[v]];
  }
  try
  {
    return simplex_geometry(mesh.Dim(), {pts.data(), static_cast<std::size_t>(mesh.Dim() + 1)});
  }
  catch (const AssemblyError &)
  {
    throw AssemblyError("cell_geometry: degenerate cell " + std::to_string(cell));
  }
}

int proxy_components(int dim, int k)
{
  return (k == 0 || k == dim) ? 1 : dim;
}

const std::vector<std::vector<int>> &local_faces(int dim, int k)
{
  static const std::array<std::array<std::vector<std::vector<int>>, 4>, 2> table = []
  {
    std::array<std::array<std::vector<std::vector<int>>, 4>, 2> t;
    for (int d = 2; d <= 3; ++d)
    {
      for (int j = 0; j <= d; ++j)
      {
        t[d - 2][j] = Combinations(d, j);
      }
    }
    return t;
  }();
  if ((dim != 2 && dim != 3) || k < 0 || k > dim)
  {
    throw std::invalid_argument("local_faces: invalid dimension or degree");
  }
  return table[dim - 2][k];
}

void whitney_proxies(const CellGeometry &geom, int k, std::span<const double> lambda,
                     std::span<double> out)
{
  const int dim = geom.dim;
  const int ncomp = proxy_components(dim, k);
  const auto &faces = local_faces(dim, k);
  if (out.size() != faces.size() * ncomp)
  {
    throw std::invalid_argument("whitney_proxies: output size mismatch");
  }
  double factorial = 1.0;
  for (int i = 2; i <= k; ++i)
  {
    factorial *= i;
  }
  std::array<const Vec3 *, 3> grads{};
  std::array<double, 3> wedge{};
  for (std::size_t f = 0; f < faces.size(); ++f)
  {
    const auto &face = faces[f];
    auto dst = out.subspan(f * ncomp, ncomp);
    std::fill(dst.begin(), dst.end(), 0.0);
    // k! sum_j (-1)^j lambda_{a_j} d lambda_{a_0} ^ ... (omit a_j) ... ^ d lambda_{a_k}
    for (int j = 0; j <= k; ++j)
    {
      int m = 0;
      for (int i = 0; i <= k; ++i)
      {
        if (i != j)
        {
          grads[m++] = &geom.grad_lambda[face[i]];
        }
      }
      WedgeProxy(dim, {grads.data(), static_cast<std::size_t>(k)}, wedge);
      const double coeff = ((j % 2) ? -1.0 : 1.0) * factorial * lambda[face[j]];
      for (int c = 0; c < ncomp; ++c)
      {
        dst[c] += coeff * wedge[c];
      }
    }
  }
}

}  // namespace hodge
