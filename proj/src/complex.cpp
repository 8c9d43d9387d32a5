// Copyright the hodge-precond authors.
// SPDX-License-Identifier: Apache-2.0

#include "hodge/complex.hpp"

#include <algorithm>
#include "hodge/quadrature.hpp"
#include "hodge/whitney.hpp"

namespace hodge
{

SparseMatrix coboundary(const SimplicialMesh &mesh, int k)
{
  if (k < 0 || k >= mesh.Dim())
  {
    throw std::invalid_argument("coboundary: degree out of range");
  }
  const auto &upper = mesh.Simplices(k + 1);
  const auto &lower = mesh.Simplices(k);
  std::vector<Triplet> t;
  t.reserve(upper.Size() * (k + 2));
  std::vector<Index> face(k + 1);
  for (std::size_t s = 0; s < upper.Size(); ++s)
  {
    auto sigma = upper[s];
    for (int j = 0; j <= k + 1; ++j)
    {
      int m = 0;
      for (int i = 0; i <= k + 1; ++i)
      {
        if (i != j)
        {
          face[m++] = sigma[i];
        }
      }
      const Index f = lower.Find(face);
      if (f < 0)
      {
        throw std::logic_error("coboundary: missing face in simplex table");
      }
      t.push_back({static_cast<Index>(s), f, (j % 2) ? -1.0 : 1.0});
    }
  }
  return from_triplets(static_cast<Index>(upper.Size()), static_cast<Index>(lower.Size()), t);
}

SparseMatrix mass_matrix(const SimplicialMesh &mesh, int k)
{
  const int dim = mesh.Dim();
  if (k < 0 || k > dim)
  {
    throw std::invalid_argument("mass_matrix: degree out of range");
  }
  const SimplexRule rule = simplex_rule(dim, 2);
  const int ncomp = proxy_components(dim, k);
  const auto nloc = local_faces(dim, k).size();
  std::vector<double> phi(nloc * ncomp);
  std::vector<double> local(nloc * nloc);
  std::vector<Triplet> t;
  t.reserve(mesh.NumCells() * nloc * nloc);
  for (std::size_t c = 0; c < mesh.NumCells(); ++c)
  {
    const CellGeometry geom = cell_geometry(mesh, c);
    std::fill(local.begin(), local.end(), 0.0);
    for (std::size_t q = 0; q < rule.weights.size(); ++q)
    {
      whitney_proxies(geom, k, rule.points[q], phi);
      const double w = rule.weights[q] * geom.Volume();
      for (std::size_t a = 0; a < nloc; ++a)
      {
        for (std::size_t b = 0; b < nloc; ++b)
        {
          double s = 0.0;
          for (int i = 0; i < ncomp; ++i)
          {
            s += phi[a * ncomp + i] * phi[b * ncomp + i];
          }
          local[a * nloc + b] += w * s;
        }
      }
    }
    auto faces = mesh.CellFaces(k, c);
    for (std::size_t a = 0; a < nloc; ++a)
    {
      for (std::size_t b = 0; b < nloc; ++b)
      {
        t.push_back({faces[a], faces[b], local[a * nloc + b]});
      }
    }
  }
  const auto n = static_cast<Index>(mesh.NumSimplices(k));
  return from_triplets(n, n, t);
}

DeRhamComplex::DeRhamComplex(std::shared_ptr<const SimplicialMesh> mesh_) : mesh(std::move(mesh_))
{
  for (int k = 0; k <= Dim(); ++k)
  {
    mass.push_back(mass_matrix(*mesh, k));
  }
  for (int k = 0; k < Dim(); ++k)
  {
    cob.push_back(coboundary(*mesh, k));
  }
}

DeRhamComplex::DeRhamComplex(SimplicialMesh mesh_)
  : DeRhamComplex(std::make_shared<const SimplicialMesh>(std::move(mesh_)))
{
}

SparseMatrix DeRhamComplex::Stiffness(int k) const
{
  if (k < 0 || k > Dim())
  {
    throw std::invalid_argument("Stiffness: degree out of range");
  }
  if (k == Dim())
  {
    return SparseMatrix(Size(k), Size(k));
  }
  const SparseMatrix &d = cob[k];
  return symmetrize(spgemm(transpose(d), spgemm(mass[k + 1], d)));
}

Index integer_rank(const SparseMatrix &m)
{
  constexpr std::int64_t p = 2147483647;  // 2^31 - 1
  const Index rows = m.Rows(), cols = m.Cols();
  std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols, 0));
  for (Index i = 0; i < rows; ++i)
  {
    auto c = m.RowColumns(i);
    auto v = m.RowValues(i);
    for (std::size_t q = 0; q < c.size(); ++q)
    {
      const auto iv = static_cast<std::int64_t>(v[q]);
      if (static_cast<double>(iv) != v[q])
      {
        throw std::invalid_argument("integer_rank: matrix is not integer valued");
      }
      a[i][c[q]] = ((iv % p) + p) % p;
    }
  }
  auto inverse = [](std::int64_t x)
  {
    std::int64_t r = 1, e = p - 2;
    while (e > 0)
    {
      if (e & 1)
      {
        r = r * x % p;
      }
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  Index rank = 0;
  for (Index col = 0; col < cols && rank < rows; ++col)
  {
    Index pivot = -1;
    for (Index i = rank; i < rows; ++i)
    {
      if (a[i][col] != 0)
      {
        pivot = i;
        break;
      }
    }
    if (pivot < 0)
    {
      continue;
    }
    std::swap(a[pivot], a[rank]);
    const std::int64_t inv = inverse(a[rank][col]);
    for (Index i = rank + 1; i < rows; ++i)
    {
      if (a[i][col] == 0)
      {
        continue;
      }
      const std::int64_t f = a[i][col] * inv % p;
      for (Index j = col; j < cols; ++j)
      {
        if (a[rank][j] != 0)
        {
          a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
        }
      }
    }
    ++rank;
  }
  return rank;
}

bool ExactnessReport::ContractibleExact() const
{
  if (!dd_zero || cohomology.empty() || cohomology[0] != 1)
  {
    return false;
  }
  return std::all_of(cohomology.begin() + 1, cohomology.end(), [](Index h) { return h == 0; });
}

ExactnessReport check_exactness(const DeRhamComplex &complex)
{
  const int n = complex.Dim();
  ExactnessReport r;
  r.dd_zero = true;
  for (int k = 0; k + 1 < n; ++k)
  {
    if (spgemm(complex.Coboundary(k + 1), complex.Coboundary(k)).NonZeros() != 0)
    {
      r.dd_zero = false;
    }
  }
  for (int k = 0; k <= n; ++k)
  {
    r.dims.push_back(complex.Size(k));
  }
  for (int k = 0; k < n; ++k)
  {
    r.ranks.push_back(integer_rank(complex.Coboundary(k)));
  }
  for (int k = 0; k <= n; ++k)
  {
    const Index rank_out = k < n ? r.ranks[k] : 0;
    const Index rank_in = k > 0 ? r.ranks[k - 1] : 0;
    r.cohomology.push_back(r.dims[k] - rank_out - rank_in);
  }
  return r;
}

}  // namespace hodge
