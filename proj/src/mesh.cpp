// Copyright the hodge-precond authors.
// SPDX-License-Identifier: Apache-2.0

#include "hodge/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace hodge
{

namespace
{

// All (k+1)-subsets of {0..n}, lexicographic.
std::vector<std::vector<int>> LocalCombinations(int n, int k)
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
      break;
    }
    ++comb[i];
    for (int j = i + 1; j <= k; ++j)
    {
      comb[j] = comb[j - 1] + 1;
    }
  }
  return out;
}

// Sorts rows of a flat table lexicographically and removes duplicates.
std::vector<Index> SortRows(const std::vector<Index> &flat, int width, bool unique)
{
  const std::size_t rows = flat.size() / width;
  std::vector<std::size_t> order(rows);
  std::iota(order.begin(), order.end(), 0);
  auto row_less = [&](std::size_t a, std::size_t b)
  {
    return std::lexicographical_compare(flat.begin() + a * width,
                                        flat.begin() + (a + 1) * width,
                                        flat.begin() + b * width,
                                        flat.begin() + (b + 1) * width);
  };
  auto row_equal = [&](std::size_t a, std::size_t b)
  {
    return std::equal(flat.begin() + a * width, flat.begin() + (a + 1) * width,
                      flat.begin() + b * width);
  };
  std::sort(order.begin(), order.end(), row_less);
  if (unique)
  {
    order.erase(std::unique(order.begin(), order.end(), row_equal), order.end());
  }
  std::vector<Index> out;
  out.reserve(order.size() * width);
  for (std::size_t r : order)
  {
    out.insert(out.end(), flat.begin() + r * width, flat.begin() + (r + 1) * width);
  }
  return out;
}

double Determinant(const std::array<std::array<double, 3>, 3> &m, int n)
{
  if (n == 2)
  {
    return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  }
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

double Distance(const Point &a, const Point &b, int dim)
{
  double s = 0.0;
  for (int i = 0; i < dim; ++i)
  {
    s += (a[i] - b[i]) * (a[i] - b[i]);
  }
  return std::sqrt(s);
}

}  // namespace

int binomial(int n, int k)
{
  if (k < 0 || k > n)
  {
    return 0;
  }
  int r = 1;
  for (int i = 1; i <= k; ++i)
  {
    r = r * (n - k + i) / i;
  }
  return r;
}

SimplexTable::SimplexTable(int vertices_per_simplex, std::vector<Index> data_)
  : width(vertices_per_simplex), data(std::move(data_))
{
}

Index SimplexTable::Find(std::span<const Index> simplex) const
{
  std::size_t lo = 0, hi = Size();
  while (lo < hi)
  {
    const std::size_t mid = (lo + hi) / 2;
    auto row = (*this)[mid];
    if (std::lexicographical_compare(row.begin(), row.end(), simplex.begin(), simplex.end()))
    {
      lo = mid + 1;
    }
    else
    {
      hi = mid;
    }
  }
  if (lo < Size() && std::ranges::equal((*this)[lo], simplex))
  {
    return static_cast<Index>(lo);
  }
  return -1;
}

SimplicialMesh::SimplicialMesh(int dim_, std::vector<Point> vertices_, std::vector<Index> cells)
  : dim(dim_), vertices(std::move(vertices_))
{
  if (dim != 2 && dim != 3)
  {
    throw std::invalid_argument("SimplicialMesh: dimension must be 2 or 3");
  }
  const int width = dim + 1;
  if (cells.empty() || cells.size() % width != 0)
  {
    throw std::invalid_argument("SimplicialMesh: cell list is empty or not a multiple of " +
                                std::to_string(width));
  }
  for (auto &p : vertices)
  {
    for (int i = dim; i < 3; ++i)
    {
      p[i] = 0.0;
    }
  }
  const auto nv = static_cast<Index>(vertices.size());
  for (std::size_t c = 0; c < cells.size(); c += width)
  {
    auto first = cells.begin() + c, last = first + width;
    std::sort(first, last);
    if (*first < 0 || *(last - 1) >= nv)
    {
      throw std::invalid_argument("SimplicialMesh: vertex index out of range in cell " +
                                  std::to_string(c / width));
    }
    if (std::adjacent_find(first, last) != last)
    {
      throw std::invalid_argument("SimplicialMesh: repeated vertex in cell " +
                                  std::to_string(c / width));
    }
  }
  const std::vector<Index> sorted_cells = SortRows(cells, width, false);
  for (std::size_t c = 0; c + width < sorted_cells.size(); c += width)
  {
    if (std::equal(sorted_cells.begin() + c, sorted_cells.begin() + c + width,
                   sorted_cells.begin() + c + width))
    {
      throw std::invalid_argument("SimplicialMesh: duplicate cell");
    }
  }

  // Enumerate and deduplicate k-faces.
  const std::size_t ncells = sorted_cells.size() / width;
  subsimplices.resize(dim + 1);
  cell_faces.resize(dim + 1);
  faces_per_cell.resize(dim + 1);
  for (int k = 0; k <= dim; ++k)
  {
    const auto combos = LocalCombinations(dim, k);
    faces_per_cell[k] = static_cast<int>(combos.size());
    std::vector<Index> flat;
    flat.reserve(ncells * combos.size() * (k + 1));
    for (std::size_t c = 0; c < ncells; ++c)
    {
      for (const auto &comb : combos)
      {
        for (int j : comb)
        {
          flat.push_back(sorted_cells[c * width + j]);
        }
      }
    }
    subsimplices[k] = SimplexTable(k + 1, SortRows(flat, k + 1, true));
    auto &faces = cell_faces[k];
    faces.resize(ncells * combos.size());
    for (std::size_t f = 0; f < faces.size(); ++f)
    {
      faces[f] = subsimplices[k].Find({flat.data() + f * (k + 1), static_cast<std::size_t>(k + 1)});
    }
  }

  for (std::size_t c = 0; c < ncells; ++c)
  {
    auto cell = Cells()[c];
    double diam = 0.0;
    for (int i = 0; i < width; ++i)
    {
      for (int j = i + 1; j < width; ++j)
      {
        diam = std::max(diam, Distance(vertices[cell[i]], vertices[cell[j]], dim));
      }
    }
    if (!(Volume(c) > 1e-14 * std::pow(diam, dim)))
    {
      throw std::invalid_argument("SimplicialMesh: degenerate cell " + std::to_string(c));
    }
  }
}

std::span<const Index> SimplicialMesh::CellFaces(int k, std::size_t cell) const
{
  const auto &faces = cell_faces.at(k);
  const std::size_t n = faces_per_cell[k];
  return {faces.data() + cell * n, n};
}

double SimplicialMesh::SignedVolume(std::size_t cell) const
{
  auto c = Cells()[cell];
  std::array<std::array<double, 3>, 3> jac{};
  const Point &v0 = vertices[c[0]];
  for (int j = 0; j < dim; ++j)
  {
    for (int i = 0; i < dim; ++i)
    {
      jac[i][j] = vertices[c[j + 1]][i] - v0[i];
    }
  }
  return Determinant(jac, dim) / (dim == 2 ? 2.0 : 6.0);
}

double SimplicialMesh::Volume(std::size_t cell) const
{
  return std::abs(SignedVolume(cell));
}

SimplicialMesh build_structured_mesh(int dim, int cells_per_axis)
{
  if (dim != 2 && dim != 3)
  {
    throw std::invalid_argument("build_structured_mesh: dimension must be 2 or 3");
  }
  if (cells_per_axis < 1)
  {
    throw std::invalid_argument("build_structured_mesh: cells_per_axis must be positive");
  }
  const int m = cells_per_axis;
  const int np = m + 1;
  const double h = 1.0 / m;
  std::vector<Point> vertices;
  std::vector<Index> cells;
  if (dim == 2)
  {
    for (int j = 0; j < np; ++j)
    {
      for (int i = 0; i < np; ++i)
      {
        vertices.push_back({i * h, j * h, 0.0});
      }
    }
    auto id = [np](int i, int j) { return static_cast<Index>(j * np + i); };
    for (int j = 0; j < m; ++j)
    {
      for (int i = 0; i < m; ++i)
      {
        // Both triangles share the diagonal from (i, j) to (i+1, j+1).
        cells.insert(cells.end(), {id(i, j), id(i + 1, j), id(i + 1, j + 1)});
        cells.insert(cells.end(), {id(i, j), id(i, j + 1), id(i + 1, j + 1)});
      }
    }
    return SimplicialMesh(2, std::move(vertices), std::move(cells));
  }

  for (int l = 0; l < np; ++l)
  {
    for (int j = 0; j < np; ++j)
    {
      for (int i = 0; i < np; ++i)
      {
        vertices.push_back({i * h, j * h, l * h});
      }
    }
  }
  auto id = [np](int i, int j, int l) { return static_cast<Index>((l * np + j) * np + i); };
  // Kuhn split: one tetrahedron per monotone lattice path from corner (0,0,0) to (1,1,1).
  std::array<int, 3> axes = {0, 1, 2};
  std::vector<std::array<int, 3>> paths;
  do
  {
    paths.push_back(axes);
  } while (std::next_permutation(axes.begin(), axes.end()));
  for (int l = 0; l < m; ++l)
  {
    for (int j = 0; j < m; ++j)
    {
      for (int i = 0; i < m; ++i)
      {
        for (const auto &path : paths)
        {
          std::array<int, 3> c = {i, j, l};
          cells.push_back(id(c[0], c[1], c[2]));
          for (int axis : path)
          {
            ++c[axis];
            cells.push_back(id(c[0], c[1], c[2]));
          }
        }
      }
    }
  }
  return SimplicialMesh(3, std::move(vertices), std::move(cells));
}

double mesh_size(const SimplicialMesh &mesh)
{
  double h = 0.0;
  const int width = mesh.Dim() + 1;
  const auto &x = mesh.Vertices();
  for (std::size_t c = 0; c < mesh.NumCells(); ++c)
  {
    auto cell = mesh.Cells()[c];
    for (int i = 0; i < width; ++i)
    {
      for (int j = i + 1; j < width; ++j)
      {
        h = std::max(h, Distance(x[cell[i]], x[cell[j]], mesh.Dim()));
      }
    }
  }
  return h;
}

}  // namespace hodge
