// Copyright the hodge-precond authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef HODGE_MESH_HPP
#define HODGE_MESH_HPP

#include <array>
#include <istream>
#include <span>
#include <vector>
#include "hodge/common.hpp"

namespace hodge
{

using Point = std::array<double, 3>;

//
// Table of k-simplices, each stored as k+1 strictly increasing vertex indices. Rows are
// kept in lexicographic order so that lookups are binary searches.
//
class SimplexTable
{
public:
  SimplexTable() = default;
  SimplexTable(int vertices_per_simplex, std::vector<Index> data);

  int Width() const { return width; }
  std::size_t Size() const { return width == 0 ? 0 : data.size() / width; }
  std::span<const Index> operator[](std::size_t i) const
  {
    return {data.data() + i * width, static_cast<std::size_t>(width)};
  }

  // Position of the given sorted tuple, or -1 if absent.
  Index Find(std::span<const Index> simplex) const;

  const std::vector<Index> &Data() const { return data; }

  bool operator==(const SimplexTable &) const = default;

private:
  int width = 0;
  std::vector<Index> data;
};

//
// Simplicial mesh of a polyhedral domain in R^n, n in {2, 3}. Immutable after construction.
//
class SimplicialMesh
{
public:
  // Cells are sorted internally; each cell must reference valid vertices and have positive
  // volume. Only the first `dim` coordinates of each point are used.
  SimplicialMesh(int dim, std::vector<Point> vertices, std::vector<Index> cells);

  int Dim() const { return dim; }
  std::size_t NumVertices() const { return vertices.size(); }
  std::size_t NumCells() const { return subsimplices.back().Size(); }
  std::size_t NumSimplices(int k) const { return subsimplices.at(k).Size(); }

  const std::vector<Point> &Vertices() const { return vertices; }
  const SimplexTable &Cells() const { return subsimplices.back(); }
  const SimplexTable &Simplices(int k) const { return subsimplices.at(k); }

  // Global indices of the k-faces of a cell, in the lexicographic order of local vertex
  // combinations (local vertex order follows the cell's increasing global order).
  std::span<const Index> CellFaces(int k, std::size_t cell) const;

  // Signed n-volume, positive when the increasing vertex order is positively oriented.
  double SignedVolume(std::size_t cell) const;
  double Volume(std::size_t cell) const;

  bool operator==(const SimplicialMesh &) const = default;

private:
  int dim;
  std::vector<Point> vertices;
  std::vector<SimplexTable> subsimplices;
  std::vector<std::vector<Index>> cell_faces;
  std::vector<int> faces_per_cell;
};

// Unit square into 2 m^2 triangles or unit cube into 6 m^3 tetrahedra (Kuhn split).
SimplicialMesh build_structured_mesh(int dim, int cells_per_axis);

// ASCII Gmsh MSH 2.2 or 4.1; only linear simplices of the top dimension are kept.
SimplicialMesh read_gmsh(std::istream &in);
SimplicialMesh read_gmsh_file(const std::string &path);

// Largest cell diameter.
double mesh_size(const SimplicialMesh &mesh);

// Number of k-faces of an n-simplex.
int binomial(int n, int k);

}  // namespace hodge

#endif  // HODGE_MESH_HPP
