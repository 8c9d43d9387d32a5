// Copyright the hodge-precond authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef HODGE_WHITNEY_HPP
#define HODGE_WHITNEY_HPP

#include <array>
#include <span>
#include <vector>
#include "hodge/mesh.hpp"

namespace hodge
{

//
// Affine data of one cell: vertices in increasing global order, barycentric gradients and
// signed volume.
//
struct CellGeometry
{
  int dim = 0;
  std::array<Point, 4> vertices{};
  std::array<std::array<double, 3>, 4> grad_lambda{};
  double signed_volume = 0.0;

  double Volume() const;
  Point ToPhysical(std::span<const double> lambda) const;
};

// Throws AssemblyError for a degenerate cell.
CellGeometry cell_geometry(const SimplicialMesh &mesh, std::size_t cell);
CellGeometry simplex_geometry(int dim, std::span<const Point> vertices);

// Components of the Euclidean proxy of a k-form: 1 for k in {0, n}, otherwise n.
int proxy_components(int dim, int k);

// Local k-faces of an n-simplex as vertex subsets, lexicographic (matches CellFaces).
const std::vector<std::vector<int>> &local_faces(int dim, int k);

// Proxies of the lowest-order Whitney k-forms of every local k-face at a barycentric
// point. `out` has local_faces(dim, k).size() * proxy_components(dim, k) entries, face
// major. For k = n the form integrates to one over the positively oriented cell, so its
// proxy is sign(T) / |T|.
void whitney_proxies(const CellGeometry &geom, int k, std::span<const double> lambda,
                     std::span<double> out);

}  // namespace hodge

#endif  // HODGE_WHITNEY_HPP
