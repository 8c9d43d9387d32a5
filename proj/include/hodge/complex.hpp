// Copyright the hodge-precond authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef HODGE_COMPLEX_HPP
#define HODGE_COMPLEX_HPP

#include <memory>
#include <vector>
#include "hodge/mesh.hpp"
#include "hodge/sparse.hpp"

namespace hodge
{

// Signed incidence D_k (n_{k+1} x n_k): entry (-1)^j on the face of sigma obtained by
// deleting its j-th vertex.
SparseMatrix coboundary(const SimplicialMesh &mesh, int k);

// L^2 Gram matrix of the lowest-order Whitney k-forms, assembled with a degree-2 rule.
SparseMatrix mass_matrix(const SimplicialMesh &mesh, int k);

//
// Discrete de Rham complex of Whitney forms on a simplicial mesh: mass matrices M_k for
// k = 0..n and coboundaries D_k for k = 0..n-1. Immutable and shareable.
//
class DeRhamComplex
{
public:
  explicit DeRhamComplex(std::shared_ptr<const SimplicialMesh> mesh);
  explicit DeRhamComplex(SimplicialMesh mesh);

  const SimplicialMesh &Mesh() const { return *mesh; }
  int Dim() const { return mesh->Dim(); }
  Index Size(int k) const { return static_cast<Index>(mesh->NumSimplices(k)); }

  const SparseMatrix &Mass(int k) const { return mass.at(k); }
  const SparseMatrix &Coboundary(int k) const { return cob.at(k); }

  // D_k^T M_{k+1} D_k; the zero matrix for k = n.
  SparseMatrix Stiffness(int k) const;

private:
  std::shared_ptr<const SimplicialMesh> mesh;
  std::vector<SparseMatrix> mass, cob;
};

struct ExactnessReport
{
  std::vector<Index> dims;        // n_k
  std::vector<Index> ranks;       // rank D_k, k = 0..n-1
  std::vector<Index> cohomology;  // dim ker D_k - rank D_{k-1}
  bool dd_zero = false;           // D_{k+1} D_k == 0 exactly

  // dd = 0 and cohomology (1, 0, ..., 0).
  bool ContractibleExact() const;
};

ExactnessReport check_exactness(const DeRhamComplex &complex);

// Exact rank over a large prime field; intended for small incidence matrices.
Index integer_rank(const SparseMatrix &m);

}  // namespace hodge

#endif  // HODGE_COMPLEX_HPP
