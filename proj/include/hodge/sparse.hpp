// Copyright the hodge-precond authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef HODGE_SPARSE_HPP
#define HODGE_SPARSE_HPP

#include <span>
#include <vector>
#include <Eigen/Dense>
#include "hodge/common.hpp"

namespace hodge
{

struct Triplet
{
  Index row;
  Index col;
  double value;
};

//
// Compressed sparse row matrix. Column indices are strictly increasing within each row.
//
class SparseMatrix
{
public:
  SparseMatrix() = default;
  SparseMatrix(Index nrows, Index ncols);
  SparseMatrix(Index nrows, Index ncols, std::vector<Index> row_offsets,
               std::vector<Index> columns, std::vector<double> values);

  Index Rows() const { return nrows; }
  Index Cols() const { return ncols; }
  std::size_t NonZeros() const { return values.size(); }

  std::span<const Index> RowColumns(Index i) const
  {
    return {columns.data() + offsets[i], static_cast<std::size_t>(offsets[i + 1] - offsets[i])};
  }
  std::span<const double> RowValues(Index i) const
  {
    return {values.data() + offsets[i], static_cast<std::size_t>(offsets[i + 1] - offsets[i])};
  }

  const std::vector<Index> &RowOffsets() const { return offsets; }
  const std::vector<Index> &Columns() const { return columns; }
  const std::vector<double> &Values() const { return values; }

  // Entry (i, j), zero when not stored.
  double Coeff(Index i, Index j) const;

  // True when every stored value is an integer.
  bool IsIntegerValued() const;

  bool operator==(const SparseMatrix &) const = default;

private:
  Index nrows = 0, ncols = 0;
  std::vector<Index> offsets = {0};
  std::vector<Index> columns;
  std::vector<double> values;
};

// Duplicates are summed in (row, col, value) order so the result does not depend on the
// order of the input; entries summing to exactly zero are dropped.
SparseMatrix from_triplets(Index nrows, Index ncols, std::span<const Triplet> triplets);

SparseMatrix identity(Index n);
SparseMatrix diagonal(std::span<const double> d);

Vector spmv(const SparseMatrix &m, std::span<const double> x);
void spmv(const SparseMatrix &m, std::span<const double> x, std::span<double> y);
SparseMatrix transpose(const SparseMatrix &m);

// Product; exact zeros are dropped only when both operands are integer valued.
SparseMatrix spgemm(const SparseMatrix &a, const SparseMatrix &b);

// a + s * b on the union pattern.
SparseMatrix add_scaled(const SparseMatrix &a, const SparseMatrix &b, double s);

SparseMatrix scaled(const SparseMatrix &a, double s);

// (a + a^T) / 2.
SparseMatrix symmetrize(const SparseMatrix &a);

// max |a_ij - a_ji| / max |a_ij|, zero for an empty matrix.
double asymmetry(const SparseMatrix &a);

Eigen::MatrixXd to_dense(const SparseMatrix &m);

double dot(std::span<const double> x, std::span<const double> y);
double norm2(std::span<const double> x);

}  // namespace hodge

#endif  // HODGE_SPARSE_HPP
