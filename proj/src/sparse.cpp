// Copyright the hodge-precond authors.
// SPDX-License-Identifier: Apache-2.0

#include "hodge/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hodge
{

namespace
{

void CheckSameShape(const SparseMatrix &a, const SparseMatrix &b, const char *op)
{
  if (a.Rows() != b.Rows() || a.Cols() != b.Cols())
  {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch");
  }
}

}  // namespace

SparseMatrix::SparseMatrix(Index nrows_, Index ncols_)
  : nrows(nrows_), ncols(ncols_), offsets(static_cast<std::size_t>(nrows_) + 1, 0)
{
  if (nrows < 0 || ncols < 0)
  {
    throw std::invalid_argument("SparseMatrix: negative dimension");
  }
}

SparseMatrix::SparseMatrix(Index nrows_, Index ncols_, std::vector<Index> row_offsets,
                           std::vector<Index> columns_, std::vector<double> values_)
  : nrows(nrows_), ncols(ncols_), offsets(std::move(row_offsets)), columns(std::move(columns_)),
    values(std::move(values_))
{
  if (offsets.size() != static_cast<std::size_t>(nrows) + 1 ||
      columns.size() != values.size() || offsets.back() != static_cast<Index>(values.size()))
  {
    throw std::invalid_argument("SparseMatrix: inconsistent CSR arrays");
  }
}

double SparseMatrix::Coeff(Index i, Index j) const
{
  auto cols = RowColumns(i);
  auto it = std::lower_bound(cols.begin(), cols.end(), j);
  if (it != cols.end() && *it == j)
  {
    return RowValues(i)[it - cols.begin()];
  }
  return 0.0;
}

bool SparseMatrix::IsIntegerValued() const
{
  return std::all_of(values.begin(), values.end(),
                     [](double v) { return std::isfinite(v) && std::floor(v) == v; });
}

SparseMatrix from_triplets(Index nrows, Index ncols, std::span<const Triplet> triplets)
{
  if (nrows < 0 || ncols < 0)
  {
    throw std::invalid_argument("from_triplets: negative dimension");
  }
  std::vector<Triplet> t(triplets.begin(), triplets.end());
  for (const auto &e : t)
  {
    if (e.row < 0 || e.row >= nrows || e.col < 0 || e.col >= ncols)
    {
      throw std::invalid_argument("from_triplets: index (" + std::to_string(e.row) + ", " +
                                  std::to_string(e.col) + ") out of range");
    }
  }
  std::sort(t.begin(), t.end(),
            [](const Triplet &a, const Triplet &b)
            {
              if (a.row != b.row)
              {
                return a.row < b.row;
              }
              if (a.col != b.col)
              {
                return a.col < b.col;
              }
              return a.value < b.value;
            });
  std::vector<Index> offsets(static_cast<std::size_t>(nrows) + 1, 0);
  std::vector<Index> cols;
  std::vector<double> vals;
  for (std::size_t p = 0; p < t.size();)
  {
    std::size_t q = p;
    double sum = 0.0;
    while (q < t.size() && t[q].row == t[p].row && t[q].col == t[p].col)
    {
      sum += t[q].value;
      ++q;
    }
    if (sum != 0.0)
    {
      cols.push_back(t[p].col);
      vals.push_back(sum);
      ++offsets[t[p].row + 1];
    }
    p = q;
  }
  for (Index i = 0; i < nrows; ++i)
  {
    offsets[i + 1] += offsets[i];
  }
  return SparseMatrix(nrows, ncols, std::move(offsets), std::move(cols), std::move(vals));
}

SparseMatrix identity(Index n)
{
  std::vector<double> ones(n, 1.0);
  return diagonal(ones);
}

SparseMatrix diagonal(std::span<const double> d)
{
  const auto n = static_cast<Index>(d.size());
  std::vector<Index> offsets(n + 1), cols(n);
  for (Index i = 0; i < n; ++i)
  {
    offsets[i + 1] = i + 1;
    cols[i] = i;
  }
  return SparseMatrix(n, n, std::move(offsets), std::move(cols),
                      std::vector<double>(d.begin(), d.end()));
}

void spmv(const SparseMatrix &m, std::span<const double> x, std::span<double> y)
{
  if (x.size() != static_cast<std::size_t>(m.Cols()) ||
      y.size() != static_cast<std::size_t>(m.Rows()))
  {
    throw std::invalid_argument("spmv: dimension mismatch");
  }
  const auto &off = m.RowOffsets();
  const auto &col = m.Columns();
  const auto &val = m.Values();
  for (Index i = 0; i < m.Rows(); ++i)
  {
    double s = 0.0;
    for (Index p = off[i]; p < off[i + 1]; ++p)
    {
      s += val[p] * x[col[p]];
    }
    y[i] = s;
  }
}

Vector spmv(const SparseMatrix &m, std::span<const double> x)
{
  Vector y(m.Rows());
  spmv(m, x, y);
  return y;
}

SparseMatrix transpose(const SparseMatrix &m)
{
  std::vector<Index> offsets(static_cast<std::size_t>(m.Cols()) + 1, 0);
  for (Index c : m.Columns())
  {
    ++offsets[c + 1];
  }
  for (Index j = 0; j < m.Cols(); ++j)
  {
    offsets[j + 1] += offsets[j];
  }
  std::vector<Index> cols(m.NonZeros());
  std::vector<double> vals(m.NonZeros());
  std::vector<Index> next(offsets.begin(), offsets.end() - 1);
  for (Index i = 0; i < m.Rows(); ++i)
  {
    auto rc = m.RowColumns(i);
    auto rv = m.RowValues(i);
    for (std::size_t p = 0; p < rc.size(); ++p)
    {
      const Index dst = next[rc[p]]++;
      cols[dst] = i;
      vals[dst] = rv[p];
    }
  }
  return SparseMatrix(m.Cols(), m.Rows(), std::move(offsets), std::move(cols), std::move(vals));
}

SparseMatrix spgemm(const SparseMatrix &a, const SparseMatrix &b)
{
  if (a.Cols() != b.Rows())
  {
    throw std::invalid_argument("spgemm: dimension mismatch");
  }
  const bool drop_zeros = a.IsIntegerValued() && b.IsIntegerValued();
  std::vector<Index> offsets(static_cast<std::size_t>(a.Rows()) + 1, 0);
  std::vector<Index> cols;
  std::vector<double> vals;
  std::vector<double> acc(b.Cols(), 0.0);
  std::vector<char> used(b.Cols(), 0);
  std::vector<Index> pattern;
  for (Index i = 0; i < a.Rows(); ++i)
  {
    pattern.clear();
    auto ac = a.RowColumns(i);
    auto av = a.RowValues(i);
    for (std::size_t p = 0; p < ac.size(); ++p)
    {
      auto bc = b.RowColumns(ac[p]);
      auto bv = b.RowValues(ac[p]);
      for (std::size_t q = 0; q < bc.size(); ++q)
      {
        if (!used[bc[q]])
        {
          used[bc[q]] = 1;
          pattern.push_back(bc[q]);
        }
        acc[bc[q]] += av[p] * bv[q];
      }
    }
    std::sort(pattern.begin(), pattern.end());
    for (Index j : pattern)
    {
      if (!(drop_zeros && acc[j] == 0.0))
      {
        cols.push_back(j);
        vals.push_back(acc[j]);
      }
      acc[j] = 0.0;
      used[j] = 0;
    }
    offsets[i + 1] = static_cast<Index>(cols.size());
  }
  return SparseMatrix(a.Rows(), b.Cols(), std::move(offsets), std::move(cols), std::move(vals));
}

SparseMatrix add_scaled(const SparseMatrix &a, const SparseMatrix &b, double s)
{
  CheckSameShape(a, b, "add_scaled");
  std::vector<Index> offsets(static_cast<std::size_t>(a.Rows()) + 1, 0);
  std::vector<Index> cols;
  std::vector<double> vals;
  cols.reserve(a.NonZeros() + b.NonZeros());
  vals.reserve(a.NonZeros() + b.NonZeros());
  for (Index i = 0; i < a.Rows(); ++i)
  {
    auto ac = a.RowColumns(i);
    auto av = a.RowValues(i);
    auto bc = b.RowColumns(i);
    auto bv = b.RowValues(i);
    std::size_t p = 0, q = 0;
    while (p < ac.size() || q < bc.size())
    {
      if (q == bc.size() || (p < ac.size() && ac[p] < bc[q]))
      {
        cols.push_back(ac[p]);
        vals.push_back(av[p++]);
      }
      else if (p == ac.size() || bc[q] < ac[p])
      {
        cols.push_back(bc[q]);
        vals.push_back(s * bv[q++]);
      }
      else
      {
        cols.push_back(ac[p]);
        vals.push_back(av[p++] + s * bv[q++]);
      }
    }
    offsets[i + 1] = static_cast<Index>(cols.size());
  }
  return SparseMatrix(a.Rows(), a.Cols(), std::move(offsets), std::move(cols), std::move(vals));
}

SparseMatrix scaled(const SparseMatrix &a, double s)
{
  std::vector<double> vals(a.Values());
  for (double &v : vals)
  {
    v *= s;
  }
  return SparseMatrix(a.Rows(), a.Cols(), a.RowOffsets(), a.Columns(), std::move(vals));
}

SparseMatrix symmetrize(const SparseMatrix &a)
{
  if (a.Rows() != a.Cols())
  {
    throw std::invalid_argument("symmetrize: matrix is not square");
  }
  return scaled(add_scaled(a, transpose(a), 1.0), 0.5);
}

double asymmetry(const SparseMatrix &a)
{
  if (a.Rows() != a.Cols())
  {
    throw std::invalid_argument("asymmetry: matrix is not square");
  }
  double scale = 0.0, diff = 0.0;
  const SparseMatrix d = add_scaled(a, transpose(a), -1.0);
  for (double v : a.Values())
  {
    scale = std::max(scale, std::abs(v));
  }
  for (double v : d.Values())
  {
    diff = std::max(diff, std::abs(v));
  }
  return scale == 0.0 ? 0.0 : diff / scale;
}

Eigen::MatrixXd to_dense(const SparseMatrix &m)
{
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(m.Rows(), m.Cols());
  for (Index i = 0; i < m.Rows(); ++i)
  {
    auto c = m.RowColumns(i);
    auto v = m.RowValues(i);
    for (std::size_t p = 0; p < c.size(); ++p)
    {
      d(i, c[p]) += v[p];
    }
  }
  return d;
}

double dot(std::span<const double> x, std::span<const double> y)
{
  if (x.size() != y.size())
  {
    throw std::invalid_argument("dot: length mismatch");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
  {
    s += x[i] * y[i];
  }
  return s;
}

double norm2(std::span<const double> x)
{
  return std::sqrt(dot(x, x));
}

}  // namespace hodge
