// Copyright the hodge-precond authors.
// SPDX-License-Identifier: Apache-2.0

#include "hodge/ldlt.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <Eigen/OrderingMethods>
#include <Eigen/SparseCore>

namespace hodge
{

namespace
{

std::vector<Index> MinimumDegreeOrder(const SparseMatrix &m)
{
  std::vector<Eigen::Triplet<double, int>> entries;
  entries.reserve(m.NonZeros());
  for (Index i = 0; i < m.Rows(); ++i)
  {
    for (Index j : m.RowColumns(i))
    {
      entries.emplace_back(i, j, 1.0);
    }
  }
  Eigen::SparseMatrix<double, Eigen::ColMajor, int> pattern(m.Rows(), m.Cols());
  pattern.setFromTriplets(entries.begin(), entries.end());
  Eigen::PermutationMatrix<Eigen::Dynamic, Eigen::Dynamic, int> p;
  Eigen::AMDOrdering<int> amd;
  amd(pattern, p);
  // Eigen returns the inverse permutation, i.e. indices()[new] = old.
  return {p.indices().data(), p.indices().data() + p.indices().size()};
}

}  // namespace

SymmetricFactorization::SymmetricFactorization(const SparseMatrix &m, Ordering ordering)
  : n(m.Rows())
{
  if (m.Rows() != m.Cols())
  {
    throw std::invalid_argument("ldlt_factorize: matrix is not square");
  }
  const SparseMatrix sym = symmetrize(m);

  perm.resize(n);
  if (ordering == Ordering::MinimumDegree && n > 0)
  {
    perm = MinimumDegreeOrder(sym);
  }
  else
  {
    std::iota(perm.begin(), perm.end(), 0);
  }
  std::vector<Index> inv(n);
  for (Index i = 0; i < n; ++i)
  {
    inv[perm[i]] = i;
  }

  // Permuted matrix, stored by columns (symmetric, so rows of sym map to columns).
  std::vector<Triplet> t;
  t.reserve(sym.NonZeros());
  double max_diag = 0.0;
  for (Index i = 0; i < n; ++i)
  {
    auto c = sym.RowColumns(i);
    auto v = sym.RowValues(i);
    for (std::size_t p = 0; p < c.size(); ++p)
    {
      t.push_back({inv[c[p]], inv[i], v[p]});
      if (c[p] == i)
      {
        max_diag = std::max(max_diag, std::abs(v[p]));
      }
    }
  }
  // Row i of the transpose-free CSR equals column i of the symmetric matrix.
  const SparseMatrix a = from_triplets(n, n, t);
  const auto &ap = a.RowOffsets();
  const auto &ai = a.Columns();
  const auto &ax = a.Values();

  // Symbolic: elimination tree and column counts.
  std::vector<Index> parent(n), lnz(n), flag(n);
  for (Index k = 0; k < n; ++k)
  {
    parent[k] = -1;
    flag[k] = k;
    lnz[k] = 0;
    for (Index p = ap[k]; p < ap[k + 1]; ++p)
    {
      for (Index i = ai[p]; i < k && flag[i] != k; i = parent[i])
      {
        if (parent[i] == -1)
        {
          parent[i] = k;
        }
        ++lnz[i];
        flag[i] = k;
      }
    }
  }
  lp.assign(n + 1, 0);
  for (Index k = 0; k < n; ++k)
  {
    lp[k + 1] = lp[k] + lnz[k];
  }
  li.resize(lp[n]);
  lx.resize(lp[n]);
  d.resize(n);

  // Numeric: up-looking, one row of L per step.
  const double tol = 1e-14 * max_diag;
  std::vector<double> y(n, 0.0);
  std::vector<Index> pattern(n);
  for (Index k = 0; k < n; ++k)
  {
    Index top = n;
    flag[k] = k;
    lnz[k] = 0;
    for (Index p = ap[k]; p < ap[k + 1]; ++p)
    {
      Index i = ai[p];
      if (i > k)
      {
        continue;
      }
      y[i] += ax[p];
      Index len = 0;
      for (; flag[i] != k; i = parent[i])
      {
        pattern[len++] = i;
        flag[i] = k;
      }
      while (len > 0)
      {
        pattern[--top] = pattern[--len];
      }
    }
    d[k] = y[k];
    y[k] = 0.0;
    for (; top < n; ++top)
    {
      const Index i = pattern[top];
      const double yi = y[i];
      y[i] = 0.0;
      const Index p2 = lp[i] + lnz[i];
      for (Index p = lp[i]; p < p2; ++p)
      {
        y[li[p]] -= lx[p] * yi;
      }
      const double lki = yi / d[i];
      d[k] -= lki * yi;
      li[p2] = k;
      lx[p2] = lki;
      ++lnz[i];
    }
    if (!(d[k] > tol))
    {
      throw NotSpdError("ldlt_factorize: non-positive pivot " + std::to_string(d[k]) +
                        " at step " + std::to_string(k) + " (matrix is not SPD)");
    }
  }
}

void SymmetricFactorization::Solve(std::span<const double> b, std::span<double> x) const
{
  if (b.size() != static_cast<std::size_t>(n) || x.size() != static_cast<std::size_t>(n))
  {
    throw std::invalid_argument("SymmetricFactorization::Solve: length mismatch");
  }
  Vector w(n);
  for (Index i = 0; i < n; ++i)
  {
    w[i] = b[perm[i]];
  }
  for (Index j = 0; j < n; ++j)
  {
    for (Index p = lp[j]; p < lp[j + 1]; ++p)
    {
      w[li[p]] -= lx[p] * w[j];
    }
  }
  for (Index j = 0; j < n; ++j)
  {
    w[j] /= d[j];
  }
  for (Index j = n - 1; j >= 0; --j)
  {
    for (Index p = lp[j]; p < lp[j + 1]; ++p)
    {
      w[j] -= lx[p] * w[li[p]];
    }
  }
  for (Index i = 0; i < n; ++i)
  {
    x[perm[i]] = w[i];
  }
}

Vector SymmetricFactorization::Solve(std::span<const double> b) const
{
  Vector x(n);
  Solve(b, x);
  return x;
}

SymmetricFactorization ldlt_factorize(const SparseMatrix &m)
{
  return SymmetricFactorization(m);
}

}  // namespace hodge
