// Copyright the hodge-precond authors.
// SPDX-License-Identifier: Apache-2.0

#include "hodge/dense.hpp"

#include <string>

namespace hodge
{

namespace
{

Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd>
Solve(const Eigen::MatrixXd &a, const Eigen::MatrixXd &b, Index cap, int options)
{
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
  {
    throw std::invalid_argument("dense_generalized_eigs: dimension mismatch");
  }
  if (a.rows() > cap)
  {
    throw SizeError("dense_generalized_eigs: dimension " + std::to_string(a.rows()) +
                    " exceeds dense cap " + std::to_string(cap));
  }
  Eigen::LLT<Eigen::MatrixXd> llt(b);
  if (llt.info() != Eigen::Success)
  {
    throw std::invalid_argument("dense_generalized_eigs: B is not SPD");
  }
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(a, b,
                                                              options | Eigen::Ax_lBx);
  if (es.info() != Eigen::Success)
  {
    throw std::runtime_error("dense_generalized_eigs: eigensolver did not converge");
  }
  return es;
}

}  // namespace

Vector dense_generalized_eigs(const Eigen::MatrixXd &a, const Eigen::MatrixXd &b, Index cap)
{
  auto es = Solve(a, b, cap, Eigen::EigenvaluesOnly);
  const auto &v = es.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

GeneralizedEigensystem dense_generalized_eigensystem(const Eigen::MatrixXd &a,
                                                     const Eigen::MatrixXd &b, Index cap)
{
  auto es = Solve(a, b, cap, Eigen::ComputeEigenvectors);
  return {es.eigenvalues(), es.eigenvectors()};
}

Eigen::MatrixXd null_space(const Eigen::MatrixXd &m)
{
  const Index n = static_cast<Index>(m.cols());
  if (m.rows() == 0)
  {
    return Eigen::MatrixXd::Identity(n, n);
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m.transpose());
  const Index rank = static_cast<Index>(qr.rank());
  Eigen::MatrixXd q = qr.householderQ();
  return q.rightCols(n - rank);
}

Eigen::MatrixXd orthogonal_complement(const Eigen::MatrixXd &c, Index n)
{
  if (c.cols() == 0)
  {
    return Eigen::MatrixXd::Identity(n, n);
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(c);
  const Index rank = static_cast<Index>(qr.rank());
  Eigen::MatrixXd q = qr.householderQ();
  return q.rightCols(n - rank);
}

}  // namespace hodge
