// Copyright the hodge-precond authors.
// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <doctest.h>
#include "hodge/precond.hpp"
#include "oracles.hpp"

using namespace hodge;

namespace
{

Vector random_vector(std::size_t n, std::mt19937 &rng)
{
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vector v(n);
  for (auto &x : v)
  {
    x = u(rng);
  }
  return v;
}

double max_diff(std::span<const double> a, std::span<const double> b)
{
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
  {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

}  // namespace

TEST_SUITE("precond")
{
  TEST_CASE("alpha = 1 substitution in the Q block")
  {
    for (int dim : {2, 3})
    {
      const DeRhamComplex c(build_structured_mesh(dim, 2));
      for (int k = 1; k <= dim; ++k)
      {
        const Eigen::MatrixXd d = to_dense(c.Coboundary(k - 1));
        const Eigen::MatrixXd expect =
            to_dense(c.Mass(k - 1)) + 2.0 * d.transpose() * to_dense(c.Mass(k)) * d;
        const Eigen::MatrixXd got = to_dense(preconditioner_q_block(c, k, 1.0));
        CHECK((got - expect).cwiseAbs().maxCoeff() <= 1e-13 * expect.cwiseAbs().maxCoeff());
      }
    }
  }

  TEST_CASE("V block is mass plus stiffness, mass only at the top degree")
  {
    const DeRhamComplex c(build_structured_mesh(3, 2));
    const double alpha = 3.0;
    for (int k = 1; k <= 3; ++k)
    {
      Eigen::MatrixXd expect = to_dense(c.Mass(k)) / (1.0 + alpha);
      if (k < 3)
      {
        const Eigen::MatrixXd d = to_dense(c.Coboundary(k));
        expect += d.transpose() * to_dense(c.Mass(k + 1)) * d;
      }
      const Eigen::MatrixXd got = to_dense(preconditioner_v_block(c, k, alpha));
      CHECK((got - expect).cwiseAbs().maxCoeff() <= 1e-13 * expect.cwiseAbs().maxCoeff());
    }
  }

  TEST_CASE("round trip through the block matrices")
  {
    std::mt19937 rng(3);
    const DeRhamComplex c(build_structured_mesh(2, 4));
    for (int k = 1; k <= 2; ++k)
    {
      const auto p = build_preconditioner(c, k, 0.1);
      const Vector r = random_vector(p.NumU() + p.NumP(), rng);
      const Vector z = p.Apply(r);
      const Vector back_u = spmv(p.VBlock(), std::span<const double>(z).first(p.NumU()));
      const Vector back_p = spmv(p.QBlock(), std::span<const double>(z).subspan(p.NumU()));
      CHECK(max_diff(back_u, std::span<const double>(r).first(p.NumU())) <= 1e-10);
      CHECK(max_diff(back_p, std::span<const double>(r).subspan(p.NumU())) <= 1e-10);
    }
  }

  TEST_CASE("top degree with small alpha inverts the scaled mass")
  {
    std::mt19937 rng(9);
    const DeRhamComplex c(build_structured_mesh(2, 3));
    const double alpha = 1e-4;
    const auto p = build_preconditioner(c, 2, alpha);
    const Vector r = random_vector(p.NumU() + p.NumP(), rng);
    const Vector z = p.Apply(r);
    const Eigen::MatrixXd m = to_dense(c.Mass(2));
    const Eigen::VectorXd ru = Eigen::Map<const Eigen::VectorXd>(r.data(), p.NumU());
    const Eigen::VectorXd expect = (1.0 + alpha) * m.llt().solve(ru);
    for (Index i = 0; i < p.NumU(); ++i)
    {
      CHECK(std::abs(z[i] - expect(i)) <= 1e-10 * expect.cwiseAbs().maxCoeff());
    }
  }

  TEST_CASE("zero and unit vectors")
  {
    const DeRhamComplex c(build_structured_mesh(2, 2));
    const auto p = build_preconditioner(c, 1, 1.0);
    const Vector zero(p.NumU() + p.NumP(), 0.0);
    CHECK(p.Apply(zero) == zero);

    Vector e1(p.NumU(), 0.0);
    e1[0] = 1.0;
    Vector r = spmv(p.VBlock(), e1);
    r.resize(p.NumU() + p.NumP(), 0.0);
    const Vector z = p.Apply(r);
    Vector expect(p.NumU() + p.NumP(), 0.0);
    expect[0] = 1.0;
    CHECK(max_diff(z, expect) <= 1e-10);
  }

  TEST_CASE("application matches the dense block inverses")
  {
    std::mt19937 rng(14);
    for (int dim : {2, 3})
    {
      const DeRhamComplex c(oracle_ref::jittered_mesh(dim, 2, rng));
      for (int k = 1; k <= dim; ++k)
      {
        for (double alpha : {1e-4, 1.0, 1e4})
        {
          const auto p = build_preconditioner(c, k, alpha);
          const Vector r = random_vector(p.NumU() + p.NumP(), rng);
          const Vector z = p.Apply(r);
          const Eigen::VectorXd ru = Eigen::Map<const Eigen::VectorXd>(r.data(), p.NumU());
          const Eigen::VectorXd rp =
              Eigen::Map<const Eigen::VectorXd>(r.data() + p.NumU(), p.NumP());
          const Eigen::VectorXd zu = to_dense(p.VBlock()).ldlt().solve(ru);
          const Eigen::VectorXd zp = to_dense(p.QBlock()).ldlt().solve(rp);
          Vector expect(zu.data(), zu.data() + zu.size());
          expect.insert(expect.end(), zp.data(), zp.data() + zp.size());
          double scale = 0.0;
          for (double v : expect)
          {
            scale = std::max(scale, std::abs(v));
          }
          CHECK(max_diff(z, expect) <= 1e-9 * scale);
        }
      }
    }
  }

  TEST_CASE("application is symmetric and positive")
  {
    std::mt19937 rng(15);
    const DeRhamComplex c(build_structured_mesh(3, 2));
    for (int k = 1; k <= 3; ++k)
    {
      for (double alpha : {1e-4, 1.0, 1e4})
      {
        const auto p = build_preconditioner(c, k, alpha);
        for (int trial = 0; trial < 3; ++trial)
        {
          const Vector r = random_vector(p.NumU() + p.NumP(), rng);
          const Vector s = random_vector(p.NumU() + p.NumP(), rng);
          const double rs = dot(p.Apply(r), s), sr = dot(r, p.Apply(s));
          CHECK(std::abs(rs - sr) <= 1e-10 * std::max(1.0, std::abs(rs)));
          CHECK(dot(p.Apply(r), r) > 0.0);
        }
      }
    }
  }

  TEST_CASE("errors")
  {
    const DeRhamComplex c(build_structured_mesh(2, 1));
    CHECK_THROWS_AS(build_preconditioner(c, 1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(build_preconditioner(c, 0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(build_preconditioner(c, 3, 1.0), std::invalid_argument);
    const auto p = build_preconditioner(c, 1, 1.0);
    CHECK_THROWS_AS(p.Apply(Vector(2)), std::invalid_argument);
  }
}
