// Copyright the hodge-precond authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>
#include <doctest.h>
#include "hodge/system.hpp"
#include "hodge/whitney.hpp"
#include "oracles.hpp"

using namespace hodge;

namespace
{

const std::vector<Point> kRefTriangle = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};

Eigen::VectorXd as_eigen(const Vector &v)
{
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

// Cubic field; with linear Whitney proxies the integrand has degree 4.
void cubic(const Point &x, std::span<double> out)
{
  for (std::size_t i = 0; i < out.size(); ++i)
  {
    out[i] = x[0] * x[0] * x[1] - 2.0 * x[2] * x[2] * x[2] + (1.0 + i) * x[0] + 0.5;
  }
}

// Load vector by independent high-order quadrature and closed-form Whitney forms.
Eigen::VectorXd reference_load(const SimplicialMesh &mesh, int k)
{
  const int dim = mesh.Dim();
  Eigen::VectorXd f = Eigen::VectorXd::Zero(mesh.NumSimplices(k));
  const auto faces = oracle_ref::subsets(dim + 1, k + 1);
  for (std::size_t c = 0; c < mesh.NumCells(); ++c)
  {
    const auto cell = mesh.Cells()[c];
    std::vector<Point> verts;
    for (Index v : cell)
    {
      verts.push_back(mesh.Vertices()[v]);
    }
    const Eigen::MatrixXd g = oracle_ref::barycentric_gradients(verts, dim);
    for (const auto &face : faces)
    {
      std::vector<Index> s;
      for (int i : face)
      {
        s.push_back(cell[i]);
      }
      f(mesh.Simplices(k).Find(s)) += oracle_ref::integrate(
          verts, dim,
          [&](const std::array<double, 4> &l)
          {
            Point x{0, 0, 0};
            for (int i = 0; i <= dim; ++i)
            {
              for (int r = 0; r < dim; ++r)
              {
                x[r] += l[i] * verts[i][r];
              }
            }
            const Eigen::VectorXd phi = oracle_ref::whitney(g, dim, face, l);
            std::vector<double> val(phi.size());
            cubic(x, val);
            return phi.dot(as_eigen(val));
          });
    }
  }
  return f;
}

}  // namespace

TEST_SUITE("system")
{
  TEST_CASE("top degree on a single triangle")
  {
    const DeRhamComplex c(oracle_ref::single_cell(kRefTriangle));
    const auto s = assemble_system(c, 2, 1.0);
    CHECK(s.A.Rows() == 1);
    CHECK(s.A.Cols() == 1);
    CHECK(s.A.NonZeros() == 0);
    CHECK(s.C == c.Mass(1));
    CHECK(s.Bmat.Rows() == 3);
    CHECK(s.Bmat.Cols() == 1);
    const Eigen::MatrixXd expect =
        to_dense(c.Coboundary(1)).transpose() * to_dense(c.Mass(2));
    CHECK((to_dense(s.Bmat) - expect).cwiseAbs().maxCoeff() <= 1e-14);
  }

  TEST_CASE("block matrix is exactly symmetric")
  {
    for (int dim : {2, 3})
    {
      const DeRhamComplex c(build_structured_mesh(dim, 2));
      for (int k = 1; k <= dim; ++k)
      {
        for (double alpha : {1e-4, 1.0, 1e4})
        {
          const Eigen::MatrixXd a = to_dense(assemble_system(c, k, alpha).Assembled());
          CHECK(a == a.transpose());
        }
      }
    }
  }

  TEST_CASE("blocks agree with dense products")
  {
    std::mt19937 rng(12);
    for (int dim : {2, 3})
    {
      const DeRhamComplex c(oracle_ref::jittered_mesh(dim, 2, rng));
      for (int k = 1; k <= dim; ++k)
      {
        const auto s = assemble_system(c, k, 0.3);
        const Eigen::MatrixXd d = to_dense(c.Coboundary(k - 1));
        const Eigen::MatrixXd m = to_dense(c.Mass(k));
        CHECK((to_dense(s.Bmat) - d.transpose() * m).cwiseAbs().maxCoeff() <= 1e-14);
        CHECK((to_dense(s.C) - 0.3 * to_dense(c.Mass(k - 1))).cwiseAbs().maxCoeff() <= 1e-15);
        if (k < dim)
        {
          const Eigen::MatrixXd dk = to_dense(c.Coboundary(k));
          const Eigen::MatrixXd a = dk.transpose() * to_dense(c.Mass(k + 1)) * dk;
          CHECK((to_dense(s.A) - a).cwiseAbs().maxCoeff() <= 1e-13 * a.cwiseAbs().maxCoeff());
        }
        else
        {
          CHECK(s.A.NonZeros() == 0);
        }
      }
    }
  }

  TEST_CASE("Galerkin energy identity")
  {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const DeRhamComplex c(build_structured_mesh(3, 2));
    for (int k = 1; k < 3; ++k)
    {
      const auto s = assemble_system(c, k, 1.0);
      Vector x(c.Size(k));
      for (auto &v : x)
      {
        v = u(rng);
      }
      const double lhs = dot(x, spmv(s.A, x));
      const Vector dx = spmv(c.Coboundary(k), x);
      const double rhs = dot(dx, spmv(c.Mass(k + 1), dx));
      CHECK(std::abs(lhs - rhs) <= 1e-13 * std::abs(rhs));
    }
  }

  TEST_CASE("mixed Poisson Schur complement is SPD")
  {
    for (int dim : {2, 3})
    {
      const DeRhamComplex c(build_structured_mesh(dim, 2));
      const auto s = assemble_system(c, dim, 0.5);
      const Eigen::MatrixXd b = to_dense(s.Bmat);
      const Eigen::MatrixXd schur =
          to_dense(s.A) + b.transpose() * to_dense(s.C).llt().solve(b);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (schur + schur.transpose()));
      CHECK(es.eigenvalues().minCoeff() > 0.0);
    }
  }

  TEST_CASE("operator application matches the assembled matrix")
  {
    const DeRhamComplex c(build_structured_mesh(2, 3));
    const auto s = assemble_system(c, 1, 2.0);
    Vector x(s.Size());
    for (std::size_t i = 0; i < x.size(); ++i)
    {
      x[i] = std::sin(1.0 + i);
    }
    const Vector y = s.Apply(x);
    const Vector z = spmv(s.Assembled(), x);
    for (std::size_t i = 0; i < x.size(); ++i)
    {
      CHECK(std::abs(y[i] - z[i]) <= 1e-13);
    }
    CHECK_THROWS_AS(s.Apply(Vector(3)), std::invalid_argument);
  }

  TEST_CASE("invalid degree or alpha")
  {
    const DeRhamComplex c(build_structured_mesh(2, 1));
    CHECK_THROWS_AS(assemble_system(c, 0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(assemble_system(c, 3, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(assemble_system(c, 1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(assemble_system(c, 1, -1.0), std::invalid_argument);
  }

  TEST_CASE("zero load gives zero vectors")
  {
    const DeRhamComplex c(build_structured_mesh(3, 1));
    for (int k = 1; k <= 3; ++k)
    {
      const auto [f, g] = assemble_rhs(c, k, LoadSpec::Zero(), LoadSpec::Zero());
      CHECK(f == Vector(c.Size(k), 0.0));
      CHECK(g == Vector(c.Size(k - 1), 0.0));
    }
  }

  TEST_CASE("constant top-degree load integrates the unit-mass cell forms")
  {
    // The n-form basis has integral sign(T) over its cell.
    const auto mesh = build_structured_mesh(2, 2);
    const Vector f = load_vector(mesh, 2, LoadSpec::Constant(3.0));
    for (std::size_t c = 0; c < mesh.NumCells(); ++c)
    {
      const double sign = mesh.SignedVolume(c) > 0 ? 1.0 : -1.0;
      CHECK(f[c] == doctest::Approx(3.0 * sign).epsilon(1e-14));
    }
  }

  TEST_CASE("constant scalar load against P1 hats sums to the domain volume")
  {
    const auto mesh = build_structured_mesh(3, 2);
    const Vector f = load_vector(mesh, 0, LoadSpec::Constant(2.0));
    double total = 0.0;
    for (double v : f)
    {
      total += v;
    }
    CHECK(total == doctest::Approx(2.0).epsilon(1e-13));
  }

  TEST_CASE("polynomial loads match the quadrature oracle")
  {
    std::mt19937 rng(5);
    for (int dim : {2, 3})
    {
      const auto mesh = oracle_ref::jittered_mesh(dim, 2, rng);
      for (int k = 0; k <= dim; ++k)
      {
        const Vector f = load_vector(mesh, k, LoadSpec{cubic});
        const Eigen::VectorXd ref = reference_load(mesh, k);
        CHECK((as_eigen(f) - ref).cwiseAbs().maxCoeff() <= 1e-12 * ref.cwiseAbs().maxCoeff());
      }
    }
  }

  TEST_CASE("psi loads are insensitive to quadrature refinement")
  {
    const DeRhamComplex c(build_structured_mesh(2, 8));
    for (int k = 1; k <= 2; ++k)
    {
      const auto [f4, g4] = assemble_rhs(c, k, LoadSpec::Psi(), LoadSpec::Psi(), 4);
      const auto [f8, g8] = assemble_rhs(c, k, LoadSpec::Psi(), LoadSpec::Psi(), 8);
      const Eigen::VectorXd df = as_eigen(f4) - as_eigen(f8);
      const Eigen::VectorXd dg = as_eigen(g4) - as_eigen(g8);
      CHECK(df.norm() <= 1e-4 * as_eigen(f8).norm());
      CHECK(dg.norm() <= 1e-4 * as_eigen(g8).norm());
    }
  }

  TEST_CASE("psi load values")
  {
    const auto psi = LoadSpec::Psi();
    double out[3];
    psi.eval(Point{0.25, 0.0, 0.0}, std::span<double>(out, 3));
    CHECK(out[0] == doctest::Approx(1.0));
    CHECK(out[2] == doctest::Approx(1.0));
    psi.eval(Point{0.25, 0.25, 0.0}, std::span<double>(out, 1));
    CHECK(out[0] == doctest::Approx(2.0));
  }

  TEST_CASE("stacked right-hand side carries the minus sign on the second block")
  {
    const DeRhamComplex c(build_structured_mesh(2, 2));
    auto s = assemble_system(c, 1, 1.0);
    std::tie(s.F, s.G) = assemble_rhs(c, 1, LoadSpec::Psi(), LoadSpec::Psi());
    const Vector r = s.Rhs();
    REQUIRE(r.size() == static_cast<std::size_t>(s.Size()));
    for (Index i = 0; i < s.NumU(); ++i)
    {
      CHECK(r[i] == s.F[i]);
    }
    for (Index i = 0; i < s.NumP(); ++i)
    {
      CHECK(r[s.NumU() + i] == -s.G[i]);
    }
  }
}
