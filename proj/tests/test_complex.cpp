// Copyright the hodge-precond authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>
#include <doctest.h>
#include "hodge/complex.hpp"
#include "hodge/quadrature.hpp"
#include "hodge/whitney.hpp"
#include "oracles.hpp"

using namespace hodge;

namespace
{

const std::vector<Point> kRefTriangle = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
const std::vector<Point> kRefTet = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

double rel_max_diff(const Eigen::MatrixXd &a, const Eigen::MatrixXd &b)
{
  return (a - b).cwiseAbs().maxCoeff() / b.cwiseAbs().maxCoeff();
}

}  // namespace

TEST_SUITE("complex")
{
  TEST_CASE("coboundary of a single triangle")
  {
    const auto mesh = oracle_ref::single_cell(kRefTriangle);
    Eigen::MatrixXd d0(3, 3);
    d0 << -1, 1, 0,  //
        -1, 0, 1,    //
        0, -1, 1;
    CHECK(to_dense(coboundary(mesh, 0)) == d0);
    Eigen::MatrixXd d1(1, 3);
    d1 << 1, -1, 1;
    CHECK(to_dense(coboundary(mesh, 1)) == d1);
    CHECK(spgemm(coboundary(mesh, 1), coboundary(mesh, 0)).NonZeros() == 0);
  }

  TEST_CASE("coboundary of a single tetrahedron follows the deletion rule")
  {
    const auto mesh = oracle_ref::single_cell(kRefTet);
    // faces (0,1,2),(0,1,3),(0,2,3),(1,2,3); deleting vertex j gives sign (-1)^j
    Eigen::MatrixXd d2(1, 4);
    d2 << -1, 1, -1, 1;
    CHECK(to_dense(coboundary(mesh, 2)) == d2);
  }

  TEST_CASE("rank of the gradient matrix on the 2x2 square")
  {
    const DeRhamComplex c(build_structured_mesh(2, 2));
    CHECK(integer_rank(c.Coboundary(0)) == 8);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(to_dense(c.Coboundary(0)));
    CHECK(lu.rank() == 8);
  }

  TEST_CASE("coboundaries are integer valued and compose to exact zero")
  {
    std::mt19937 rng(4);
    for (int dim : {2, 3})
    {
      for (const auto &mesh : {build_structured_mesh(dim, 3), oracle_ref::jittered_mesh(dim, 2, rng)})
      {
        const DeRhamComplex c(mesh);
        for (int k = 0; k < dim; ++k)
        {
          const auto &d = c.Coboundary(k);
          CHECK(d.IsIntegerValued());
          for (double v : d.Values())
          {
            CHECK((v == 1.0 || v == -1.0));
          }
          if (k + 1 < dim)
          {
            const Eigen::MatrixXd dd = to_dense(c.Coboundary(k + 1)) * to_dense(d);
            CHECK(dd.isZero(0.0));
          }
        }
        // each edge has one +1 and one -1
        const Eigen::VectorXd sums = to_dense(c.Coboundary(0)).rowwise().sum();
        CHECK(sums.isZero(0.0));
      }
    }
  }

  TEST_CASE("top-degree mass is the inverse cell volume")
  {
    // Whitney n-forms carry unit integral, so their proxy on a cell T is +-1/|T|.
    CHECK(to_dense(mass_matrix(oracle_ref::single_cell(kRefTriangle), 2))(0, 0) ==
          doctest::Approx(2.0).epsilon(1e-14));
    CHECK(to_dense(mass_matrix(oracle_ref::single_cell(kRefTet), 3))(0, 0) ==
          doctest::Approx(6.0).epsilon(1e-14));
    const auto mesh = build_structured_mesh(2, 3);
    const Eigen::MatrixXd m = to_dense(mass_matrix(mesh, 2));
    for (std::size_t c = 0; c < mesh.NumCells(); ++c)
    {
      CHECK(m(c, c) == doctest::Approx(1.0 / mesh.Volume(c)).epsilon(1e-13));
    }
    CHECK(m.diagonal().asDiagonal().toDenseMatrix() == m);
  }

  TEST_CASE("P1 mass on the reference triangle")
  {
    Eigen::Matrix3d expect;
    expect << 2, 1, 1, 1, 2, 1, 1, 1, 2;
    expect /= 24.0;
    const Eigen::MatrixXd m = to_dense(mass_matrix(oracle_ref::single_cell(kRefTriangle), 0));
    CHECK((m - expect).cwiseAbs().maxCoeff() <= 1e-15);
  }

  TEST_CASE("edge mass on the reference triangle matches the quadrature oracle")
  {
    const auto mesh = oracle_ref::single_cell(kRefTriangle);
    const Eigen::MatrixXd m = to_dense(mass_matrix(mesh, 1));
    const Eigen::MatrixXd ref = oracle_ref::mass_matrix(mesh, 1);
    CHECK((m - ref).cwiseAbs().maxCoeff() <= 1e-12);
    // |lambda_0 grad lambda_1 - lambda_1 grad lambda_0|^2 integrates to 1/4 + 1/12
    CHECK(m(0, 0) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  }

  TEST_CASE("all Whitney masses match the quadrature oracle on random simplices")
  {
    std::mt19937 rng(2024);
    for (int dim : {2, 3})
    {
      for (int trial = 0; trial < 6; ++trial)
      {
        const auto mesh = oracle_ref::single_cell(oracle_ref::random_simplex(dim, rng));
        for (int k = 0; k <= dim; ++k)
        {
          const Eigen::MatrixXd m = to_dense(mass_matrix(mesh, k));
          const Eigen::MatrixXd ref = oracle_ref::mass_matrix(mesh, k);
          CHECK(rel_max_diff(m, ref) <= 1e-12);
        }
      }
    }
  }

  TEST_CASE("assembled masses match the quadrature oracle on jittered meshes")
  {
    std::mt19937 rng(99);
    for (int dim : {2, 3})
    {
      const auto mesh = oracle_ref::jittered_mesh(dim, 2, rng);
      for (int k = 0; k <= dim; ++k)
      {
        CHECK(rel_max_diff(to_dense(mass_matrix(mesh, k)), oracle_ref::mass_matrix(mesh, k)) <=
              1e-12);
      }
    }
  }

  TEST_CASE("mass matrices are symmetric positive definite")
  {
    for (int dim : {2, 3})
    {
      const DeRhamComplex c(build_structured_mesh(dim, 2));
      for (int k = 0; k <= dim; ++k)
      {
        const Eigen::MatrixXd m = to_dense(c.Mass(k));
        CHECK((m - m.transpose()).cwiseAbs().maxCoeff() == 0.0);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
        CHECK(es.eigenvalues().minCoeff() > 0.0);
      }
    }
  }

  TEST_CASE("exterior derivative of Whitney forms is given by the coboundary")
  {
    // d phi_e = sum_f D[f, e] phi_f, checked with closed-form derivatives:
    // curl(l_a g_b - l_b g_a) = 2 g_a x g_b and div of the face form = 6 g_a . (g_b x g_c).
    std::mt19937 rng(8);
    const std::array<double, 4> pts[] = {{0.25, 0.25, 0.25, 0.25}, {0.7, 0.1, 0.1, 0.1},
                                         {0.1, 0.2, 0.3, 0.4}};
    for (int dim : {2, 3})
    {
      const auto verts = oracle_ref::random_simplex(dim, rng);
      const auto mesh = oracle_ref::single_cell(verts);
      const Eigen::MatrixXd g = oracle_ref::barycentric_gradients(verts, dim);
      auto lifted = [&](int a) { return oracle_ref::lift(g.row(a).transpose()); };
      const auto edges = oracle_ref::subsets(dim + 1, 2);
      const auto faces = oracle_ref::subsets(dim + 1, 3);
      const Eigen::MatrixXd d1 = to_dense(coboundary(mesh, 1));
      for (std::size_t e = 0; e < edges.size(); ++e)
      {
        const Eigen::Vector3d curl = 2.0 * lifted(edges[e][0]).cross(lifted(edges[e][1]));
        for (auto l : pts)
        {
          // renormalize so the first dim + 1 coordinates are barycentric
          double total = 0.0;
          for (int i = 0; i <= dim; ++i)
          {
            total += l[i];
          }
          for (int i = 0; i <= dim; ++i)
          {
            l[i] /= total;
          }
          Eigen::VectorXd sum = Eigen::VectorXd::Zero(dim == 2 ? 1 : 3);
          for (std::size_t f = 0; f < faces.size(); ++f)
          {
            sum += d1(f, e) * oracle_ref::whitney(g, dim, faces[f], l);
          }
          if (dim == 2)
          {
            CHECK(std::abs(sum(0) - curl(2)) <= 1e-12 * (1.0 + std::abs(curl(2))));
          }
          else
          {
            CHECK((sum - curl).norm() <= 1e-12 * (1.0 + curl.norm()));
          }
        }
      }
      if (dim == 3)
      {
        const Eigen::MatrixXd d2 = to_dense(coboundary(mesh, 2));
        const std::vector<int> cell = {0, 1, 2, 3};
        const double vol_form = oracle_ref::whitney(g, 3, cell, pts[0])(0);
        for (std::size_t f = 0; f < faces.size(); ++f)
        {
          const auto &t = faces[f];
          const double div = 6.0 * lifted(t[0]).dot(lifted(t[1]).cross(lifted(t[2])));
          CHECK(std::abs(div - d2(0, f) * vol_form) <= 1e-12 * (1.0 + std::abs(div)));
        }
      }
    }
  }

  TEST_CASE("exactness of contractible meshes")
  {
    const auto tri = check_exactness(DeRhamComplex(oracle_ref::single_cell(kRefTriangle)));
    CHECK(tri.cohomology == std::vector<Index>{1, 0, 0});
    CHECK(tri.ContractibleExact());
    const auto cube = check_exactness(DeRhamComplex(build_structured_mesh(3, 1)));
    CHECK(cube.cohomology == std::vector<Index>{1, 0, 0, 0});
    CHECK(cube.dd_zero);
    for (int m : {2, 3})
    {
      CHECK(check_exactness(DeRhamComplex(build_structured_mesh(2, m))).ContractibleExact());
      CHECK(check_exactness(DeRhamComplex(build_structured_mesh(3, m))).ContractibleExact());
    }
    const auto r = check_exactness(DeRhamComplex(build_structured_mesh(2, 2)));
    for (int k = 1; k < 2; ++k)
    {
      CHECK(r.ranks[k - 1] + r.ranks[k] == r.dims[k]);
    }
    CHECK(r.ranks[0] == r.dims[0] - 1);
  }

  TEST_CASE("two disjoint triangles have two components")
  {
    const std::vector<Point> v = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0},
                                  {3, 0, 0}, {4, 0, 0}, {3, 1, 0}};
    const SimplicialMesh mesh(2, v, {0, 1, 2, 3, 4, 5});
    const auto r = check_exactness(DeRhamComplex(mesh));
    CHECK(r.cohomology[0] == 2);
    CHECK(r.cohomology[1] == 0);
    CHECK_FALSE(r.ContractibleExact());
  }

  TEST_CASE("an annulus has one-dimensional first cohomology")
  {
    // 3x3 square with the centre cell removed
    const auto full = build_structured_mesh(2, 3);
    std::vector<Index> cells;
    for (std::size_t c = 0; c < full.NumCells(); ++c)
    {
      double cx = 0.0, cy = 0.0;
      for (Index v : full.Cells()[c])
      {
        cx += full.Vertices()[v][0] / 3.0;
        cy += full.Vertices()[v][1] / 3.0;
      }
      if (cx > 1.0 / 3 && cx < 2.0 / 3 && cy > 1.0 / 3 && cy < 2.0 / 3)
      {
        continue;
      }
      const auto cell = full.Cells()[c];
      cells.insert(cells.end(), cell.begin(), cell.end());
    }
    const auto r = check_exactness(DeRhamComplex(SimplicialMesh(2, full.Vertices(), cells)));
    CHECK(r.cohomology == std::vector<Index>{1, 1, 0});
  }

  TEST_CASE("stiffness is zero at the top degree")
  {
    const DeRhamComplex c(build_structured_mesh(2, 2));
    CHECK(c.Stiffness(2).NonZeros() == 0);
    CHECK(c.Stiffness(2).Rows() == c.Size(2));
    CHECK_THROWS_AS(c.Stiffness(3), std::invalid_argument);
    CHECK_THROWS_AS(coboundary(c.Mesh(), 2), std::invalid_argument);
    CHECK_THROWS_AS(mass_matrix(c.Mesh(), 3), std::invalid_argument);
  }

  TEST_CASE("degenerate geometry is an assembly error")
  {
    const std::vector<Point> flat = {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}};
    CHECK_THROWS_AS(simplex_geometry(2, flat), AssemblyError);
  }

  TEST_CASE("simplex rules integrate monomials exactly up to their degree")
  {
    for (int dim : {2, 3})
    {
      const auto &verts = dim == 2 ? kRefTriangle : kRefTet;
      for (int degree : {1, 2, 4, 6})
      {
        const auto rule = simplex_rule(dim, degree);
        double wsum = 0.0;
        for (double w : rule.weights)
        {
          wsum += w;
        }
        CHECK(std::abs(wsum - 1.0) <= 1e-14);
        // all barycentric monomials l1^a l2^b l3^c with a + b + c = degree
        for (int a = 0; a <= degree; ++a)
        {
          for (int b = 0; a + b <= degree; ++b)
          {
            const int c = degree - a - b;
            auto f = [&](const std::array<double, 4> &l)
            { return std::pow(l[0], a) * std::pow(l[1], b) * std::pow(l[2], c); };
            double q = 0.0;
            for (std::size_t i = 0; i < rule.points.size(); ++i)
            {
              q += rule.weights[i] * f(rule.points[i]);
            }
            const double vol = dim == 2 ? 0.5 : 1.0 / 6.0;
            CHECK(std::abs(q * vol - oracle_ref::integrate(verts, dim, f)) <= 1e-14);
          }
        }
      }
    }
    CHECK_THROWS_AS(simplex_rule(1, 2), std::invalid_argument);
  }

  TEST_CASE("Gauss-Legendre nodes and weights agree with Golub-Welsch")
  {
    for (int n : {1, 2, 5, 9})
    {
      std::vector<double> x, w, rx, rw;
      gauss_legendre(n, x, w);
      oracle_ref::golub_welsch(n, rx, rw);
      for (int i = 0; i < n; ++i)
      {
        CHECK(std::abs(x[i] - rx[i]) <= 1e-13);
        CHECK(std::abs(w[i] - rw[i]) <= 1e-13);
      }
    }
  }
}
