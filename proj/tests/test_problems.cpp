#include <doctest.h>

#include <cmath>

#include "altsplit/problems.hpp"
#include "altsplit/splittings.hpp"
#include "fixtures.hpp"

using namespace altsplit;

TEST_SUITE("problems") {

TEST_CASE("Laplace matrix is the Kronecker sum of 1-D stencils") {
    for (int n : {2, 3, 6}) {
        const LaplaceProblem p = make_laplace(n);
        const Index m = n - 1;
        const Matrix t = fixtures::tridiag(m, -1, 2, -1);
        const Matrix id = Matrix::Identity(m, m);
        CHECK(max_abs_diff(p.a, fixtures::kron(id, t) + fixtures::kron(t, id)) == 0.0);
    }
}

TEST_CASE("bilinear boundary data is reproduced exactly at the nodes") {
    const int n = 7;
    const LaplaceProblem p = make_laplace(n);
    const double h = 1.0 / n;
    for (int j = 1; j < n; ++j)
        for (int i = 1; i < n; ++i) CHECK(p.exact((j - 1) * (n - 1) + (i - 1)) == doctest::Approx(laplace_boundary(i * h, j * h)).epsilon(1e-12));
    CHECK((p.a * p.exact - p.b).norm() < 1e-12);
}

TEST_CASE("Jacobi spectral radius is cos(pi h)") {
    for (int n : {5, 12, 21}) {
        const LaplaceProblem p = make_laplace(n);
        const double rho = spectral_radius(diag_scaling_splitting(p.a, 1.0).iteration_matrix());
        CHECK(rho == doctest::Approx(std::cos(M_PI / n)).epsilon(1e-12));
    }
}

TEST_CASE("random walk is a reflecting chain with a one-dimensional null space") {
    const RandomWalkProblem p = make_random_walk(10);
    CHECK((p.t.rowwise().sum() - Vector::Ones(10)).norm() < 1e-15);
    CHECK(p.t.minCoeff() >= 0.0);
    CHECK(rank(p.a) == 9);
    CHECK(index_at_most_one(p.a));
    // stationary vector is proportional to (1, 2, ..., 2, 1)
    Vector pi = Vector::Constant(10, 2.0);
    pi(0) = pi(9) = 1.0;
    CHECK((p.a * pi).norm() < 1e-14);
}

TEST_CASE("problem sizes are validated") {
    CHECK_THROWS_AS(make_laplace(1), InvalidArgument);
    CHECK_THROWS_AS(make_random_walk(2), InvalidArgument);
    CHECK(make_laplace(21).a.rows() == 400);
}

}
