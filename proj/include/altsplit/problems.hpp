#pragma once

#include "altsplit/dense_core.hpp"

namespace altsplit {

/// Dirichlet problem for the Laplace equation on the unit square with
/// boundary data g(x, y) = x + y + xy, five-point stencil, h = 1/N.
struct LaplaceProblem {
    int grid = 0;  ///< N
    Matrix a;      ///< order (N-1)^2, interior nodes ordered x-fastest
    Vector b;
    Vector exact;
};

/// Throws InvalidArgument for N < 2.
LaplaceProblem make_laplace(int n);

/// Reflecting random walk on n states.
struct RandomWalkProblem {
    int states = 0;
    Matrix t;  ///< transition matrix, rows sum to 1
    Matrix a;  ///< I - T^t
};

/// Throws InvalidArgument for n < 3.
RandomWalkProblem make_random_walk(int n);

/// Boundary data used by make_laplace.
double laplace_boundary(double x, double y);

}  // namespace altsplit
