#include "altsplit/problems.hpp"

#include <string>

namespace altsplit {

double laplace_boundary(double x, double y) { return x + y + x * y; }

LaplaceProblem make_laplace(int n) {
    if (n < 2) throw InvalidArgument("Laplace grid needs N >= 2, got " + std::to_string(n));
    const int m = n - 1;
    const Index order = static_cast<Index>(m) * m;
    const double h = 1.0 / n;

    LaplaceProblem p;
    p.grid = n;
    p.a = Matrix::Zero(order, order);
    p.b = Vector::Zero(order);

    auto node = [m](int i, int j) { return static_cast<Index>(j - 1) * m + (i - 1); };
    const int di[] = {-1, 1, 0, 0};
    const int dj[] = {0, 0, -1, 1};
    for (int j = 1; j <= m; ++j) {
        for (int i = 1; i <= m; ++i) {
            const Index row = node(i, j);
            p.a(row, row) = 4.0;
            for (int k = 0; k < 4; ++k) {
                const int ni = i + di[k];
                const int nj = j + dj[k];
                if (ni == 0 || ni == n || nj == 0 || nj == n) {
                    p.b(row) += laplace_boundary(ni * h, nj * h);
                } else {
                    p.a(row, node(ni, nj)) = -1.0;
                }
            }
        }
    }
    p.exact = p.a.llt().solve(p.b);
    return p;
}

RandomWalkProblem make_random_walk(int n) {
    if (n < 3) throw InvalidArgument("random walk needs at least 3 states, got " + std::to_string(n));
    RandomWalkProblem p;
    p.states = n;
    p.t = Matrix::Zero(n, n);
    p.t(0, 1) = 1.0;
    p.t(n - 1, n - 2) = 1.0;
    for (int i = 1; i < n - 1; ++i) {
        p.t(i, i - 1) = 0.5;
        p.t(i, i + 1) = 0.5;
    }
    p.a = Matrix::Identity(n, n) - p.t.transpose();
    return p;
}

}  // namespace altsplit
