#include <doctest.h>

#include "altsplit/analysis.hpp"
#include "altsplit/random_instances.hpp"
#include "fixtures.hpp"

using namespace altsplit;

TEST_SUITE("random_instances") {

TEST_CASE("same seed gives the same draw") {
    Rng a(123), b(123);
    CHECK(max_abs_diff(random_index_one(a, 5, 3), random_index_one(b, 5, 3)) == 0.0);
    const auto ia = random_group_monotone_triple(a, 5, 2, false);
    const auto ib = random_group_monotone_triple(b, 5, 2, false);
    CHECK(max_abs_diff(ia.a, ib.a) == 0.0);
}

TEST_CASE("index-one matrices have the requested rank") {
    Rng rng(1);
    for (Index r = 0; r <= 6; ++r) {
        const Matrix a = random_index_one(rng, 6, r);
        CHECK(rank(a) == r);
        CHECK(index_at_most_one(a));
    }
    CHECK_THROWS_AS(random_index_one(rng, 3, 4), InvalidArgument);
}

TEST_CASE("group monotone triples") {
    Rng rng(2);
    for (int t = 0; t < 20; ++t) {
        const bool both = t % 2 == 0;
        const Index n = 3 + t % 5;
        const auto inst = random_group_monotone_triple(rng, n, 1 + t % n, both);
        CHECK(is_nonnegative(fixtures::sharp_oracle(inst.a), {.nonneg_tol = 1e-9}));
        for (const auto& s : inst.splits) {
            const auto r = classify(s);
            CHECK(r.is_proper);
            CHECK(r.is_g_weak_regular_type2);
            if (both) CHECK(r.is_g_weak_regular_type1);
        }
    }
}

TEST_CASE("M-matrix triples are regular") {
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        const auto inst = t % 2 ? random_singular_m_matrix_triple(rng, 3 + t % 5, t % 4 == 1)
                                : random_m_matrix_triple(rng, 3 + t % 5, t % 4 == 0);
        CHECK(is_m_matrix_with_property_c(inst.a));
        CHECK(rank(inst.a) == inst.a.rows() - (t % 2));
        for (const auto& s : inst.splits) CHECK(classify(s).is_regular);
    }
}

TEST_CASE("quasi-regular triples") {
    Rng rng(4);
    for (int t = 0; t < 10; ++t) {
        const auto inst = random_quasi_regular_triple(rng, 3 + t % 4);
        CHECK(rank(inst.a) < inst.a.rows());
        for (const auto& s : inst.splits) CHECK(classify(s).is_quasi_regular);
    }
    CHECK_THROWS_AS(random_quasi_regular_triple(rng, 2), InvalidArgument);
}

TEST_CASE("iteration matrices have the requested spectral character") {
    Rng rng(5);
    for (int t = 0; t < 60; ++t) {
        const auto kind = kAllIterationKinds[t % 6];
        const Matrix m = random_iteration_matrix(rng, 2 + t % 5, kind);
        const double rho = spectral_radius(m);
        CAPTURE(to_string(kind));
        switch (kind) {
            case IterationKind::convergent: CHECK(rho < 1.0); break;
            case IterationKind::divergent: CHECK(rho > 1.0); break;
            case IterationKind::unit_circle: CHECK(gamma(m) == doctest::Approx(1.0)); break;
            default: CHECK(rho == doctest::Approx(1.0)); break;
        }
    }
}

}
