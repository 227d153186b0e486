#include "doctest.h"

#include "jacsyz/linalg.hpp"

#include <random>

using namespace jacsyz;

namespace {

RatMatrix random_matrix(std::size_t r, std::size_t c, std::size_t rank_bound, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(-5, 5);
    RatMatrix a(r, rank_bound), b(rank_bound, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < rank_bound; ++j) a(i, j) = make_rat(d(rng), 1 + std::abs(d(rng)));
    for (std::size_t i = 0; i < rank_bound; ++i)
        for (std::size_t j = 0; j < c; ++j) b(i, j) = Rat(d(rng));
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            for (std::size_t k = 0; k < rank_bound; ++k) m(i, j) += a(i, k) * b(k, j);
    return m;
}

}  // namespace

TEST_CASE("fraction-free and naive elimination agree") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 1 + trial % 7, c = 1 + (trial * 5) % 9, k = 1 + trial % 4;
        const RatMatrix m = random_matrix(r, c, k, rng);
        const auto ff = rref_fraction_free(m);
        const auto nv = rref_naive(m);
        CHECK(ff.rank == nv.rank);
        CHECK(ff.pivots == nv.pivots);
        CHECK(ff.form == nv.form);
        CHECK(ff.rank <= k);
    }
}

TEST_CASE("rank of known matrices") {
    CHECK(rank(RatMatrix::identity(4)) == 4);
    CHECK(rank(RatMatrix(3, 5)) == 0);
    const auto m = RatMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(rank(m) == 2);
    CHECK_THROWS_AS(RatMatrix::from_rows({{1, 2}, {3}}), std::invalid_argument);
}

TEST_CASE("kernel basis annihilates and has the right dimension") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 25; ++trial) {
        const RatMatrix m = random_matrix(2 + trial % 5, 3 + trial % 6, 1 + trial % 3, rng);
        const auto ker = kernel_basis(m);
        CHECK(ker.dim() + rank(m) == m.cols());
        for (const auto& v : ker.vectors())
            for (const auto& x : m.apply(v)) CHECK(is_zero(x));
    }
}

TEST_CASE("subspace operations") {
    const std::size_t n = 4;
    const auto u = Subspace<Rat>::span(n, {{1, 0, 0, 0}, {0, 1, 1, 0}});
    const auto w = Subspace<Rat>::span(n, {{2, 1, 1, 0}});
    CHECK(u.dim() == 2);
    CHECK(contains(u, {Rat(3), Rat(2), Rat(2), Rat(0)}));
    CHECK_FALSE(contains(u, {Rat(0), Rat(1), Rat(0), Rat(0)}));
    CHECK(quotient_dim(u, w) == 1);
    CHECK_THROWS_AS(quotient_dim(w, u), std::invalid_argument);
    CHECK(subspace_sum(u, w) == u);
    const auto v = Subspace<Rat>::span(n, {{0, 0, 0, 1}});
    CHECK(subspace_sum(u, v).dim() == 3);
    // canonical form: different spanning sets give equal subspaces
    CHECK(Subspace<Rat>::span(n, {{1, 1, 1, 0}, {1, -1, -1, 0}}) == u);
}

TEST_CASE("cyclotomic elimination") {
    const Cyclo z = Cyclo::zeta(3);
    // rows (1, z) and (z^2, 1) are dependent since z^3 = 1
    const auto m = Matrix<Cyclo>::from_rows({{Cyclo(1), z}, {z * z, Cyclo(1)}});
    CHECK(rank(m) == 1);
    const auto ker = kernel_basis(m);
    REQUIRE(ker.dim() == 1);
    for (const auto& x : m.apply(ker.vectors()[0])) CHECK(x.is_zero());
}
