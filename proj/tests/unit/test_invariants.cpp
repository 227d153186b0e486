#include "doctest.h"

#include "oracles.hpp"

#include "jacsyz/cli/parse.hpp"
#include "jacsyz/invariants.hpp"
#include "jacsyz/squarefree.hpp"
#include "jacsyz/upoly.hpp"

using namespace jacsyz;

namespace {

HomPoly poly(const std::string& s) { return cli::parse_poly(s).product(); }

UPoly up(std::initializer_list<long> c) {
    std::vector<Rat> v;
    for (long x : c) v.emplace_back(x);
    return UPoly(v);
}

}  // namespace

TEST_CASE("univariate gcd, resultant and interpolation") {
    const UPoly a = up({-1, 0, 1});  // t^2 - 1
    const UPoly b = up({1, 1});      // t + 1
    CHECK(gcd(a, b) == b);
    CHECK(gcd(a, up({2, 1})).degree() == 0);
    CHECK(is_zero(resultant(a, b)));
    // Res(a, c) = prod over roots r of a of c(r), a monic: c = t - 2 gives (1-2)(-1-2) = 3
    CHECK(resultant(a, up({-2, 1})) == Rat(3));
    CHECK(squarefree_part(a * a * b) == a);
    CHECK_FALSE(is_squarefree(a * b));
    CHECK(multiplicity_sum(a * a * b, b) == 3);
    const std::vector<Rat> xs{Rat(0), Rat(1), Rat(2), Rat(3)};
    const UPoly p = up({5, -2, 0, 1});
    std::vector<Rat> ys;
    for (const auto& x : xs) ys.push_back(p.eval(x));
    CHECK(interpolate(xs, ys) == p);
    const auto [q, r] = divmod(p, b);
    CHECK(q * b + r == p);
}

TEST_CASE("squarefree tests") {
    for (const char* s : {"x*y*z", "x^3+y^3+z^3", "y^2*z-x^3", "(x^5-y^5)*(x+2*y+z)"}) {
        CAPTURE(s);
        CHECK(squarefree_check(poly(s)));
        CHECK(squarefree_strict(poly(s)));
    }
    for (const char* s : {"x^2*y", "(x+y+z)^2*(x-y)", "(x^2+y^2+z^2)^2"}) {
        CAPTURE(s);
        CHECK_FALSE(squarefree_check(poly(s)));
        CHECK_FALSE(squarefree_strict(poly(s)));
    }
}

TEST_CASE("tjurina number against local algebra oracles") {
    // curves with a single singular point at [0:0:1]
    struct Case {
        const char* f;
        long tau;
    };
    for (const auto& c : {Case{"y^2*z-x^3", 2}, Case{"y^2*z-x^3-x^2*z", 1}, Case{"y^3*z-x^4", 6},
                          Case{"x^4*z+y^5+x^2*y^3", 11}}) {
        CAPTURE(c.f);
        const HomPoly f = poly(c.f);
        const auto local_tau = oracle::local_number(f, true);
        CHECK(static_cast<long>(local_tau) == c.tau);
        CHECK(tjurina_total(f) == c.tau);
    }
    CHECK(tjurina_total(poly("x^3+y^3+z^3")) == 0);
    CHECK(tjurina_total(poly("x*y*z")) == 3);
}

TEST_CASE("polar milnor number against local algebra oracles") {
    for (const char* s : {"y^2*z-x^3", "y^3*z-x^4", "x^4*z+y^5+x^2*y^3", "y^2*z-x^3-x^2*z"}) {
        CAPTURE(s);
        const HomPoly f = poly(s);
        const auto mu_local = static_cast<long>(oracle::local_number(f, false));
        const auto r = mu_polar(f, 1);
        CHECK(r.value == mu_local);
        CHECK(r.charts == 2);
        CHECK_FALSE(r.assumed);
    }
    // the cusp y^3 = x^4 is E6
    CHECK(oracle::local_number(poly("y^3*z-x^4"), false) == 6);
    CHECK(mu_polar(poly("x^4*z+y^5+x^2*y^3"), 3).value == 12);
    CHECK(mu_polar(poly("x*y*z*(x+y+z)"), 2).value == 6);
}

TEST_CASE("milnor modes") {
    const HomPoly f = poly("y^2*z-x^3");
    MuContext ctx;
    ctx.tau = 2;
    auto a = mu_total(f, MuMode::assume_quasihomogeneous, ctx);
    CHECK(a.value == 2);
    CHECK(a.assumed);
    CHECK_THROWS_AS(mu_total(f, MuMode::arrangement, ctx), std::invalid_argument);
    CHECK(parse_mu_mode("rational_points") == MuMode::polar);
    CHECK_THROWS_AS(parse_mu_mode("eigen"), std::invalid_argument);
}

TEST_CASE("component counting") {
    const auto parts = [](const std::string& s) { return cli::parse_poly(s).factors; };
    CHECK(count_components(parts("x*y*z")).e == 3);
    CHECK(count_components(parts("(x^2+y^2+z^2)*(x^2-y^2)")).e == 3);
    CHECK(count_components(parts("x^2-y*z")).factors[0].kind == "conic");
    CHECK(count_components(parts("x^2-y^2+0*z")).factors[0].kind == "binary_form");
    CHECK(count_components(parts("x^2-y^2+x*z-y*z")).factors[0].kind == "line_pair");
    const auto cubic = count_components(parts("x^3+y^3+z^3"));
    CHECK_FALSE(cubic.all_verified());
    CHECK_THROWS_AS(count_components(parts("x^2+2*x*y+y^2+2*x*z+2*y*z+z^2")), std::invalid_argument);
}

TEST_CASE("verdict arithmetic on hand-made numbers") {
    // generic 4 lines: d = e = 4, exponents (2, 2, 2), tau = mu = 6
    CurveNumbers c{4, 4, {2, 2, 2}, 6, 6, false, true};
    CHECK(betti_polynomial(4, 4, 6) == Betti{1, 3, 3});
    CHECK(alpha_of(c) == 1);
    CHECK(thm3_coefficients(c).status == Status::pass);
    CHECK(thm2_verdict(4, {2, 2, 2}, 6).status == Status::pass);
    CHECK(thm2_verdict(4, {2, 2, 2}, 5).status == Status::fail);
    CHECK(cor2_bounds(4, {2, 2, 2}, 6).status == Status::pass);
    CHECK(cor2_bounds(4, {2, 2, 2}, 8).status == Status::fail);
    CHECK(free_identities(3, {1, 1}, 3).status == Status::pass);
    CHECK(free_identities(3, {1, 1}, 2).status == Status::fail);
    CHECK(generation_dichotomy(5, {1, 3}).status == Status::pass);
    CHECK(generation_dichotomy(5, {1, 2}).status == Status::fail);
    CHECK(second_exponent_bound(4, {2, 4, 4}).status == Status::fail);
    // free near pencil of 5 lines
    CurveNumbers np{5, 5, {1, 3}, 13, 13, false, true};
    CHECK(cor3_euler(np).status == Status::pass);
    CHECK(cor31_sign(np).status == Status::pass);
    np.tau = 12;
    CHECK(cor3_euler(np).status == Status::fail);
}
