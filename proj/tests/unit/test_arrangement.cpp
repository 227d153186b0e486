#include "doctest.h"

#include "jacsyz/arrangement.hpp"
#include "jacsyz/cli/parse.hpp"

#include <random>

using namespace jacsyz;

namespace {

Arrangement arr(const std::string& s) { return cli::load_arrangement(s); }

std::map<int, int> histogram(const std::vector<PointRecord>& lattice) {
    std::map<int, int> h;
    for (const auto& p : lattice) ++h[p.multiplicity()];
    return h;
}

}  // namespace

TEST_CASE("line normalization") {
    CHECK(Line::rational(2, 4, 6) == Line::rational(1, 2, 3));
    CHECK(Line::rational(0, -3, 3) == Line::rational(0, 1, -1));
    CHECK_FALSE(Line::rational(1, 2, 3) == Line::rational(1, 2, 4));
    CHECK_THROWS_AS(Line::rational(0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(Arrangement({Line::rational(1, 0, 0), Line::rational(2, 0, 0)}), std::invalid_argument);
}

TEST_CASE("intersection lattices of small arrangements") {
    const auto xyz = arr("x*y*z");
    const auto l = intersection_lattice(xyz);
    CHECK(histogram(l) == std::map<int, int>{{2, 3}});
    CHECK(combinatorial_tau_mu(l) == 3);
    CHECK(modular_points(l).size() == 3);

    const auto pencil = arr("x*y*(x-y)*(x+y)");
    const auto lp = intersection_lattice(pencil);
    CHECK(histogram(lp) == std::map<int, int>{{4, 1}});
    const auto mpp = multiplicity_profile(pencil, lp);
    CHECK(mpp.m_a == 4);
    CHECK(mpp.n_a == 1);

    const auto near = arr("x*y*(x-y)*(x+y)*(x+2*y+3*z)");
    const auto ln = intersection_lattice(near);
    CHECK(histogram(ln) == std::map<int, int>{{2, 4}, {4, 1}});
    const auto mpn = multiplicity_profile(near, ln);
    CHECK(mpn.n_a == 2);
    CHECK(mpn.r_l == std::vector<int>{2, 2, 2, 2, 4});
    CHECK(intersection_count(near.without(4), near.line(4)) == 4);
}

TEST_CASE("monomial arrangement lattices") {
    for (int m : {3, 4, 5}) {
        CAPTURE(m);
        const auto a = arr("(x^" + std::to_string(m) + "-y^" + std::to_string(m) + ")*(y^" + std::to_string(m) + "-z^" +
                           std::to_string(m) + ")*(x^" + std::to_string(m) + "-z^" + std::to_string(m) + ")");
        CHECK(a.size() == 3 * m);
        const auto l = intersection_lattice(a);
        // m^2 triple points and the three coordinate points of multiplicity m
        auto h = histogram(l);
        if (m == 3) CHECK(h == std::map<int, int>{{3, 12}});
        else CHECK(h == std::map<int, int>{{3, m * m}, {m, 3}});
        const auto mp = multiplicity_profile(a, l);
        for (int r : mp.r_l) CHECK(r == m + 1);
        CHECK(a.rational_polynomial().has_value());
        CHECK(a.conductor() == m);
    }
}

TEST_CASE("modular points") {
    // near pencil: every point is modular, each double point reaches the
    // others along the transversal and the centre along a pencil line
    const auto near = arr("x*y*(x-y)*(x+y)*(x+2*y+3*z)");
    CHECK(modular_points(intersection_lattice(near)).size() == 5);
    // two generic transversals meet off the pencil: the centre loses modularity
    CHECK(modular_points(intersection_lattice(arr("x*y*(x-y)*(x+y)*(x+2*y+3*z)*(2*x-y+5*z)"))).empty());
    // transversals meeting on x = 0: the centre and that triple point are modular
    const auto ss = arr("x*y*(x-y)*(x+y)*(x+2*y+3*z)*(2*x+2*y+3*z)");
    const auto l = intersection_lattice(ss);
    const auto mod = modular_points(l);
    REQUIRE(mod.size() == 2);
    std::vector<int> mults;
    for (auto i : mod) mults.push_back(l[i].multiplicity());
    std::sort(mults.begin(), mults.end());
    CHECK(mults == std::vector<int>{3, 4});
    // generic arrangement of four lines: no modular point
    CHECK(modular_points(intersection_lattice(arr("x*y*z*(x+y+z)"))).empty());
}

TEST_CASE("random generators") {
    std::mt19937_64 rng(9);
    for (int d = 3; d <= 9; ++d) {
        const auto a = random_arrangement(d, rng);
        CHECK(a.size() == d);
        CHECK(a.is_rational());
        const auto s = random_supersolvable(d, rng);
        CHECK(s.size() == d);
        const auto l = intersection_lattice(s);
        CHECK_FALSE(modular_points(l).empty());
        const Line extra = random_line_for(s, l, rng);
        CHECK_FALSE(s.contains(extra));
    }
}

TEST_CASE("supersolvable arrangements are free") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const auto s = random_supersolvable(3 + trial % 6, rng);
        const auto sy = arrangement_syzygies(s, true);
        CHECK(sy.exponents.size() == 2);
        CHECK(*sy.tau == combinatorial_tau_mu(intersection_lattice(s)));
    }
}

TEST_CASE("deletion and addition on a near pencil") {
    const auto near = arr("x*y*(x-y)*(x+y)*(x+2*y+3*z)");
    const auto sy = arrangement_syzygies(near, false);
    REQUIRE(sy.exponents == std::vector<int>{1, 3});
    // removing the transversal leaves a pencil (0, 3): case 2 with r = d2 + 1
    const auto del = deletion_classify(near, sy.exponents, 4);
    CHECK(del.r == 4);
    CHECK(del.matched_case == 2);
    CHECK(del.deleted_exponents == std::vector<int>{0, 3});
    CHECK(del.verdict.status == Status::pass);
    // removing a pencil line: case 1, r = d1 + 1 = 2
    const auto del0 = deletion_classify(near, sy.exponents, 0);
    CHECK(del0.r == 2);
    CHECK(del0.matched_case == 1);
    CHECK(del0.verdict.status == Status::pass);
    // a generic line meets the five lines in five points: r = 5 >= d2 + 2, case 3
    const auto add = addition_classify(near, sy.exponents, Line::rational(3, -1, 7));
    CHECK(add.r == 5);
    CHECK(add.matched_case == 3);
    CHECK(add.added_class == CurveClass::nearly_free);
    CHECK(add.verdict.status == Status::pass);
    CHECK_THROWS_AS(addition_classify(near, sy.exponents, near.line(0)), std::invalid_argument);
}

TEST_CASE("arrangement verdicts") {
    const auto a = arr("(x^5-y^5)*(x+2*y+z)*(x+3*y-5*z)");
    const auto l = intersection_lattice(a);
    const auto mp = multiplicity_profile(a, l);
    CHECK(mp.m_a == 5);
    CHECK(mp.n_a == 2);
    const auto v = thm5_bounds(7, {2, 5, 5}, mp);
    CHECK(v.status == Status::pass);
    CHECK(v.details["chain"] == nlohmann::json{4, 5, 5, 5});
    CHECK(thm5_bounds(7, {2, 4, 5}, mp).status == Status::fail);
    CHECK(cor20_check(7, {2, 5, 5}, 27).status == Status::pass);
    CHECK(cor20_check(7, {2, 5, 5}, 26).status == Status::fail);
    CHECK(dm_bound(7, {2, 5, 6}).status == Status::fail);
    CHECK(lattice_check(a, l).status == Status::pass);
}
