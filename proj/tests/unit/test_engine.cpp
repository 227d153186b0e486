#include "doctest.h"

#include "oracles.hpp"

#include "jacsyz/cli/parse.hpp"
#include "jacsyz/modp/kernels.hpp"
#include "jacsyz/syzygy.hpp"

#include <random>

using namespace jacsyz;

namespace {

HomPoly poly(const std::string& s) { return cli::parse_poly(s).product(); }

const std::vector<std::string> kSmallCurves = {
    "x*y*z",
    "x^3+y^3+z^3",
    "y^2*z-x^3-x^2*z",
    "y^3*z-x^4",
    "x*y*z*(x+y+z)",
    "x^2*y*(x+y)+z^4",
    "(x^3+y^3+z^3)*(x+y)",
    "x^4*z+y^5+x^2*y^3",
    "x*y*(x-y)*(x+y)*(x+2*y+3*z)",
    "(x^5-y^5)*(x+2*y+z)*(x+3*y-5*z)",
};

}  // namespace

TEST_CASE("engine matches brute-force dimension tables") {
    for (const auto& s : kSmallCurves) {
        CAPTURE(s);
        const HomPoly f = poly(s);
        // the exact oracle is cubic in dim S_k; past degree d it only repeats
        // what the Hilbert test below already covers
        const int kmax = std::min(default_kmax(f.degree(), false), f.degree() + 1);
        const auto brute = oracle::brute_force_exponents(f, kmax);
        SyzygyEngine<Rat> engine(f);
        const auto prof = engine.profile(kmax);
        for (int k = 0; k <= kmax; ++k) {
            CHECK(engine.dim_d0(k) == brute.dim_d0[k]);
            CHECK(engine.stats(k).new_generators == brute.new_generators[k]);
        }
        CHECK(prof.exponents == brute.exponents);
        for (const auto& g : prof.generators) CHECK(g.annihilates(f));
    }
}

TEST_CASE("engine Hilbert function matches exact ranks") {
    for (const auto& s : {"x^3+y^3+z^3", "y^3*z-x^4", "x*y*z*(x+y+z)", "x^4*z+y^5+x^2*y^3"}) {
        CAPTURE(s);
        const HomPoly f = poly(s);
        SyzygyEngine<Rat> engine(f);
        for (int j = 0; j <= 3 * f.degree() - 3; ++j) CHECK(engine.hilbert_milnor(j) == oracle::hilbert_milnor_exact(f, j));
    }
}

TEST_CASE("engine is independent of the kernel variant") {
    const HomPoly f = poly("x*y*z*(x-y)*(x+2*y-z)*(3*x-y+2*z)*(x+y+5*z)*(2*x-3*y+z)");
    const std::string initial = modp::active_kernels().name;
    std::vector<ExponentProfile<Rat>> runs;
    for (const char* name : {"scalar", "avx2"}) {
        if (!modp::select_kernels(name)) continue;
        SyzygyEngine<Rat> engine(f);
        runs.push_back(engine.profile(f.degree()));
    }
    modp::select_kernels(initial);
    REQUIRE(!runs.empty());
    for (const auto& r : runs) {
        CHECK(r.exponents == runs.front().exponents);
        REQUIRE(r.generators.size() == runs.front().generators.size());
        for (std::size_t i = 0; i < r.generators.size(); ++i) CHECK(r.generators[i].coords() == runs.front().generators[i].coords());
    }
}

TEST_CASE("engine over a cyclotomic field") {
    // three lines x - zeta^k y plus two rational lines
    const Cyclo z = Cyclo::zeta(3);
    CycloPoly f = CycloPoly::constant(Cyclo(1));
    for (int k = 0; k < 3; ++k) f = f * CycloPoly::linear(Cyclo(1), -Cyclo::zeta(3, k), Cyclo(0));
    f = f * CycloPoly::linear(Cyclo(1), Cyclo(0), z) * CycloPoly::linear(Cyclo(0), Cyclo(1), Cyclo(2));
    SyzygyEngine<Cyclo> engine(f);
    const auto prof = engine.profile(f.degree());
    for (int k = 0; k <= f.degree(); ++k) CHECK(engine.dim_d0(k) == syzygy_space(f, k).dim());
    for (const auto& g : prof.generators) CHECK(g.annihilates(f));

    // a rational polynomial gives the same answer in either field
    const HomPoly r = poly("x*y*(x-y)*(x+y)*(x+2*y+3*z)*(2*x-y+5*z)");
    const auto over_q = exponent_profile(r, r.degree());
    const auto over_c = exponent_profile(to_cyclo(r), r.degree());
    CHECK(over_q.exponents == over_c.exponents);
}

TEST_CASE("engine classification and mdr") {
    CHECK(classify(3, {1, 1}) == CurveClass::free);
    CHECK(classify(7, {2, 5, 5}) == CurveClass::nearly_free);
    CHECK(classify(4, {2, 2, 3}) == CurveClass::plus_one_generated);
    CHECK(classify(4, {2, 3, 3}) == CurveClass::m_syzygy);
    CHECK(mdr(poly("x*y*z")) == 1);
    CHECK(mdr(poly("x^3+y^3+z^3")) == 2);
    CHECK(default_kmax(7, true) == 7);
    CHECK(default_kmax(5, false) == 9);
}

TEST_CASE("engine on random arrangements matches the brute-force oracle") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<long> c(-3, 3);
    for (int trial = 0; trial < 4; ++trial) {
        HomPoly f = HomPoly::constant(Rat(1));
        for (int i = 0; i < 5; ++i) {
            long a = c(rng), b = c(rng), e = c(rng);
            if (a == 0 && b == 0 && e == 0) a = 1;
            f = f * HomPoly::linear(Rat(a), Rat(b), Rat(e));
        }
        SyzygyEngine<Rat> engine(f);
        const auto prof = engine.profile(5);
        const auto brute = oracle::brute_force_exponents(f, 5);
        CHECK(prof.exponents == brute.exponents);
    }
}
