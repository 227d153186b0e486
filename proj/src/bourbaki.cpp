#include "jacsyz/bourbaki.hpp"

#include "jacsyz/modp/field.hpp"
#include "jacsyz/modp/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace jacsyz {

template <class F>
BasicHomPoly<F> delta(const Syzygy<F>& r1, const Syzygy<F>& r) {
    using P = BasicHomPoly<F>;
    const std::array<P, 3> xyz{P::variable(Var::x), P::variable(Var::y), P::variable(Var::z)};
    const auto& a = r1.comps;
    const auto& b = r.comps;
    P out = xyz[0] * (a[1] * b[2] - a[2] * b[1]);
    out -= xyz[1] * (a[0] * b[2] - a[2] * b[0]);
    out += xyz[2] * (a[0] * b[1] - a[1] * b[0]);
    return out;
}

template <class F>
BasicHomPoly<F> bourbaki_image(const BasicHomPoly<F>& f, const Syzygy<F>& rho1, const Syzygy<F>& rho) {
    const auto det = delta(rho1, rho);
    auto q = det.exact_divide(f);
    if (!q) throw std::logic_error("determinant of a syzygy pair is not divisible by f");
    return *q;
}

template <class F>
BourbakiData<F> bourbaki_generators(const BasicHomPoly<F>& f, const ExponentProfile<F>& profile) {
    if (profile.generators.size() < 2) throw std::invalid_argument("bourbaki_generators: need at least two generators");
    BourbakiData<F> out;
    out.rho1 = profile.generators.front();
    for (std::size_t j = 1; j < profile.generators.size(); ++j) {
        auto g = bourbaki_image(f, out.rho1, profile.generators[j]);
        if (g.degree() == 0 && !g.is_zero()) out.unit_ideal = true;
        out.generators.push_back(std::move(g));
    }
    return out;
}

std::string to_string(BaseLocus b) {
    switch (b) {
        case BaseLocus::empty: return "empty";
        case BaseLocus::zero_dimensional: return "zero_dimensional";
        case BaseLocus::positive_dimensional: return "positive_dimensional";
        case BaseLocus::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

namespace {

// rank of all degree-n monomial multiples of the generators of degree <= piece,
// maximized over two primes (each modular rank is a lower bound)
template <class F>
std::size_t multiples_rank(const std::vector<BasicHomPoly<F>>& gens, int piece, int n) {
    int conductor = 1;
    for (const auto& g : gens)
        for (const auto& [m, c] : g.terms()) conductor = std::lcm(conductor, modp::conductor_of(c));
    std::size_t rows = 0;
    for (const auto& g : gens)
        if (!g.is_zero() && g.degree() <= piece) rows += dim_s(n - g.degree());
    std::size_t best = 0;
    for (std::size_t idx = 0, tried = 0; tried < 2 && idx < 16; ++idx) {
        modp::PrimeContext ctx(conductor, idx);
        modp::ModMatrix m(rows, dim_s(n), ctx.prime());
        std::size_t row = 0;
        bool bad = false;
        for (const auto& g : gens) {
            if (g.is_zero() || g.degree() > piece) continue;
            std::vector<std::pair<Mono, std::uint32_t>> red;
            for (const auto& [mm, c] : g.terms()) {
                auto r = ctx.reduce(c, 0);
                if (!r) bad = true;
                else red.emplace_back(mm, *r);
            }
            for (const auto& mono : monomial_basis(n - g.degree())) {
                for (const auto& [mm, r] : red) m.set(row, mono_index(mm * mono), r);
                ++row;
            }
        }
        if (bad) continue;
        ++tried;
        best = std::max(best, m.echelonize().size());
    }
    return best;
}

}  // namespace

template <class F>
BaseLocusProbe base_locus_dimension(const std::vector<BasicHomPoly<F>>& gens, int piece, int extra) {
    if (piece < 0) throw std::invalid_argument("base_locus_dimension: negative piece degree");
    int maxdeg = 0;
    for (const auto& g : gens) maxdeg = std::max(maxdeg, g.degree());
    BaseLocusProbe out;
    out.n = 2 * maxdeg + piece + extra;
    for (int attempt = 0; attempt < 2; ++attempt) {
        if (attempt == 1) {
            out.n *= 2;
            out.widened = true;
        }
        out.h0 = static_cast<long>(dim_s(out.n)) - static_cast<long>(multiples_rank(gens, piece, out.n));
        out.h1 = static_cast<long>(dim_s(out.n + 1)) - static_cast<long>(multiples_rank(gens, piece, out.n + 1));
        if (out.h0 == out.h1) {
            out.result = out.h0 == 0 ? BaseLocus::empty : BaseLocus::zero_dimensional;
            return out;
        }
        if (out.h1 > out.h0) {
            out.result = BaseLocus::positive_dimensional;
            return out;
        }
    }
    out.result = BaseLocus::inconclusive;
    return out;
}

template <class F>
Verdict thm1_check(const BasicHomPoly<F>& f, const ExponentProfile<F>& profile, long tau) {
    const auto& e = profile.exponents;
    const int m = static_cast<int>(e.size());
    if (m < 3) return not_applicable("thm1", "fewer than three generators");
    const int d = profile.d;
    const long d1 = e[0], d2 = e[1], d3 = e[2], dm = e.back();
    const long t = d1 + d2 - d + 1;
    const auto data = bourbaki_generators(f, profile);
    nlohmann::json det = {{"exponents", e}, {"type", t}, {"tau", tau}};
    nlohmann::json scan = nlohmann::json::array();
    std::optional<long> dprime;
    const long hi = std::min<long>(dm, d - 1);
    for (long c = d3; c <= hi; ++c) {
        const long piece = d1 + c - d + 1;
        if (piece < 0) {
            scan.push_back({{"dprime", c}, {"piece", piece}, {"base_locus", "positive_dimensional"}});
            continue;
        }
        const auto probe = base_locus_dimension(data.generators, static_cast<int>(piece), d);
        scan.push_back({{"dprime", c},
                        {"piece", piece},
                        {"base_locus", to_string(probe.result)},
                        {"probe_degree", probe.n},
                        {"hilbert", {probe.h0, probe.h1}}});
        if (probe.result == BaseLocus::zero_dimensional || probe.result == BaseLocus::empty) {
            dprime = c;
            break;
        }
    }
    det["scan"] = scan;
    if (!dprime) {
        det["scan_failed"] = true;
        return make_verdict("thm1", false, det, "no d' in range has a finite base locus");
    }
    const long dm1 = d - 1;
    const long rhs = dm1 * dm1 - d1 * d2 + (dm1 - *dprime) * t;
    det["dprime"] = *dprime;
    det["rhs"] = rhs;
    const bool eq = tau == rhs;
    det["equality"] = eq;
    const bool ok = tau >= rhs && eq == (m == 3) && (m != 3 || *dprime == d3);
    return make_verdict("thm1", ok, det);
}

#define JACSYZ_INSTANTIATE(F)                                                                               \
    template BasicHomPoly<F> delta<F>(const Syzygy<F>&, const Syzygy<F>&);                                   \
    template BasicHomPoly<F> bourbaki_image<F>(const BasicHomPoly<F>&, const Syzygy<F>&, const Syzygy<F>&); \
    template BourbakiData<F> bourbaki_generators<F>(const BasicHomPoly<F>&, const ExponentProfile<F>&);       \
    template BaseLocusProbe base_locus_dimension<F>(const std::vector<BasicHomPoly<F>>&, int, int);          \
    template Verdict thm1_check<F>(const BasicHomPoly<F>&, const ExponentProfile<F>&, long);

JACSYZ_INSTANTIATE(Rat)
JACSYZ_INSTANTIATE(Cyclo)

#undef JACSYZ_INSTANTIATE

}  // namespace jacsyz
