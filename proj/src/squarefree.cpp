#include "jacsyz/squarefree.hpp"

#include <random>
#include <stdexcept>

namespace jacsyz {

UPoly restrict_to_line(const HomPoly& f, const std::array<Rat, 3>& a, const std::array<Rat, 3>& b) {
    std::array<UPoly, 3> lin;
    for (int v = 0; v < 3; ++v) lin[v] = UPoly({a[v], b[v]});
    std::array<std::vector<UPoly>, 3> pw;
    for (int v = 0; v < 3; ++v) {
        pw[v].push_back(UPoly::constant(1));
        for (int k = 1; k <= f.degree(); ++k) pw[v].push_back(pw[v].back() * lin[v]);
    }
    UPoly acc;
    for (const auto& [m, c] : f.terms()) acc = acc + UPoly::constant(c) * pw[0][m.e[0]] * pw[1][m.e[1]] * pw[2][m.e[2]];
    return acc;
}

UPoly slice_in_x(const HomPoly& f, const Rat& t) {
    std::vector<Rat> c(static_cast<std::size_t>(f.degree()) + 1, Rat(0));
    for (const auto& [m, v] : f.terms()) {
        Rat tp = 1;
        for (int i = 0; i < m.e[1]; ++i) tp *= t;
        c[m.e[0]] += v * tp;
    }
    return UPoly(std::move(c));
}

bool squarefree_strict(const HomPoly& f) {
    const int d = f.degree();
    if (f.is_zero() || d < 1) throw std::invalid_argument("squarefree_strict: need a nonzero form of positive degree");
    if (d == 1) return true;
    // shear y -> y + s x, z -> z + u x until f(1, s, u) != 0
    for (int s = 0; s <= d; ++s)
        for (int u = 0; u <= d; ++u) {
            if (is_zero(f.eval(Rat(1), Rat(s), Rat(u)))) continue;
            const HomPoly g = f.substitute({{{Rat(1), Rat(0), Rat(0)}, {Rat(s), Rat(1), Rat(0)}, {Rat(u), Rat(0), Rat(1)}}});
            // the discriminant in x is a binary form of degree d(d-1) in (y, z)
            for (int t = 0; t <= d * (d - 1); ++t) {
                const UPoly slice = slice_in_x(g, Rat(t));
                if (slice.degree() == d && is_squarefree(slice)) return true;
            }
            return false;
        }
    throw std::logic_error("squarefree_strict: form vanishes on a grid larger than its degree");
}

bool squarefree_check(const HomPoly& f, const SquarefreeOptions& opts) {
    const int d = f.degree();
    if (f.is_zero() || d < 1) throw std::invalid_argument("squarefree_check: need a nonzero form of positive degree");
    if (d == 1) return true;
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<long> coef(-1000, 1000);
    int failures = 0;
    int draws = 0;
    while (failures < opts.lines) {
        if (++draws > 100 * opts.lines) break;
        std::array<Rat, 3> a, b;
        for (int v = 0; v < 3; ++v) {
            a[v] = coef(rng);
            b[v] = coef(rng);
        }
        const UPoly r = restrict_to_line(f, a, b);
        if (r.degree() != d) continue;  // line direction on the curve: discard
        if (is_squarefree(r)) return true;
        ++failures;
    }
    if (opts.strict) return squarefree_strict(f);
    return false;
}

}  // namespace jacsyz
