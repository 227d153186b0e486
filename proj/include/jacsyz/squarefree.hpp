#pragma once

#include "jacsyz/hompoly.hpp"
#include "jacsyz/upoly.hpp"

#include <array>
#include <cstdint>

namespace jacsyz {

/// t -> f(a + t b).
UPoly restrict_to_line(const HomPoly& f, const std::array<Rat, 3>& a, const std::array<Rat, 3>& b);

/// Affine slice x -> f(x, t, 1).
UPoly slice_in_x(const HomPoly& f, const Rat& t);

struct SquarefreeOptions {
    std::uint64_t seed = 1;
    int lines = 5;
    bool strict = false;
};

/// Monte Carlo test on random rational lines: a squarefree restriction of
/// full degree proves squarefreeness; `lines` failures report false. With
/// strict set, a negative answer is confirmed by the discriminant test.
bool squarefree_check(const HomPoly& f, const SquarefreeOptions& opts = {});

/// Deterministic: after a shear making the x^d coefficient a nonzero
/// constant, f is squarefree iff some slice x -> f(x, t, 1) with
/// t in [0, d(d-1)] is squarefree of degree d.
bool squarefree_strict(const HomPoly& f);

}  // namespace jacsyz
