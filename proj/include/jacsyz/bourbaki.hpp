#pragma once

#include "jacsyz/hompoly.hpp"
#include "jacsyz/syzygy.hpp"
#include "jacsyz/verdict.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jacsyz {

/// det of the rows (x, y, z), rho1, rho.
template <class F>
BasicHomPoly<F> delta(const Syzygy<F>& rho1, const Syzygy<F>& rho);

/// delta(rho1, rho) / f; throws std::logic_error if f does not divide.
template <class F>
BasicHomPoly<F> bourbaki_image(const BasicHomPoly<F>& f, const Syzygy<F>& rho1, const Syzygy<F>& rho);

template <class F>
struct BourbakiData {
    Syzygy<F> rho1;
    std::vector<BasicHomPoly<F>> generators;  // images of rho_2, ..., rho_m
    bool unit_ideal = false;                  // some generator is a nonzero constant
};

/// rho1 is the first canonical generator of minimal degree.
template <class F>
BourbakiData<F> bourbaki_generators(const BasicHomPoly<F>& f, const ExponentProfile<F>& profile);

enum class BaseLocus { empty, zero_dimensional, positive_dimensional, inconclusive };

std::string to_string(BaseLocus b);

struct BaseLocusProbe {
    BaseLocus result = BaseLocus::inconclusive;
    int n = 0;                   // first probe degree
    long h0 = 0, h1 = 0;         // Hilbert values of S / (piece) at n and n + 1
    bool widened = false;
};

/// Base locus of the degree-`piece_degree` part of the ideal spanned by gens,
/// probed through the Hilbert function of the ideal that part generates at
/// N and N + 1, N = 2 * (max generator degree) + piece_degree + extra.
template <class F>
BaseLocusProbe base_locus_dimension(const std::vector<BasicHomPoly<F>>& gens, int piece_degree, int extra = 0);

/// d' scan and the tau inequality with its equality case.
template <class F>
Verdict thm1_check(const BasicHomPoly<F>& f, const ExponentProfile<F>& profile, long tau);

}  // namespace jacsyz
