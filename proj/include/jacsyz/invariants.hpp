#pragma once

#include "jacsyz/hompoly.hpp"
#include "jacsyz/syzygy.hpp"
#include "jacsyz/verdict.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jacsyz {

/// dim M(f)_k.
template <class F>
long hilbert_milnor(const BasicHomPoly<F>& f, int k);

struct StabilizationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TjurinaResult {
    long tau = 0;
    int window_lo = 0, window_hi = 0;
    std::vector<long> values;  // hilbert_milnor over the window
    bool widened = false;
};

/// Stabilized tail of the Milnor algebra's Hilbert function, read on the
/// window [3d-6, 3d-3] (shifted once by d when the last two values differ).
template <class F>
TjurinaResult tjurina_total(SyzygyEngine<F>& engine);
template <class F>
long tjurina_total(const BasicHomPoly<F>& f);

enum class MuMode { arrangement, polar, assume_quasihomogeneous };

std::string to_string(MuMode m);
/// Accepts "arrangement", "polar", "rational_points" (same as polar),
/// "assume_quasihomogeneous"; throws std::invalid_argument otherwise.
MuMode parse_mu_mode(const std::string& s);

struct MuResult {
    long value = 0;
    MuMode mode = MuMode::polar;
    bool assumed = false;  // value is tau, not an independent computation
    int charts = 0;
    std::vector<std::string> warnings;
};

struct MuFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Total Milnor number from the polar curves f_x = f_y = 0 in random
/// coordinates: the intersection multiplicity at each singular point is its
/// Milnor number, and the singular points are the common roots of
/// Res_x(f_x, f_y) and Res_x(f, f_x). Two independent charts must agree.
MuResult mu_polar(const HomPoly& f, std::uint64_t seed);

struct MuContext {
    std::optional<long> tau;
    std::optional<long> combinatorial;  // sum (m_p - 1)^2 when f is a line arrangement
    std::uint64_t seed = 1;
};

/// Falls back from polar to the quasi-homogeneous assumption with a warning.
MuResult mu_total(const HomPoly& f, MuMode mode, const MuContext& ctx);

/// Irreducible components per factor: lines count 1, binary forms split into
/// their degree many lines, conics by the rank of their symmetric matrix;
/// anything else is taken as irreducible and marked unverified.
struct FactorComponents {
    int degree = 0;
    int components = 1;
    std::string kind;  // "line", "binary_form", "conic", "asserted_irreducible"
    bool verified = true;
};

struct ComponentCount {
    int e = 0;
    std::vector<FactorComponents> factors;
    bool all_verified() const {
        for (const auto& f : factors)
            if (!f.verified) return false;
        return true;
    }
};

/// Throws std::invalid_argument for a degenerate factor (rank-1 conic, power of a line).
ComponentCount count_components(const std::vector<HomPoly>& factors);

struct Betti {
    long b0 = 1, b1 = 0, b2 = 0;
    long at(long t) const { return b0 + b1 * t + b2 * t * t; }
    bool operator==(const Betti&) const = default;
};

Betti betti_polynomial(int d, int e, long mu);

/// Everything the numeric checks need about one curve.
struct CurveNumbers {
    int d = 0;
    int e = 0;
    std::vector<int> exponents;
    long tau = 0;
    long mu = 0;
    bool mu_assumed = false;
    bool line_arrangement = false;
};

long alpha_of(const CurveNumbers& c);

/// a = d1 + d2 - e + 1, b = mu - tau + d - e + alpha and the polynomial
/// identity against the Betti polynomial.
Verdict thm3_coefficients(const CurveNumbers& c);
Verdict thm2_verdict(int d, const std::vector<int>& exps, long tau);
Verdict cor2_bounds(int d, const std::vector<int>& exps, long tau);
Verdict cor3_euler(const CurveNumbers& c);
Verdict cor31_sign(const CurveNumbers& c);
/// d1 + d2 = d - 1 and tau = (d-1)^2 - d1 d2 for free curves.
Verdict free_identities(int d, const std::vector<int>& exps, long tau);
/// Either m = 2 and d1 + d2 = d - 1, or m >= 3 and d1 + d2 >= d, with
/// equality iff plus-one generated.
Verdict generation_dichotomy(int d, const std::vector<int>& exps);
/// d2 <= d - 1.
Verdict second_exponent_bound(int d, const std::vector<int>& exps);

}  // namespace jacsyz
