#include "jacsyz/invariants.hpp"

#include "jacsyz/linalg.hpp"
#include "jacsyz/squarefree.hpp"
#include "jacsyz/upoly.hpp"

#include <random>

namespace jacsyz {

template <class F>
long hilbert_milnor(const BasicHomPoly<F>& f, int k) {
    SyzygyEngine<F> engine(f);
    return engine.hilbert_milnor(k);
}

template <class F>
TjurinaResult tjurina_total(SyzygyEngine<F>& engine) {
    const int d = engine.degree();
    TjurinaResult out;
    for (int attempt = 0; attempt < 2; ++attempt) {
        out.window_lo = 3 * d - 6 + attempt * d;
        out.window_hi = 3 * d - 3 + attempt * d;
        out.values.clear();
        for (int j = out.window_lo; j <= out.window_hi; ++j) out.values.push_back(engine.hilbert_milnor(j));
        const auto n = out.values.size();
        if (out.values[n - 1] == out.values[n - 2]) {
            out.tau = out.values.back();
            return out;
        }
        out.widened = true;
    }
    throw StabilizationFailed("Milnor algebra Hilbert function did not stabilize on [" +
                              std::to_string(out.window_lo) + ", " + std::to_string(out.window_hi) + "]");
}

template <class F>
long tjurina_total(const BasicHomPoly<F>& f) {
    SyzygyEngine<F> engine(f);
    return tjurina_total(engine).tau;
}

template long hilbert_milnor<Rat>(const HomPoly&, int);
template long hilbert_milnor<Cyclo>(const CycloPoly&, int);
template TjurinaResult tjurina_total<Rat>(SyzygyEngine<Rat>&);
template TjurinaResult tjurina_total<Cyclo>(SyzygyEngine<Cyclo>&);
template long tjurina_total<Rat>(const HomPoly&);
template long tjurina_total<Cyclo>(const CycloPoly&);

std::string to_string(MuMode m) {
    switch (m) {
        case MuMode::arrangement: return "arrangement";
        case MuMode::polar: return "polar";
        case MuMode::assume_quasihomogeneous: return "assume_quasihomogeneous";
    }
    return "polar";
}

MuMode parse_mu_mode(const std::string& s) {
    if (s == "arrangement") return MuMode::arrangement;
    if (s == "polar" || s == "rational_points") return MuMode::polar;
    if (s == "assume_quasihomogeneous") return MuMode::assume_quasihomogeneous;
    throw std::invalid_argument("unknown mu mode '" + s + "'");
}

namespace {

UPoly sampled_resultant(const HomPoly& p, const HomPoly& q, int degree_bound) {
    std::vector<Rat> xs, ys;
    for (int t = 0; t <= degree_bound; ++t) {
        xs.emplace_back(t);
        ys.push_back(resultant(slice_in_x(p, Rat(t)), slice_in_x(q, Rat(t))));
    }
    return interpolate(xs, ys);
}

Rat det3(const std::array<std::array<Rat, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

MuResult mu_polar(const HomPoly& f, std::uint64_t seed) {
    const int d = f.degree();
    if (d < 2) throw MuFailure("mu_polar: degree below 2");
    const int polar_deg = (d - 1) * (d - 1);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-4, 4);
    MuResult out;
    out.mode = MuMode::polar;
    std::vector<long> found;
    for (int attempt = 0; attempt < 16; ++attempt) {
        std::array<std::array<Rat, 3>, 3> t;
        for (auto& row : t)
            for (auto& x : row) x = coef(rng);
        if (is_zero(det3(t))) continue;
        const HomPoly g = f.substitute(t);
        const HomPoly gx = g.derive(Var::x), gy = g.derive(Var::y);
        if (is_zero(g.coeff(mono(d, 0, 0))) || is_zero(gy.coeff(mono(d - 1, 0, 0)))) continue;
        const UPoly r = sampled_resultant(gx, gy, polar_deg);
        if (r.is_zero()) throw MuFailure("polar curves share a component: input is not reduced");
        if (r.degree() != polar_deg) continue;  // intersection point on the line at infinity
        const UPoly s = sampled_resultant(g, gx, d * (d - 1));
        if (s.is_zero()) continue;
        const UPoly common = gcd(r, s);
        const long mu = common.degree() <= 0 ? 0 : multiplicity_sum(r, common);
        ++out.charts;
        for (long prev : found)
            if (prev == mu) {
                out.value = mu;
                return out;
            }
        found.push_back(mu);
    }
    throw MuFailure("mu_polar: no two charts agreed");
}

MuResult mu_total(const HomPoly& f, MuMode mode, const MuContext& ctx) {
    MuResult out;
    switch (mode) {
        case MuMode::arrangement:
            if (!ctx.combinatorial) throw std::invalid_argument("mu arrangement mode needs a line arrangement");
            out.mode = MuMode::arrangement;
            out.value = *ctx.combinatorial;
            return out;
        case MuMode::polar:
            try {
                return mu_polar(f, ctx.seed);
            } catch (const MuFailure& e) {
                if (!ctx.tau) throw;
                out.warnings.push_back(std::string("polar mode failed (") + e.what() + "); assuming mu = tau");
            }
            [[fallthrough]];
        case MuMode::assume_quasihomogeneous:
            if (!ctx.tau) throw std::invalid_argument("assume_quasihomogeneous needs tau");
            out.mode = MuMode::assume_quasihomogeneous;
            out.value = *ctx.tau;
            out.assumed = true;
            return out;
    }
    return out;
}

ComponentCount count_components(const std::vector<HomPoly>& factors) {
    ComponentCount out;
    for (const auto& f : factors) {
        FactorComponents fc;
        fc.degree = f.degree();
        if (f.is_zero() || f.degree() < 1) throw std::invalid_argument("component count: constant or zero factor");
        std::array<bool, 3> used{false, false, false};
        for (const auto& [m, c] : f.terms())
            for (int v = 0; v < 3; ++v)
                if (m.e[v] > 0) used[v] = true;
        const int nvars = used[0] + used[1] + used[2];
        if (f.degree() == 1) {
            fc.kind = "line";
            fc.components = 1;
        } else if (nvars == 1) {
            throw std::invalid_argument("component count: factor " + f.to_string() + " is a power of a line");
        } else if (nvars == 2) {
            fc.kind = "binary_form";
            fc.components = f.degree();
        } else if (f.degree() == 2) {
            RatMatrix q(3, 3);
            for (const auto& [m, c] : f.terms()) {
                int idx[2], k = 0;
                for (int v = 0; v < 3; ++v)
                    for (int r = 0; r < m.e[v]; ++r) idx[k++] = v;
                if (idx[0] == idx[1]) {
                    q(idx[0], idx[0]) += c;
                } else {
                    q(idx[0], idx[1]) += c / 2;
                    q(idx[1], idx[0]) += c / 2;
                }
            }
            const std::size_t rk = rank(q);
            if (rk == 1) throw std::invalid_argument("component count: conic " + f.to_string() + " is a double line");
            fc.kind = rk == 3 ? "conic" : "line_pair";
            fc.components = rk == 3 ? 1 : 2;
        } else {
            fc.kind = "asserted_irreducible";
            fc.components = 1;
            fc.verified = false;
        }
        out.e += fc.components;
        out.factors.push_back(fc);
    }
    return out;
}

Betti betti_polynomial(int d, int e, long mu) {
    const long dm1 = d - 1;
    return {1, e - 1, dm1 * dm1 - mu - (d - e)};
}

long alpha_of(const CurveNumbers& c) {
    const long dm1 = c.d - 1;
    return c.tau - (dm1 * dm1 - static_cast<long>(c.exponents.at(0)) * c.exponents.at(1));
}

namespace {

nlohmann::json exps_json(const std::vector<int>& e) { return nlohmann::json(e); }

}  // namespace

Verdict thm3_coefficients(const CurveNumbers& c) {
    if (c.exponents.size() < 2) return not_applicable("thm3", "fewer than two exponents");
    const long d1 = c.exponents[0], d2 = c.exponents[1];
    const long alpha = alpha_of(c);
    const long a = d1 + d2 - c.e + 1;
    const long b = c.mu - c.tau + c.d - c.e + alpha;
    const Betti B = betti_polynomial(c.d, c.e, c.mu);
    // (1 + d1 t)(1 + d2 t) - B(t), coefficientwise
    const long diff0 = 1 - B.b0, diff1 = d1 + d2 - B.b1, diff2 = d1 * d2 - B.b2;
    const bool identity = diff0 == 0 && diff1 == a && diff2 == b;
    const long type_t = d1 + d2 - c.d + 1;
    const bool free_lines = c.line_arrangement && c.exponents.size() == 2;
    const bool vanishing = a == 0 || b == 0;
    const bool ok = identity && a >= 0 && b >= 0 && a == type_t + (c.d - c.e) && vanishing == free_lines &&
                    (!vanishing || (a == 0 && b == 0)) && alpha >= 0;
    nlohmann::json det = {{"a", a},
                          {"b", b},
                          {"alpha", alpha},
                          {"betti", {B.b0, B.b1, B.b2}},
                          {"difference", {diff0, diff1, diff2}},
                          {"free_line_arrangement", vanishing}};
    return make_verdict("thm3", ok, det, c.mu_assumed ? "mu assumed equal to tau" : "");
}

Verdict thm2_verdict(int d, const std::vector<int>& e, long tau) {
    if (e.size() < 2) return not_applicable("thm2", "fewer than two exponents");
    const long dm1 = d - 1;
    const long rhs = dm1 * dm1 - static_cast<long>(e[0]) * e[1];
    nlohmann::json det = {{"tau", tau}, {"rhs", rhs}, {"m", e.size()}, {"exponents", exps_json(e)}};
    if (e.size() == 2) {
        det["case"] = "free";
        return make_verdict("thm2", tau == rhs, det);
    }
    const bool eq = tau == rhs;
    const bool cond = e.size() == 3 && e[2] == d - 1;
    det["equality"] = eq;
    det["m3_and_d3_eq_d_minus_1"] = cond;
    return make_verdict("thm2", eq == cond && tau >= rhs, det);
}

Verdict cor2_bounds(int d, const std::vector<int>& e, long tau) {
    if (e.size() < 2) return not_applicable("cor2", "fewer than two exponents");
    const long dm1 = d - 1, d1 = e[0], d2 = e[1];
    const long lower = dm1 * dm1 - d1 * d2;
    const long upper = dm1 * dm1 - d1 * (dm1 - d1);
    const long weak_lower = dm1 * (dm1 - d1);
    const bool weak_eq = tau == weak_lower;
    const bool weak_cond = e.size() == 3 && e[1] == d - 1 && e[2] == d - 1;
    const bool ok = lower <= tau && tau <= upper && weak_lower <= lower && weak_eq == weak_cond;
    nlohmann::json det = {{"lower", lower},
                          {"tau", tau},
                          {"upper", upper},
                          {"slack_lower", tau - lower},
                          {"slack_upper", upper - tau},
                          {"weak_lower", weak_lower},
                          {"weak_lower_equality", weak_eq}};
    return make_verdict("cor2", ok, det);
}

Verdict cor3_euler(const CurveNumbers& c) {
    if (c.exponents.size() != 2) return not_applicable("cor3", "curve is not free");
    const long d1 = c.exponents[0], d2 = c.exponents[1];
    const Betti B = betti_polynomial(c.d, c.e, c.mu);
    const long de = c.d - c.e, dmu = c.mu - c.tau;
    // (1 + d1 t)(1 + d2 t) = B(t) + (d - e) t (1 + t) + (mu - tau) t^2
    const bool identity = B.b0 == 1 && d1 + d2 == B.b1 + de && d1 * d2 == B.b2 + de + dmu;
    nlohmann::json det = {{"betti", {B.b0, B.b1, B.b2}}, {"identity", identity}, {"mu_minus_tau", dmu}};
    bool ok = identity;
    if (dmu == 0) {
        const bool euler = B.at(-1) == (d1 - 1) * (d2 - 1);
        det["euler_number"] = B.at(-1);
        det["expected"] = (d1 - 1) * (d2 - 1);
        ok = ok && euler;
    } else {
        det["euler_number"] = nullptr;
    }
    return make_verdict("cor3", ok, det, c.mu_assumed ? "mu assumed equal to tau" : "");
}

Verdict cor31_sign(const CurveNumbers& c) {
    if (c.exponents.size() != 2 || c.exponents[0] != 1) return not_applicable("cor31", "not a free curve with d1 = 1");
    const long d2 = c.exponents[1];
    const Betti B = betti_polynomial(c.d, c.e, c.mu);
    const long E = B.at(-1);
    const long expected = 0 * (d2 - 1) - (c.mu - c.tau);
    nlohmann::json det = {{"E", E}, {"expected", expected}};
    return make_verdict("cor31", E == expected && E <= 0, det, "rationality of components is cited, not verified");
}

Verdict free_identities(int d, const std::vector<int>& e, long tau) {
    if (e.size() != 2) return not_applicable("free_identities", "curve is not free");
    const long dm1 = d - 1;
    const bool sum = e[0] + e[1] == d - 1;
    const bool t = tau == dm1 * dm1 - static_cast<long>(e[0]) * e[1];
    return make_verdict("free_identities", sum && t, {{"d1_plus_d2", e[0] + e[1]}, {"tau", tau}});
}

Verdict generation_dichotomy(int d, const std::vector<int>& e) {
    if (e.size() < 2) return not_applicable("dichotomy", "fewer than two exponents");
    const int s = e[0] + e[1];
    bool ok;
    if (e.size() == 2) ok = s == d - 1;
    else ok = s >= d && (s != d || e.size() == 3);
    return make_verdict("dichotomy", ok, {{"d1_plus_d2", s}, {"d", d}, {"m", e.size()}});
}

Verdict second_exponent_bound(int d, const std::vector<int>& e) {
    if (e.size() < 2) return not_applicable("d2_bound", "fewer than two exponents");
    return make_verdict("d2_bound", e[1] <= d - 1, {{"d2", e[1]}, {"d_minus_1", d - 1}});
}

}  // namespace jacsyz
