#include "jacsyz/cli/report.hpp"

#include "jacsyz/bourbaki.hpp"
#include "jacsyz/squarefree.hpp"

#include <map>

namespace jacsyz::cli {

nlohmann::json cyclo_json(const Cyclo& c) {
    if (c.is_rational()) return jacsyz::to_string(c.rational_part());
    return c.to_string();
}

nlohmann::json line_json(const Line& l) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : l.coeffs()) j.push_back(cyclo_json(c));
    return j;
}

nlohmann::json class_json(CurveClass c) { return to_string(c); }

nlohmann::json verdicts_json(const std::vector<Verdict>& vs) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& v : vs) j.push_back(v.to_json());
    return j;
}

nlohmann::json envelope(const std::string& command, const std::string& input, std::uint64_t seed) {
    return {{"tool", "jacsyz"},
            {"version", kToolVersion},
            {"schema_version", kSchemaVersion},
            {"command", command},
            {"input", input},
            {"seed", seed}};
}

std::string canonical(const nlohmann::json& j) { return j.dump(2) + "\n"; }

ArrangementAnalysis analyze_arrangement(const Arrangement& a, int kmax, const std::optional<ArrangementSyzygies>& known) {
    ArrangementAnalysis out;
    out.arrangement = a;
    out.lattice = intersection_lattice(a);
    out.profile = multiplicity_profile(a, out.lattice);
    out.modular = modular_points(out.lattice);
    out.combinatorial = combinatorial_tau_mu(out.lattice);
    if (kmax < 0) kmax = default_kmax(a.size(), true);
    if (known && known->tau) out.syzygies = *known;
    else out.syzygies = arrangement_syzygies(a, true, kmax);
    const int d = a.size();
    const auto& e = out.syzygies.exponents;
    const long tau = *out.syzygies.tau;

    out.verdicts.push_back(lattice_check(a, out.lattice));
    out.verdicts.push_back(make_verdict("tau_oracle", tau == out.combinatorial,
                                        {{"tau", tau}, {"sum_m_minus_1_squared", out.combinatorial}}));
    out.verdicts.push_back(make_verdict("search_complete", out.syzygies.complete, {{"kmax", kmax}}));
    out.verdicts.push_back(cor20_check(d, e, tau));
    out.verdicts.push_back(thm4_filter(e, out.profile, !out.modular.empty(), out.lattice));
    out.verdicts.push_back(thm5_bounds(d, e, out.profile));
    out.verdicts.push_back(dm_bound(d, e));

    nlohmann::json lines = nlohmann::json::array();
    for (const auto& l : a.lines()) lines.push_back(line_json(l));
    nlohmann::json points = nlohmann::json::array();
    std::map<int, int> histogram;
    for (const auto& p : out.lattice) {
        nlohmann::json pt = nlohmann::json::array();
        for (const auto& c : p.point) pt.push_back(cyclo_json(c));
        points.push_back({{"point", pt}, {"lines", p.incident}, {"multiplicity", p.multiplicity()}});
        ++histogram[p.multiplicity()];
    }
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [m, c] : histogram) hist[std::to_string(m)] = c;
    out.report = {{"lines", lines},
                  {"d", d},
                  {"conductor", a.conductor()},
                  {"points", points},
                  {"multiplicity_histogram", hist},
                  {"m_A", out.profile.m_a},
                  {"n_A", out.profile.n_a},
                  {"r_L", out.profile.r_l},
                  {"modular_points", out.modular},
                  {"supersolvable", !out.modular.empty()},
                  {"exponents", e},
                  {"classification", class_json(out.syzygies.classification)},
                  {"tau", tau},
                  {"verdicts", verdicts_json(out.verdicts)}};
    return out;
}

namespace {

template <class F>
nlohmann::json table_json(const ExponentProfile<F>& p) {
    nlohmann::json t = nlohmann::json::array();
    for (const auto& s : p.table)
        t.push_back({{"k", s.k}, {"dim_d0", s.dim_d0}, {"new_generators", s.new_generators}});
    return t;
}

}  // namespace

CurveAnalysis analyze_curve(const CurveInput& in, const AnalyzeOptions& opts) {
    CurveAnalysis out;
    const HomPoly f = in.product();
    const int d = f.degree();
    if (d < 1) throw ParseError(ParseError::Kind::syntax, 0, "curve has degree 0");
    SquarefreeOptions sq;
    sq.seed = opts.seed;
    sq.strict = opts.strict;
    const bool reduced = opts.strict ? squarefree_strict(f) : squarefree_check(f, sq);
    if (!reduced) throw ParseError(ParseError::Kind::not_squarefree, 0, "curve is not reduced (squarefree test failed)");

    std::optional<Arrangement> arr = arrangement_from_factors(in.factors);
    const bool is_arr = arr.has_value();
    const int kmax = opts.kmax >= 0 ? opts.kmax : default_kmax(d, is_arr);

    SyzygyEngine<Rat> engine(f);
    out.profile = engine.profile(kmax);
    out.tjurina = tjurina_total(engine);
    const long tau = out.tjurina.tau;

    if (is_arr) {
        out.components.e = d;
        ArrangementSyzygies known{out.profile.exponents, out.profile.classification, out.profile.complete, tau};
        out.arrangement = analyze_arrangement(*arr, kmax, known);
    } else {
        out.components = count_components(in.factors);
        for (std::size_t i = 0; i < out.components.factors.size(); ++i) {
            auto& fc = out.components.factors[i];
            if (fc.verified) continue;
            if (i < in.declared_irreducible.size() && in.declared_irreducible[i]) {
                fc.kind = "declared_irreducible";
                fc.verified = true;
            } else if (tjurina_total(in.factors[i]) == 0) {
                fc.kind = "smooth";  // smooth plane curves are irreducible
                fc.verified = true;
            }
        }
    }

    MuContext ctx;
    ctx.tau = tau;
    ctx.seed = opts.seed;
    if (out.arrangement) ctx.combinatorial = out.arrangement->combinatorial;
    const MuMode mode = is_arr ? MuMode::arrangement : opts.mu_mode;
    if (mode == MuMode::arrangement && !is_arr)
        throw ParseError(ParseError::Kind::not_lines, 0, "mu mode 'arrangement' needs a line arrangement");
    out.mu = mu_total(f, mode, ctx);

    auto& c = out.numbers;
    c.d = d;
    c.e = out.components.e;
    c.exponents = out.profile.exponents;
    c.tau = tau;
    c.mu = out.mu.value;
    c.mu_assumed = out.mu.assumed;
    c.line_arrangement = is_arr;

    auto& v = out.verdicts;
    v.push_back(make_verdict("search_complete", out.profile.complete, {{"kmax", kmax}}));
    v.push_back(make_verdict("mu_ge_tau", c.mu >= c.tau, {{"mu", c.mu}, {"tau", c.tau}}));
    v.push_back(free_identities(d, c.exponents, tau));
    v.push_back(generation_dichotomy(d, c.exponents));
    v.push_back(second_exponent_bound(d, c.exponents));
    v.push_back(thm2_verdict(d, c.exponents, tau));
    v.push_back(cor2_bounds(d, c.exponents, tau));
    v.push_back(thm3_coefficients(c));
    v.push_back(cor3_euler(c));
    v.push_back(cor31_sign(c));
    if (out.profile.m() >= 3) v.push_back(thm1_check(f, out.profile, tau));
    else v.push_back(not_applicable("thm1", "fewer than three generators"));
    if (out.arrangement)
        for (const auto& av : out.arrangement->verdicts)
            if (av.name != "search_complete") v.push_back(av);

    nlohmann::json factors = nlohmann::json::array();
    for (std::size_t i = 0; i < in.factors.size(); ++i) {
        nlohmann::json fj = {{"polynomial", in.factors[i].to_string()}, {"degree", in.factors[i].degree()}};
        if (!is_arr) {
            const auto& fc = out.components.factors[i];
            fj["components"] = fc.components;
            fj["kind"] = fc.kind;
            fj["verified"] = fc.verified;
        }
        factors.push_back(fj);
    }
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : out.profile.generators)
        gens.push_back({{"degree", g.degree},
                        {"components", {g.comps[0].to_string(), g.comps[1].to_string(), g.comps[2].to_string()}}});
    const Betti B = betti_polynomial(d, c.e, c.mu);
    const long alpha = c.exponents.size() >= 2 ? alpha_of(c) : 0;
    nlohmann::json mu = {{"value", c.mu},
                         {"mode", to_string(out.mu.mode)},
                         {"assumed", out.mu.assumed},
                         {"warnings", out.mu.warnings}};
    out.report = {{"polynomial", f.to_string()},
                  {"factors", factors},
                  {"d", d},
                  {"e", c.e},
                  {"line_arrangement", is_arr},
                  {"kmax", kmax},
                  {"exponents", c.exponents},
                  {"m", out.profile.m()},
                  {"mdr", c.exponents.empty() ? -1 : c.exponents.front()},
                  {"classification", class_json(out.profile.classification)},
                  {"type", out.profile.type_t},
                  {"generators", gens},
                  {"dimension_table", table_json(out.profile)},
                  {"tau", tau},
                  {"tau_window", {out.tjurina.window_lo, out.tjurina.window_hi}},
                  {"tau_window_values", out.tjurina.values},
                  {"tau_window_widened", out.tjurina.widened},
                  {"mu", mu},
                  {"alpha", alpha},
                  {"betti", {B.b0, B.b1, B.b2}},
                  {"verdicts", verdicts_json(out.verdicts)}};
    if (c.exponents.size() >= 2) {
        out.report["a"] = static_cast<long>(c.exponents[0]) + c.exponents[1] - c.e + 1;
        out.report["b"] = c.mu - c.tau + d - c.e + alpha;
    }
    if (out.arrangement) out.report["arrangement"] = out.arrangement->report;
    return out;
}

}  // namespace jacsyz::cli
