#include "jacsyz/arrangement.hpp"

#include "jacsyz/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace jacsyz {

namespace {

using Point = std::array<Cyclo, 3>;

Point normalized(Point p) {
    for (int i = 0; i < 3; ++i) {
        if (p[i].is_zero()) continue;
        const Cyclo inv = p[i].inverse();
        for (int j = i; j < 3; ++j) p[j] *= inv;
        p[i] = Cyclo(1);
        return p;
    }
    throw std::invalid_argument("zero vector has no projective point");
}

Point cross(const Point& a, const Point& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool same_point(const Point& a, const Point& b) { return a[0] == b[0] && a[1] == b[1] && a[2] == b[2]; }

long choose2(long n) { return n * (n - 1) / 2; }

}  // namespace

Line::Line(const Cyclo& a, const Cyclo& b, const Cyclo& c) {
    try {
        c_ = normalized({a, b, c});
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("line with all coefficients zero");
    }
}

bool Line::is_rational() const {
    return std::all_of(c_.begin(), c_.end(), [](const Cyclo& x) { return x.is_rational(); });
}

int Line::conductor() const {
    int n = 1;
    for (const auto& x : c_)
        if (!x.is_rational()) n = std::lcm(n, x.conductor());
    return n;
}

CycloPoly Line::form() const { return CycloPoly::linear(c_[0], c_[1], c_[2]); }

bool Line::contains(const Point& p) const { return (c_[0] * p[0] + c_[1] * p[1] + c_[2] * p[2]).is_zero(); }

std::string Line::to_string() const { return form().to_string(); }

Arrangement::Arrangement(std::vector<Line> lines) : lines_(std::move(lines)) {
    for (std::size_t i = 0; i < lines_.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (lines_[i] == lines_[j])
                throw std::invalid_argument("repeated line " + lines_[i].to_string() + " in arrangement");
}

bool Arrangement::contains(const Line& l) const { return std::find(lines_.begin(), lines_.end(), l) != lines_.end(); }

bool Arrangement::is_rational() const {
    return std::all_of(lines_.begin(), lines_.end(), [](const Line& l) { return l.is_rational(); });
}

int Arrangement::conductor() const {
    int n = 1;
    for (const auto& l : lines_) n = std::lcm(n, l.conductor());
    return n;
}

CycloPoly Arrangement::polynomial() const {
    CycloPoly f = CycloPoly::constant(Cyclo(1));
    for (const auto& l : lines_) f = f * l.form();
    return f;
}

std::optional<HomPoly> Arrangement::rational_polynomial() const { return to_rational(polynomial()); }

Arrangement Arrangement::without(int i) const {
    if (i < 0 || i >= size()) throw std::out_of_range("line index out of range");
    auto v = lines_;
    v.erase(v.begin() + i);
    return Arrangement(std::move(v));
}

Arrangement Arrangement::with(const Line& l) const {
    auto v = lines_;
    v.push_back(l);
    return Arrangement(std::move(v));
}

std::vector<PointRecord> intersection_lattice(const Arrangement& a) {
    const int d = a.size();
    std::set<std::vector<int>> seen;
    std::vector<PointRecord> out;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            const Point p = normalized(cross(a.line(i).coeffs(), a.line(j).coeffs()));
            std::vector<int> inc;
            for (int k = 0; k < d; ++k)
                if (k == i || k == j || a.line(k).contains(p)) inc.push_back(k);
            if (seen.insert(inc).second) out.push_back({p, std::move(inc)});
        }
    long pairs = 0;
    for (const auto& p : out) pairs += choose2(p.multiplicity());
    if (pairs != choose2(d)) throw std::logic_error("intersection lattice: pair count mismatch");
    return out;
}

MultiplicityProfile multiplicity_profile(const Arrangement& a, const std::vector<PointRecord>& lattice) {
    MultiplicityProfile mp;
    mp.r_l.assign(a.size(), 0);
    for (const auto& p : lattice) {
        mp.m_a = std::max(mp.m_a, p.multiplicity());
        for (int i : p.incident) ++mp.r_l[i];
    }
    for (const auto& p : lattice)
        if (p.multiplicity() == mp.m_a) ++mp.maximal_points;
    if (mp.maximal_points >= 2) {
        mp.n_a = mp.m_a;
    } else {
        mp.n_a = 1;  // a smooth point of the curve
        for (const auto& p : lattice)
            if (p.multiplicity() != mp.m_a) mp.n_a = std::max(mp.n_a, p.multiplicity());
    }
    if (lattice.empty()) mp.n_a = 0;
    return mp;
}

long combinatorial_tau_mu(const std::vector<PointRecord>& lattice) {
    long s = 0;
    for (const auto& p : lattice) s += static_cast<long>(p.multiplicity() - 1) * (p.multiplicity() - 1);
    return s;
}

std::vector<int> modular_points(const std::vector<PointRecord>& lattice) {
    std::vector<int> out;
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        bool modular = true;
        for (std::size_t j = 0; j < lattice.size() && modular; ++j) {
            if (i == j) continue;
            const auto& a = lattice[i].incident;
            const auto& b = lattice[j].incident;
            std::vector<int> common;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
            if (common.empty()) modular = false;
        }
        if (modular) out.push_back(static_cast<int>(i));
    }
    return out;
}

int intersection_count(const Arrangement& a, const Line& l) {
    std::vector<Point> pts;
    for (const auto& m : a.lines()) {
        if (m == l) continue;
        const Point p = normalized(cross(l.coeffs(), m.coeffs()));
        if (std::none_of(pts.begin(), pts.end(), [&](const Point& q) { return same_point(p, q); })) pts.push_back(p);
    }
    return static_cast<int>(pts.size());
}

namespace {

template <class F>
ArrangementSyzygies syzygies_of(const BasicHomPoly<F>& f, bool with_tau, int kmax) {
    SyzygyEngine<F> engine(f);
    const auto prof = engine.profile(kmax);
    ArrangementSyzygies out;
    out.exponents = prof.exponents;
    out.classification = prof.classification;
    out.complete = prof.complete;
    if (with_tau) out.tau = tjurina_total(engine).tau;
    return out;
}

}  // namespace

ArrangementSyzygies arrangement_syzygies(const Arrangement& a, bool with_tau, int kmax) {
    if (a.size() < 1) throw std::invalid_argument("empty arrangement");
    if (kmax < 0) kmax = default_kmax(a.size(), true);
    if (auto f = a.rational_polynomial()) return syzygies_of(*f, with_tau, kmax);
    return syzygies_of(a.polynomial(), with_tau, kmax);
}

Verdict lattice_check(const Arrangement& a, const std::vector<PointRecord>& lattice) {
    long pairs = 0;
    for (const auto& p : lattice) pairs += choose2(p.multiplicity());
    return make_verdict("lattice", pairs == choose2(a.size()), {{"pairs", pairs}, {"expected", choose2(a.size())}});
}

Verdict cor20_check(int d, const std::vector<int>& e, long tau) {
    if (e.size() < 2) return not_applicable("cor20", "fewer than two exponents");
    const long dm1 = d - 1, d1 = e[0], d2 = e[1];
    const long base = dm1 * dm1 - d1 * d2;
    const long t = d1 + d2 - d + 1;
    const bool free = e.size() == 2;
    const bool ok = tau >= base + t && free == (tau == base);
    return make_verdict("cor20", ok, {{"tau", tau}, {"rhs", base + t}, {"free_rhs", base}, {"free", free}});
}

Verdict thm4_filter(const std::vector<int>& e, const MultiplicityProfile& mp, bool has_modular_point,
                    const std::vector<PointRecord>& lattice) {
    if (e.size() != 2) return not_applicable("thm4", "arrangement is not free");
    const int d1 = e[0];
    const int max_r = mp.r_l.empty() ? 0 : *std::max_element(mp.r_l.begin(), mp.r_l.end());
    const bool condition = max_r <= d1;
    // any line off a maximal point meets the lines through it in distinct points
    bool off_point_bound = true;
    for (const auto& p : lattice) {
        if (p.multiplicity() != mp.m_a) continue;
        for (std::size_t i = 0; i < mp.r_l.size(); ++i)
            if (!std::binary_search(p.incident.begin(), p.incident.end(), static_cast<int>(i)) && mp.r_l[i] < mp.m_a)
                off_point_bound = false;
    }
    nlohmann::json det = {{"d1", d1},
                          {"r_L", mp.r_l},
                          {"condition_r_L_le_d1", condition},
                          {"verdict", condition ? "could-be-minimal-counterexample-side" : "excluded"},
                          {"has_modular_point", has_modular_point},
                          {"r_L_ge_m_off_maximal_point", off_point_bound}};
    if (!has_modular_point) det["strict_d1_gt_m"] = d1 > mp.m_a;
    else det["strict_d1_gt_m"] = nullptr;
    return make_verdict("thm4", off_point_bound, det);
}

Verdict thm5_bounds(int d, const std::vector<int>& e, const MultiplicityProfile& mp) {
    if (e.size() < 2) return not_applicable("thm5", "fewer than two exponents");
    const long m = mp.m_a, n = mp.n_a, d1 = e[0], d2 = e[1];
    const long t = d1 + d2 - d + 1;
    const bool chain = m - 1 <= t + m - 1 && t + m - 1 <= d2 && d2 <= d - n;
    const bool type = 0 <= t && t <= d + 1 - m - n;
    const bool free = e.size() == 2;
    const bool special = d2 != m - 1 || (free && d1 == d - m);
    const bool nonfree = free || m <= d2;
    nlohmann::json det = {{"chain", {m - 1, t + m - 1, d2, d - n}},
                          {"type_bounds", {0, t, d + 1 - m - n}},
                          {"m_A", m},
                          {"n_A", n},
                          {"tight", {m - 1 == t + m - 1, t + m - 1 == d2, d2 == d - n}}};
    return make_verdict("thm5", chain && type && special && nonfree, det);
}

Verdict dm_bound(int d, const std::vector<int>& e) {
    if (e.empty()) return not_applicable("dm_bound", "no exponents");
    return make_verdict("dm_bound", e.back() <= d - 2, {{"dm", e.back()}, {"d_minus_2", d - 2}});
}

namespace {

std::vector<int> sorted2(int a, int b) { return a <= b ? std::vector<int>{a, b} : std::vector<int>{b, a}; }

}  // namespace

DeletionRecord deletion_classify(const Arrangement& a, const std::vector<int>& exps, int line) {
    if (exps.size() != 2) throw std::invalid_argument("deletion_classify: arrangement must be free");
    DeletionRecord rec;
    rec.line = line;
    rec.exponents = exps;
    const Arrangement ap = a.without(line);
    const Line& l = a.line(line);
    rec.r = intersection_count(ap, l);
    const auto sy = arrangement_syzygies(ap, false);
    rec.deleted_exponents = sy.exponents;
    rec.deleted_class = classify(ap.size(), sy.exponents);
    const int d1 = exps[0], d2 = exps[1];
    const auto& e = sy.exponents;
    const bool free = e.size() == 2;
    const bool c1 = d1 < d2 && free && e == sorted2(d1, d2 - 1) && rec.r == d1 + 1;
    const bool c2 = free && e == sorted2(d1 - 1, d2) && rec.r == d2 + 1;
    const bool c3 = e.size() == 3 && e[0] == d1 && e[1] == d2 && e[0] + e[1] == ap.size() &&
                    rec.r == ap.size() - e[2] && rec.r <= d1;
    const int matches = c1 + c2 + c3;
    rec.matched_case = matches == 1 ? (c1 ? 1 : c2 ? 2 : 3) : 0;
    const bool iff = free == (rec.r >= d1 + 1);
    nlohmann::json det = {{"line", line},
                          {"r", rec.r},
                          {"case", rec.matched_case},
                          {"matches", matches},
                          {"exponents", exps},
                          {"deleted_exponents", e},
                          {"deleted_class", to_string(rec.deleted_class)},
                          {"iff_free_r_ge_d1_plus_1", iff},
                          {"complete", sy.complete}};
    bool ok = matches == 1 && iff && sy.complete;
    if (free) {
        const auto back = addition_classify(ap, e, l);
        det["round_trip_exponents"] = back.added_exponents;
        det["round_trip_case"] = back.matched_case;
        ok = ok && back.added_exponents == exps && !back.verdict.failed();
    } else {
        const auto back = arrangement_syzygies(a, false);
        det["round_trip_exponents"] = back.exponents;
        ok = ok && back.exponents == exps;
    }
    rec.verdict = make_verdict("thm1b", ok, det);
    return rec;
}

AdditionRecord addition_classify(const Arrangement& ap, const std::vector<int>& exps, const Line& l) {
    if (exps.size() != 2) throw std::invalid_argument("addition_classify: arrangement must be free");
    if (ap.contains(l)) throw std::invalid_argument("addition_classify: line already in the arrangement");
    AdditionRecord rec;
    rec.exponents = exps;
    const Arrangement a = ap.with(l);
    rec.r = intersection_count(ap, l);
    const auto sy = arrangement_syzygies(a, false);
    rec.added_exponents = sy.exponents;
    rec.added_class = classify(a.size(), sy.exponents);
    const int d1p = exps[0], d2p = exps[1];
    const auto& e = sy.exponents;
    const bool free = e.size() == 2;
    const bool c1 = free && e == sorted2(d1p, d2p + 1) && rec.r == d1p + 1;
    const bool c2 = d1p < d2p && free && e == sorted2(d1p + 1, d2p) && rec.r == d2p + 1;
    const bool c3 = e.size() == 3 && e[0] == d1p + 1 && e[1] == d2p + 1 && e[0] + e[1] == a.size() &&
                    rec.r == e[2] + 1 && rec.r >= d2p + 2;
    const int matches = c1 + c2 + c3;
    rec.matched_case = matches == 1 ? (c1 ? 1 : c2 ? 2 : 3) : 0;
    const bool iff = free == (rec.r <= d2p + 1);
    nlohmann::json det = {{"r", rec.r},
                          {"case", rec.matched_case},
                          {"matches", matches},
                          {"exponents", exps},
                          {"added_exponents", e},
                          {"added_class", to_string(rec.added_class)},
                          {"iff_free_r_le_d2_plus_1", iff},
                          {"complete", sy.complete}};
    rec.verdict = make_verdict("thm2b", matches == 1 && iff && sy.complete, det);
    return rec;
}

Arrangement random_arrangement(int d, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> coef(-5, 5);
    std::vector<Line> lines;
    while (static_cast<int>(lines.size()) < d) {
        const long a = coef(rng), b = coef(rng), c = coef(rng);
        if (a == 0 && b == 0 && c == 0) continue;
        Line l = Line::rational(a, b, c);
        if (std::find(lines.begin(), lines.end(), l) == lines.end()) lines.push_back(std::move(l));
    }
    return Arrangement(std::move(lines));
}

Arrangement random_supersolvable(int d, std::mt19937_64& rng) {
    if (d < 2) throw std::invalid_argument("random_supersolvable: need at least two lines");
    std::uniform_int_distribution<long> small(-2, 2), wide(-3, 3);
    for (;;) {
        Point p{Cyclo(small(rng)), Cyclo(small(rng)), Cyclo(small(rng))};
        if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero()) continue;
        int t = std::uniform_int_distribution<int>(1, 3)(rng);
        while (t > 1 && t + t * (t - 1) / 2 > d) --t;
        std::vector<Line> trans;
        int guard = 0;
        while (static_cast<int>(trans.size()) < t && ++guard < 200) {
            const long a = wide(rng), b = wide(rng), c = wide(rng);
            if (a == 0 && b == 0 && c == 0) continue;
            Line l = Line::rational(a, b, c);
            if (l.contains(p) || std::find(trans.begin(), trans.end(), l) != trans.end()) continue;
            trans.push_back(std::move(l));
        }
        if (static_cast<int>(trans.size()) < t) continue;
        std::vector<Line> pencil;
        auto add_pencil = [&](const Point& q) {
            const Point c = cross(p, q);
            if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero()) return;
            Line l(c[0], c[1], c[2]);
            if (std::find(pencil.begin(), pencil.end(), l) == pencil.end() &&
                std::find(trans.begin(), trans.end(), l) == trans.end())
                pencil.push_back(std::move(l));
        };
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j) add_pencil(cross(trans[i].coeffs(), trans[j].coeffs()));
        guard = 0;
        while (static_cast<int>(pencil.size() + trans.size()) < d && ++guard < 500)
            add_pencil({Cyclo(wide(rng)), Cyclo(wide(rng)), Cyclo(wide(rng))});
        if (static_cast<int>(pencil.size() + trans.size()) != d) continue;
        std::vector<Line> all = pencil;
        all.insert(all.end(), trans.begin(), trans.end());
        return Arrangement(std::move(all));
    }
}

Line random_line_for(const Arrangement& a, const std::vector<PointRecord>& lattice, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> coef(-5, 5);
    std::uniform_int_distribution<int> mode_dist(0, 2);
    for (int guard = 0; guard < 1000; ++guard) {
        const int mode = lattice.empty() ? 0 : mode_dist(rng);
        Point c;
        if (mode == 0) {
            c = {Cyclo(coef(rng)), Cyclo(coef(rng)), Cyclo(coef(rng))};
        } else {
            std::uniform_int_distribution<std::size_t> pick(0, lattice.size() - 1);
            const Point& p = lattice[pick(rng)].point;
            const Point q = mode == 1 ? Point{Cyclo(coef(rng)), Cyclo(coef(rng)), Cyclo(coef(rng))}
                                      : lattice[pick(rng)].point;
            c = cross(p, q);
        }
        if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero()) continue;
        Line l(c[0], c[1], c[2]);
        if (!a.contains(l)) return l;
    }
    throw std::runtime_error("random_line_for: could not find a new line");
}

}  // namespace jacsyz
