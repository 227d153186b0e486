#pragma once

#include "jacsyz/cyclo.hpp"
#include "jacsyz/mono.hpp"
#include "jacsyz/rat.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jacsyz {

enum class Var : int { x = 0, y = 1, z = 2 };

/// Homogeneous polynomial of a fixed degree in x, y, z over a field F
/// (Rat or Cyclo). Terms are kept sorted in monomial_basis order with no
/// zero coefficients; the zero polynomial of degree k has no terms.
template <class F>
class BasicHomPoly {
public:
    using Term = std::pair<Mono, F>;

    BasicHomPoly() = default;
    explicit BasicHomPoly(int degree) : degree_(degree) {}

    static BasicHomPoly monomial(const Mono& m, F c = F(1)) {
        BasicHomPoly p(m.degree());
        if (!jacsyz::is_zero(c)) p.terms_.emplace_back(m, std::move(c));
        return p;
    }
    static BasicHomPoly constant(F c) { return monomial(mono(0, 0, 0), std::move(c)); }
    static BasicHomPoly variable(Var v) {
        Mono m;
        m.e[static_cast<int>(v)] = 1;
        return monomial(m);
    }
    /// Linear form a x + b y + c z.
    static BasicHomPoly linear(const F& a, const F& b, const F& c) {
        return from_dense(1, {a, b, c});
    }

    /// Builds from coefficients over monomial_basis(degree).
    static BasicHomPoly from_dense(int degree, const std::vector<F>& coeffs) {
        if (coeffs.size() != dim_s(degree)) throw std::invalid_argument("from_dense: wrong length");
        BasicHomPoly p(degree);
        const auto basis = monomial_basis(degree);
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (!jacsyz::is_zero(coeffs[i])) p.terms_.emplace_back(basis[i], coeffs[i]);
        return p;
    }

    /// Accepts unsorted terms with repeats; checks homogeneity.
    static BasicHomPoly from_terms(int degree, const std::vector<Term>& terms) {
        std::vector<F> dense(dim_s(degree), F(0));
        for (const auto& [m, c] : terms) {
            if (m.degree() != degree) throw std::invalid_argument("from_terms: inhomogeneous term");
            dense[mono_index(m)] += c;
        }
        return from_dense(degree, dense);
    }

    int degree() const { return degree_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    F coeff(const Mono& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Mono& q) { return t.first < q; });
        if (it != terms_.end() && it->first == m) return it->second;
        return F(0);
    }

    std::vector<F> dense() const {
        std::vector<F> out(dim_s(degree_), F(0));
        for (const auto& [m, c] : terms_) out[mono_index(m)] = c;
        return out;
    }

    const Term& leading_term() const {
        if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
        return terms_.front();
    }

    BasicHomPoly& operator+=(const BasicHomPoly& o) { return accumulate(o, false); }
    BasicHomPoly& operator-=(const BasicHomPoly& o) { return accumulate(o, true); }
    friend BasicHomPoly operator+(BasicHomPoly a, const BasicHomPoly& b) { return a += b; }
    friend BasicHomPoly operator-(BasicHomPoly a, const BasicHomPoly& b) { return a -= b; }
    BasicHomPoly operator-() const {
        BasicHomPoly r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    BasicHomPoly& operator*=(const F& s) {
        if (jacsyz::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& t : terms_) t.second *= s;
        return *this;
    }
    friend BasicHomPoly operator*(BasicHomPoly a, const F& s) { return a *= s; }
    friend BasicHomPoly operator*(const F& s, BasicHomPoly a) { return a *= s; }

    friend BasicHomPoly operator*(const BasicHomPoly& a, const BasicHomPoly& b) {
        const int deg = a.degree_ + b.degree_;
        BasicHomPoly r(deg);
        if (a.is_zero() || b.is_zero()) return r;
        std::vector<F> dense(dim_s(deg), F(0));
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) dense[mono_index(ma * mb)] += ca * cb;
        return from_dense(deg, dense);
    }

    /// Multiplication by a monomial (coefficient 1).
    BasicHomPoly shifted(const Mono& m) const {
        BasicHomPoly r(degree_ + m.degree());
        r.terms_.reserve(terms_.size());
        for (const auto& [mm, c] : terms_) r.terms_.emplace_back(mm * m, c);
        return r;
    }

    friend bool operator==(const BasicHomPoly& a, const BasicHomPoly& b) {
        if (a.degree_ != b.degree_) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].first != b.terms_[i].first || a.terms_[i].second != b.terms_[i].second)
                return false;
        return true;
    }
    friend bool operator!=(const BasicHomPoly& a, const BasicHomPoly& b) { return !(a == b); }

    /// Partial derivative. Degree-0 input is rejected.
    BasicHomPoly derive(Var v) const {
        if (degree_ < 1) throw std::invalid_argument("derive: constant polynomial has no degree -1 image");
        const int iv = static_cast<int>(v);
        std::vector<Term> out;
        for (const auto& [m, c] : terms_) {
            if (m.e[iv] == 0) continue;
            Mono q = m;
            q.e[iv] -= 1;
            out.emplace_back(q, c * F(static_cast<long>(m.e[iv])));
        }
        return from_terms(degree_ - 1, out);
    }

    std::array<BasicHomPoly, 3> gradient() const {
        return {derive(Var::x), derive(Var::y), derive(Var::z)};
    }

    /// Exact quotient q with *this == q * g, or std::nullopt if g does not
    /// divide. Throws std::domain_error for a zero divisor.
    std::optional<BasicHomPoly> exact_divide(const BasicHomPoly& g) const {
        if (g.is_zero()) throw std::domain_error("exact_divide: zero divisor");
        if (is_zero()) {
            if (degree_ < g.degree_) return std::nullopt;
            return BasicHomPoly(degree_ - g.degree_);
        }
        if (degree_ < g.degree_) return std::nullopt;
        const int qdeg = degree_ - g.degree_;
        const auto& [lm, lc] = g.leading_term();
        const F lc_inv = F(1) / lc;
        std::vector<F> rem = dense();
        std::vector<F> quo(dim_s(qdeg), F(0));
        const auto basis = monomial_basis(degree_);
        for (std::size_t i = 0; i < rem.size(); ++i) {
            if (jacsyz::is_zero(rem[i])) continue;
            const Mono& m = basis[i];
            if (!lm.divides(m)) return std::nullopt;
            const Mono qm = mono(m.e[0] - lm.e[0], m.e[1] - lm.e[1], m.e[2] - lm.e[2]);
            const F qc = rem[i] * lc_inv;
            for (const auto& [gm, gc] : g.terms_) rem[mono_index(gm * qm)] -= qc * gc;
            quo[mono_index(qm)] += qc;
        }
        return from_dense(qdeg, quo);
    }

    F eval(const F& x, const F& y, const F& z) const {
        F acc(0);
        const std::array<F, 3> pt{x, y, z};
        for (const auto& [m, c] : terms_) {
            F t = c;
            for (int v = 0; v < 3; ++v)
                for (int k = 0; k < m.e[v]; ++k) t *= pt[v];
            acc += t;
        }
        return acc;
    }

    /// p(x, y, z) -> p(sum_j a_{0j} w_j, sum_j a_{1j} w_j, sum_j a_{2j} w_j):
    /// substitutes linear forms (given as rows of coefficients) for x, y, z.
    BasicHomPoly substitute(const std::array<std::array<F, 3>, 3>& rows) const {
        std::array<BasicHomPoly, 3> lin;
        for (int v = 0; v < 3; ++v) lin[v] = linear(rows[v][0], rows[v][1], rows[v][2]);
        std::array<std::vector<BasicHomPoly>, 3> powers;
        for (int v = 0; v < 3; ++v) {
            powers[v].push_back(constant(F(1)));
            for (int k = 1; k <= degree_; ++k) powers[v].push_back(powers[v].back() * lin[v]);
        }
        BasicHomPoly acc(degree_);
        for (const auto& [m, c] : terms_) acc += (powers[0][m.e[0]] * powers[1][m.e[1]] * powers[2][m.e[2]]) * c;
        return acc;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            std::string cs = jacsyz::to_string(c);
            const bool compound = cs.find_first_of("+ ") != std::string::npos ||
                                  (cs.find('-', 1) != std::string::npos);
            if (compound) cs = "(" + cs + ")";
            std::string piece;
            if (m.degree() == 0) {
                piece = cs;
            } else if (cs == "1") {
                piece = m.to_string();
            } else if (cs == "-1") {
                piece = "-" + m.to_string();
            } else {
                piece = cs + "*" + m.to_string();
            }
            if (out.empty()) {
                out = piece;
            } else if (piece[0] == '-') {
                out += " - " + piece.substr(1);
            } else {
                out += " + " + piece;
            }
        }
        return out;
    }

private:
    BasicHomPoly& accumulate(const BasicHomPoly& o, bool negate) {
        if (o.is_zero()) return *this;
        if (is_zero() && degree_ != o.degree_) degree_ = o.degree_;
        if (o.degree_ != degree_) throw std::invalid_argument("HomPoly: adding forms of different degree");
        std::vector<Term> merged;
        merged.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
                merged.push_back(std::move(terms_[i++]));
            } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
                merged.emplace_back(o.terms_[j].first, negate ? -o.terms_[j].second : o.terms_[j].second);
                ++j;
            } else {
                F c = terms_[i].second;
                if (negate) c -= o.terms_[j].second;
                else c += o.terms_[j].second;
                if (!jacsyz::is_zero(c)) merged.emplace_back(terms_[i].first, std::move(c));
                ++i;
                ++j;
            }
        }
        terms_ = std::move(merged);
        return *this;
    }

    int degree_ = 0;
    std::vector<Term> terms_;
};

using HomPoly = BasicHomPoly<Rat>;
using CycloPoly = BasicHomPoly<Cyclo>;

/// Coefficient-wise embedding of a rational form into Q(zeta).
inline CycloPoly to_cyclo(const HomPoly& p) {
    std::vector<CycloPoly::Term> terms;
    for (const auto& [m, c] : p.terms()) terms.emplace_back(m, Cyclo(c));
    return CycloPoly::from_terms(p.degree(), terms);
}

/// Inverse of to_cyclo when every coefficient is rational.
inline std::optional<HomPoly> to_rational(const CycloPoly& p) {
    std::vector<HomPoly::Term> terms;
    for (const auto& [m, c] : p.terms()) {
        if (!c.is_rational()) return std::nullopt;
        terms.emplace_back(m, c.rational_part());
    }
    return HomPoly::from_terms(p.degree(), terms);
}

/// Euler identity check: x f_x + y f_y + z f_z == deg(f) * f.
template <class F>
bool euler_identity_holds(const BasicHomPoly<F>& f) {
    if (f.degree() < 1) return true;
    const auto g = f.gradient();
    BasicHomPoly<F> lhs(f.degree());
    for (int v = 0; v < 3; ++v) lhs += BasicHomPoly<F>::variable(static_cast<Var>(v)) * g[v];
    return lhs == f * F(static_cast<long>(f.degree()));
}

}  // namespace jacsyz
