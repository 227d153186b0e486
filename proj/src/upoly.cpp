#include "jacsyz/upoly.hpp"

#include <stdexcept>

namespace jacsyz {

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const Rat& c, int k) {
    std::vector<Rat> v(static_cast<std::size_t>(k) + 1, Rat(0));
    v[k] = c;
    return UPoly(std::move(v));
}

void UPoly::trim() {
    while (!c_.empty() && jacsyz::is_zero(c_.back())) c_.pop_back();
}

Rat UPoly::eval(const Rat& t) const {
    Rat acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
    return UPoly(std::move(v));
}

UPoly UPoly::monic() const {
    if (is_zero()) return {};
    UPoly r = *this;
    const Rat inv = 1 / lead();
    for (auto& x : r.c_) x *= inv;
    return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
    return UPoly(std::move(v));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (!is_zero(a.c_[i]))
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(v));
}

std::string UPoly::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (jacsyz::is_zero(c_[i])) continue;
        if (!out.empty()) out += " + ";
        out += "(" + jacsyz::to_string(c_[i]) + ")";
        if (i > 0) out += "*t^" + std::to_string(i);
    }
    return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rat> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {UPoly(), a};
    std::vector<Rat> q(static_cast<std::size_t>(a.degree() - db) + 1, Rat(0));
    const Rat inv = 1 / b.lead();
    for (int i = a.degree(); i >= db; --i) {
        if (is_zero(r[i])) continue;
        const Rat f = r[i] * inv;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeffs()[j];
    }
    r.resize(db);
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

UPoly squarefree_part(const UPoly& a) {
    if (a.degree() <= 0) return a.is_zero() ? a : UPoly::constant(1);
    const UPoly g = gcd(a, a.derivative());
    return divmod(a, g).first.monic();
}

bool is_squarefree(const UPoly& a) {
    if (a.degree() <= 0) return true;
    return gcd(a, a.derivative()).degree() == 0;
}

Rat resultant(const UPoly& a0, const UPoly& b0) {
    if (a0.is_zero() || b0.is_zero()) return 0;
    UPoly a = a0, b = b0;
    Rat acc = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) acc = -acc;
    }
    // Res(a, b) = (-1)^{deg a deg b} lc(b)^{deg a - deg r} Res(b, r)
    while (b.degree() > 0) {
        UPoly r = divmod(a, b).second;
        if (r.is_zero()) return 0;
        const int da = a.degree(), db = b.degree(), dr = r.degree();
        if ((da % 2 == 1) && (db % 2 == 1)) acc = -acc;
        Rat lc = b.lead(), pw = 1;
        for (int i = 0; i < da - dr; ++i) pw *= lc;
        acc *= pw;
        a = std::move(b);
        b = std::move(r);
    }
    // b is a nonzero constant: Res(a, c) = c^{deg a}
    Rat pw = 1;
    for (int i = 0; i < a.degree(); ++i) pw *= b.lead();
    return acc * pw;
}

UPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: length mismatch");
    const std::size_t n = xs.size();
    std::vector<Rat> dd = ys;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            const Rat den = xs[i] - xs[i - level];
            if (is_zero(den)) throw std::invalid_argument("interpolate: repeated node");
            dd[i] = (dd[i] - dd[i - 1]) / den;
        }
    UPoly acc;
    for (std::size_t i = n; i-- > 0;) acc = acc * UPoly({-xs[i], Rat(1)}) + UPoly::constant(dd[i]);
    return acc;
}

int multiplicity_sum(UPoly p, const UPoly& roots) {
    const UPoly s = squarefree_part(roots);
    int total = 0;
    while (true) {
        const UPoly g = gcd(p, s);
        if (g.degree() <= 0) break;
        total += g.degree();
        p = divmod(p, g).first;
    }
    return total;
}

}  // namespace jacsyz
