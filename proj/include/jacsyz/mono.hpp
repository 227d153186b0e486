#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace jacsyz {

/// x^a y^b z^c.
struct Mono {
    std::array<int, 3> e{0, 0, 0};

    int degree() const { return e[0] + e[1] + e[2]; }
    int operator[](int v) const { return e[v]; }

    friend Mono operator*(const Mono& p, const Mono& q) {
        return Mono{{p.e[0] + q.e[0], p.e[1] + q.e[1], p.e[2] + q.e[2]}};
    }
    bool divides(const Mono& o) const { return e[0] <= o.e[0] && e[1] <= o.e[1] && e[2] <= o.e[2]; }
    friend bool operator==(const Mono& p, const Mono& q) { return p.e == q.e; }
    friend bool operator!=(const Mono& p, const Mono& q) { return p.e != q.e; }
    /// Graded lexicographic with x > y > z: "p < q" means p comes first,
    /// i.e. p is the larger monomial. Matches monomial_basis() order.
    friend bool operator<(const Mono& p, const Mono& q) {
        if (p.degree() != q.degree()) return p.degree() > q.degree();
        return p.e > q.e;
    }

    std::string to_string() const;
};

inline Mono mono(int a, int b, int c) { return Mono{{a, b, c}}; }

/// C(k+2, 2), the dimension of S_k; 0 for k < 0.
inline std::size_t dim_s(int k) {
    return k < 0 ? 0 : static_cast<std::size_t>(k + 1) * static_cast<std::size_t>(k + 2) / 2;
}

/// Position of a degree-k monomial inside monomial_basis(k).
inline std::size_t mono_index(const Mono& m) {
    const std::size_t r = static_cast<std::size_t>(m.degree() - m.e[0]);
    return r * (r + 1) / 2 + static_cast<std::size_t>(m.e[2]);
}

/// All monomials of degree k, largest first (x^k, x^{k-1}y, x^{k-1}z, ...).
std::vector<Mono> monomial_basis(int k);

}  // namespace jacsyz
