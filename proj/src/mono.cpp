#include "jacsyz/mono.hpp"

#include <stdexcept>

namespace jacsyz {

std::vector<Mono> monomial_basis(int k) {
    if (k < 0) throw std::invalid_argument("monomial_basis: negative degree");
    std::vector<Mono> out;
    out.reserve(dim_s(k));
    for (int a = k; a >= 0; --a)
        for (int b = k - a; b >= 0; --b) out.push_back(mono(a, b, k - a - b));
    return out;
}

std::string Mono::to_string() const {
    static const char* names[3] = {"x", "y", "z"};
    std::string out;
    for (int v = 0; v < 3; ++v) {
        if (e[v] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[v];
        if (e[v] > 1) out += "^" + std::to_string(e[v]);
    }
    return out.empty() ? "1" : out;
}

}  // namespace jacsyz
