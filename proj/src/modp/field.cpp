#include "jacsyz/modp/field.hpp"

#include "jacsyz/modp/matrix.hpp"
#include "jacsyz/modp/primes.hpp"

#include <stdexcept>

namespace jacsyz::modp {

PrimeContext::PrimeContext(int conductor, std::size_t prime_index)
    : conductor_(conductor), phi_(euler_phi(conductor)), mod_(nth_prime(conductor, prime_index)) {
    const auto roots = roots_of_unity(mod_.p, conductor);
    powers_.assign(phi_, std::vector<std::uint32_t>(phi_, 1));
    for (int e = 0; e < phi_; ++e)
        for (int t = 1; t < phi_; ++t) powers_[e][t] = mod_.mul(powers_[e][t - 1], roots[e]);

    ModMatrix aug(phi_, 2 * phi_, mod_.p);
    for (int e = 0; e < phi_; ++e) {
        for (int t = 0; t < phi_; ++t) aug.set(e, t, powers_[e][t]);
        aug.set(e, phi_ + e, 1);
    }
    const auto piv = aug.rref();
    if (static_cast<int>(piv.size()) != phi_ || (phi_ > 0 && piv.back() != static_cast<std::size_t>(phi_ - 1)))
        throw std::logic_error("singular Vandermonde matrix");
    vinv_.assign(phi_, std::vector<std::uint32_t>(phi_));
    for (int t = 0; t < phi_; ++t)
        for (int e = 0; e < phi_; ++e) vinv_[t][e] = aug.at(t, phi_ + e);
}

std::optional<std::uint32_t> PrimeContext::reduce(const Rat& q, int) const { return reduce_mod(q, mod_.p); }

std::optional<std::uint32_t> PrimeContext::reduce(const Cyclo& a, int emb) const {
    if (a.is_rational()) return reduce_mod(a.rational_part(), mod_.p);
    const Cyclo b = a.conductor() == conductor_ ? a : a.embed(conductor_);
    const auto& c = b.coeffs();
    std::uint32_t acc = 0;
    for (int t = 0; t < phi_ && t < static_cast<int>(c.size()); ++t) {
        if (is_zero(c[t])) continue;
        const auto r = reduce_mod(c[t], mod_.p);
        if (!r) return std::nullopt;
        acc = mod_.add(acc, mod_.mul(*r, powers_[emb][t]));
    }
    return acc;
}

std::vector<std::uint32_t> PrimeContext::coordinates(const std::vector<std::uint32_t>& images) const {
    if (static_cast<int>(images.size()) != phi_) throw std::invalid_argument("coordinates: need one image per embedding");
    std::vector<std::uint32_t> out(phi_, 0);
    for (int t = 0; t < phi_; ++t)
        for (int e = 0; e < phi_; ++e) out[t] = mod_.add(out[t], mod_.mul(vinv_[t][e], images[e]));
    return out;
}

}  // namespace jacsyz::modp
