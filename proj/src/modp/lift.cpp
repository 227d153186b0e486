#include "jacsyz/modp/lift.hpp"

#include "jacsyz/modp/kernels.hpp"

#include <stdexcept>

namespace jacsyz::modp {

std::optional<Rat> rational_reconstruction(const BigInt& a, const BigInt& m) {
    BigInt bound;
    {
        BigInt half = m / 2;
        mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    }
    BigInt r0 = m, r1 = a % m;
    if (r1 < 0) r1 += m;
    BigInt t0 = 0, t1 = 1;
    while (r1 > bound) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        BigInt t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (abs(t1) > bound || t1 == 0) return std::nullopt;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) return std::nullopt;
    return make_rat(r1, t1);
}

void CrtVector::add(std::uint32_t p, const std::vector<std::uint32_t>& residues) {
    if (residues.size() != values_.size()) throw std::invalid_argument("residue vector length mismatch");
    const Modulus m(p);
    const std::uint32_t minv = m.inv(static_cast<std::uint32_t>(mpz_fdiv_ui(modulus_.get_mpz_t(), p)));
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const std::uint32_t cur = static_cast<std::uint32_t>(mpz_fdiv_ui(values_[i].get_mpz_t(), p));
        const std::uint32_t delta = m.mul(m.sub(residues[i] % p, cur), minv);
        if (delta != 0) values_[i] += modulus_ * delta;
    }
    modulus_ *= p;
    ++primes_;
}

std::optional<std::vector<Rat>> CrtVector::reconstruct() const {
    std::vector<Rat> out;
    out.reserve(values_.size());
    for (const auto& v : values_) {
        if (v == 0) {
            out.emplace_back(0);
            continue;
        }
        auto q = rational_reconstruction(v, modulus_);
        if (!q) return std::nullopt;
        out.push_back(std::move(*q));
    }
    return out;
}

std::optional<std::uint32_t> reduce_mod(const Rat& q, std::uint32_t p) {
    const std::uint32_t den = static_cast<std::uint32_t>(mpz_fdiv_ui(q.get_den_mpz_t(), p));
    if (den == 0) return std::nullopt;
    const std::uint32_t num = static_cast<std::uint32_t>(mpz_fdiv_ui(q.get_num_mpz_t(), p));
    const Modulus m(p);
    return m.mul(num, m.inv(den));
}

}  // namespace jacsyz::modp
