#pragma once

#include "jacsyz/rat.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace jacsyz::modp {

/// Rational number n/d with |n|, |d| <= sqrt(m/2) and n/d = a mod m, if any.
std::optional<Rat> rational_reconstruction(const BigInt& a, const BigInt& m);

/// Chinese remaindering of a fixed-length vector of residues.
class CrtVector {
public:
    explicit CrtVector(std::size_t n) : values_(n, 0), modulus_(1) {}

    std::size_t size() const { return values_.size(); }
    const BigInt& modulus() const { return modulus_; }
    std::size_t prime_count() const { return primes_; }

    void add(std::uint32_t p, const std::vector<std::uint32_t>& residues);
    /// All entries reconstructed, or nullopt when any entry fails.
    std::optional<std::vector<Rat>> reconstruct() const;

private:
    std::vector<BigInt> values_;
    BigInt modulus_;
    std::size_t primes_ = 0;
};

/// Residue of a rational mod p, or nullopt if p divides the denominator.
std::optional<std::uint32_t> reduce_mod(const Rat& q, std::uint32_t p);

}  // namespace jacsyz::modp
