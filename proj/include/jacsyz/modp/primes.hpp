#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace jacsyz::modp {

bool is_prime(std::uint32_t n);

/// i-th prime (0-based, descending from 2^26) with p = 1 mod conductor.
/// Deterministic and cached per conductor.
std::uint32_t nth_prime(int conductor, std::size_t i);

/// A generator of the multiplicative group of F_p.
std::uint32_t primitive_root(std::uint32_t p);

/// Exponents-coprime images of a fixed primitive n-th root of unity in F_p:
/// element t is w^(units[t]) for the units of Z/n in increasing order.
/// Requires p = 1 mod n.
std::vector<std::uint32_t> roots_of_unity(std::uint32_t p, int n);

}  // namespace jacsyz::modp
