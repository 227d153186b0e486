#pragma once

// Row kernels for elimination over F_p. Residues are stored as doubles in
// [0, p) with p < 2^26, so every product of two residues is exact in a
// double and a fused multiply-add recovers the remainder exactly.

#include <cstddef>
#include <cstdint>
#include <string>

namespace jacsyz::modp {

inline constexpr std::uint32_t kMaxPrime = 1u << 26;

struct Modulus {
    std::uint32_t p = 0;
    double pd = 0.0;
    double pinv = 0.0;

    Modulus() = default;
    explicit Modulus(std::uint32_t prime) : p(prime), pd(prime), pinv(1.0 / static_cast<double>(prime)) {}

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        const std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p - b; }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t inv(std::uint32_t a) const;
};

/// dst[i] = dst[i] - c * src[i] (mod p) for i in [0, n).
using SubmulFn = void (*)(double* dst, const double* src, double c, std::size_t n, const Modulus& m);
/// row[i] = c * row[i] (mod p).
using ScaleFn = void (*)(double* row, double c, std::size_t n, const Modulus& m);

struct KernelTable {
    const char* name;
    SubmulFn submul;
    ScaleFn scale;
};

const KernelTable& scalar_kernels();
/// nullptr when the binary was built without AVX2 support or the CPU lacks it.
const KernelTable* avx2_kernels();

/// Kernels selected at first use: AVX2+FMA when the CPU reports it, scalar
/// otherwise. JACSYZ_SIMD=scalar in the environment forces the reference path.
const KernelTable& active_kernels();
/// Overrides the selection ("scalar" or "avx2"); returns false if unavailable.
bool select_kernels(const std::string& name);

}  // namespace jacsyz::modp
