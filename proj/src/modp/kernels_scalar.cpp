#include "jacsyz/modp/kernels.hpp"

#include <stdexcept>

namespace jacsyz::modp {

std::uint32_t Modulus::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint64_t base = a % p, acc = 1;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

std::uint32_t Modulus::inv(std::uint32_t a) const {
    if (a % p == 0) throw std::domain_error("modular inverse of zero");
    return pow(a, p - 2);
}

namespace {

// Reference path: plain 64-bit integer arithmetic, independent of the
// floating-point reduction used by the vector kernels.
void submul_scalar(double* dst, const double* src, double c, std::size_t n, const Modulus& m) {
    const std::uint64_t cc = static_cast<std::uint64_t>(c);
    const std::uint64_t p = m.p;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t s = static_cast<std::uint64_t>(src[i]);
        if (s == 0) continue;
        const std::uint64_t t = cc * s % p;
        const std::uint64_t d = static_cast<std::uint64_t>(dst[i]);
        dst[i] = static_cast<double>(d >= t ? d - t : d + p - t);
    }
}

void scale_scalar(double* row, double c, std::size_t n, const Modulus& m) {
    const std::uint64_t cc = static_cast<std::uint64_t>(c);
    for (std::size_t i = 0; i < n; ++i)
        row[i] = static_cast<double>(cc * static_cast<std::uint64_t>(row[i]) % m.p);
}

}  // namespace

const KernelTable& scalar_kernels() {
    static const KernelTable table{"scalar", &submul_scalar, &scale_scalar};
    return table;
}

}  // namespace jacsyz::modp
