#include "jacsyz/modp/primes.hpp"

#include "jacsyz/modp/kernels.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace jacsyz::modp {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint32_t q = 3; static_cast<std::uint64_t>(q) * q <= n; q += 2)
        if (n % q == 0) return false;
    return true;
}

std::uint32_t nth_prime(int conductor, std::size_t i) {
    if (conductor < 1) throw std::invalid_argument("conductor must be positive");
    static std::mutex mu;
    static std::map<int, std::vector<std::uint32_t>> cache;
    std::lock_guard lock(mu);
    auto& list = cache[conductor];
    const std::uint32_t step = conductor % 2 == 0 ? conductor : 2 * conductor;
    std::uint32_t cand;
    if (list.empty()) {
        // largest value below 2^26 congruent to 1 mod step
        cand = (kMaxPrime - 1) - ((kMaxPrime - 2) % step);
    } else {
        cand = list.back() - step;
    }
    while (list.size() <= i) {
        if (cand < 1000) throw std::runtime_error("ran out of word-size primes");
        if (is_prime(cand)) list.push_back(cand);
        cand -= step;
    }
    return list[i];
}

std::uint32_t primitive_root(std::uint32_t p) {
    if (p == 2) return 1;
    std::vector<std::uint32_t> factors;
    std::uint32_t n = p - 1;
    for (std::uint32_t q = 2; static_cast<std::uint64_t>(q) * q <= n; ++q) {
        if (n % q == 0) {
            factors.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) factors.push_back(n);
    const Modulus m(p);
    for (std::uint32_t g = 2; g < p; ++g) {
        bool ok = true;
        for (auto q : factors)
            if (m.pow(g, (p - 1) / q) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root");
}

std::vector<std::uint32_t> roots_of_unity(std::uint32_t p, int n) {
    if ((p - 1) % static_cast<std::uint32_t>(n) != 0) throw std::invalid_argument("p is not 1 mod n");
    const Modulus m(p);
    const std::uint32_t w = m.pow(primitive_root(p), (p - 1) / n);
    std::vector<std::uint32_t> out;
    for (int e = 1; e <= n; ++e)
        if (std::gcd(e, n) == 1) out.push_back(m.pow(w, e % n));
    return out;
}

}  // namespace jacsyz::modp
