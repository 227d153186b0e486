#include "jacsyz/modp/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace jacsyz::modp {

ModMatrix::ModMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), mod_(p), data_(rows * cols, 0.0) {
    if (p < 2 || p >= kMaxPrime) throw std::invalid_argument("modulus out of range");
}

std::vector<std::size_t> ModMatrix::echelonize(const KernelTable& k) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && row(piv)[c] == 0.0) ++piv;
        if (piv == rows_) continue;
        if (piv != r) std::swap_ranges(row(piv) + c, row(piv) + cols_, row(r) + c);
        const std::uint32_t inv = mod_.inv(at(r, c));
        if (inv != 1) k.scale(row(r) + c, inv, cols_ - c, mod_);
        for (std::size_t i = r + 1; i < rows_; ++i) {
            const double f = row(i)[c];
            if (f != 0.0) k.submul(row(i) + c, row(r) + c, f, cols_ - c, mod_);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

void ModMatrix::back_substitute(const std::vector<std::size_t>& pivots, const KernelTable& k) {
    for (std::size_t r = pivots.size(); r-- > 0;) {
        const std::size_t c = pivots[r];
        for (std::size_t i = 0; i < r; ++i) {
            const double f = row(i)[c];
            if (f != 0.0) k.submul(row(i) + c, row(r) + c, f, cols_ - c, mod_);
        }
    }
}

std::vector<std::size_t> ModMatrix::rref(const KernelTable& k) {
    auto pivots = echelonize(k);
    back_substitute(pivots, k);
    return pivots;
}

std::vector<std::vector<std::uint32_t>> kernel_from_rref(const ModMatrix& m, const std::vector<std::size_t>& pivots) {
    const std::size_t n = m.cols();
    std::vector<char> is_pivot(n, 0);
    for (auto c : pivots) is_pivot[c] = 1;
    std::vector<std::vector<std::uint32_t>> out;
    const Modulus& mod = m.modulus();
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<std::uint32_t> v(n, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = mod.neg(m.at(r, f));
        out.push_back(std::move(v));
    }
    return out;
}

std::size_t rank_mod(ModMatrix m) { return m.echelonize().size(); }

}  // namespace jacsyz::modp
