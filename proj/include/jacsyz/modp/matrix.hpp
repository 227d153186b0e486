#pragma once

#include "jacsyz/modp/kernels.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace jacsyz::modp {

/// Dense row-major matrix of residues mod p (stored as doubles).
class ModMatrix {
public:
    ModMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Modulus& modulus() const { return mod_; }

    double* row(std::size_t i) { return data_.data() + i * cols_; }
    const double* row(std::size_t i) const { return data_.data() + i * cols_; }
    std::uint32_t at(std::size_t i, std::size_t j) const { return static_cast<std::uint32_t>(row(i)[j]); }
    void set(std::size_t i, std::size_t j, std::uint32_t v) { row(i)[j] = static_cast<double>(v % mod_.p); }
    void add_to(std::size_t i, std::size_t j, std::uint32_t v) { set(i, j, mod_.add(at(i, j), v % mod_.p)); }

    /// Forward elimination with leading ones; rows [0, rank) hold the echelon
    /// form afterwards, the rest are zero. Returns the pivot columns.
    std::vector<std::size_t> echelonize(const KernelTable& k = active_kernels());
    /// Clears entries above pivots; call after echelonize with its result.
    void back_substitute(const std::vector<std::size_t>& pivots, const KernelTable& k = active_kernels());
    /// Reduced row echelon form in place.
    std::vector<std::size_t> rref(const KernelTable& k = active_kernels());

private:
    std::size_t rows_, cols_;
    Modulus mod_;
    std::vector<double> data_;
};

/// Kernel basis (as rows) of a matrix already in reduced row echelon form:
/// one vector per free column, with a 1 in that column.
std::vector<std::vector<std::uint32_t>> kernel_from_rref(const ModMatrix& m, const std::vector<std::size_t>& pivots);

std::size_t rank_mod(ModMatrix m);

}  // namespace jacsyz::modp
