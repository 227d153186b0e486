#include "jacsyz/linalg.hpp"

namespace jacsyz {

RrefResult<Rat> rref_fraction_free(const RatMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    // integer rows: clear denominators row by row
    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < cols; ++j) {
            const BigInt& den = m(i, j).get_den();
            if (den != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        }
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }

    std::vector<std::size_t> pivots;
    BigInt prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        const BigInt& pv = a[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const BigInt f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) {
                BigInt t = pv * a[i][j] - f * a[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(t);
            }
            // columns before c are already zero in row i
        }
        // entries left of c in the pivot row are zero; later Bareiss steps
        // divide only rows below, so row r is final
        prev = pv;
        pivots.push_back(c);
        ++r;
    }

    RatMatrix form(r, cols);
    for (std::size_t i = 0; i < r; ++i) {
        const BigInt& lead = a[i][pivots[i]];
        for (std::size_t j = 0; j < cols; ++j)
            if (a[i][j] != 0) form(i, j) = make_rat(a[i][j], lead);
    }
    for (std::size_t i = r; i-- > 0;) {
        const std::size_t c = pivots[i];
        for (std::size_t k = 0; k < i; ++k) {
            if (is_zero(form(k, c))) continue;
            const Rat f = form(k, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!is_zero(form(i, j))) form(k, j) -= f * form(i, j);
        }
    }
    return {std::move(form), r, std::move(pivots)};
}

}  // namespace jacsyz
