#pragma once

#include "jacsyz/rat.hpp"

#include <string>
#include <utility>
#include <vector>

namespace jacsyz {

/// Univariate polynomial over Q, coefficients from the constant term up.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rat> coeffs);
    static UPoly constant(const Rat& c) { return UPoly({c}); }
    static UPoly monomial(const Rat& c, int k);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int k) const { return k >= 0 && k <= degree() ? c_[k] : Rat(0); }
    const Rat& lead() const { return c_.back(); }

    Rat eval(const Rat& t) const;
    UPoly derivative() const;
    UPoly monic() const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    std::string to_string() const;

private:
    void trim();
    std::vector<Rat> c_;
};

/// (quotient, remainder); divisor must be nonzero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd (zero if both are zero).
UPoly gcd(UPoly a, UPoly b);
/// Product of the distinct irreducible factors, monic.
UPoly squarefree_part(const UPoly& a);
bool is_squarefree(const UPoly& a);
/// Resultant via the Euclidean remainder sequence.
Rat resultant(const UPoly& a, const UPoly& b);
/// Polynomial of degree < n through (x_i, y_i), Newton form.
UPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);
/// Sum over the roots of `roots` (taken without multiplicity) of their
/// multiplicity in p.
int multiplicity_sum(UPoly p, const UPoly& roots);

}  // namespace jacsyz
