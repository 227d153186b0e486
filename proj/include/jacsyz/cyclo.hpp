#pragma once

#include "jacsyz/rat.hpp"

#include <string>
#include <vector>

namespace jacsyz {

/// The cyclotomic field Q(zeta_n), stored in the power basis
/// 1, zeta, ..., zeta^(phi(n)-1). Instances are interned per conductor.
class CycloField {
public:
    static const CycloField& of(int n);

    int conductor() const { return n_; }
    int degree() const { return phi_; }
    /// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
    const std::vector<BigInt>& modulus() const { return modulus_; }
    /// Exponents e in [1, n] coprime to n; zeta -> zeta^e are the embeddings.
    const std::vector<int>& units() const { return units_; }

    /// Folds a coefficient vector of any length into the power basis.
    std::vector<Rat> reduce(const std::vector<Rat>& c) const;

private:
    explicit CycloField(int n);

    int n_ = 1;
    int phi_ = 1;
    std::vector<BigInt> modulus_;
    std::vector<int> units_;
    // power_[j] = zeta^j in the power basis, for j < 2*phi - 1
    std::vector<std::vector<BigInt>> power_;
};

std::vector<BigInt> cyclotomic_polynomial(int n);
int euler_phi(int n);

/// Element of Q(zeta_n). Rational numbers live in conductor 1; mixed
/// arithmetic embeds both operands into the field of the lcm conductor.
class Cyclo {
public:
    Cyclo() : n_(1), c_{Rat(0)} {}
    Cyclo(long v) : n_(1), c_{Rat(v)} {}  // NOLINT(google-explicit-constructor)
    Cyclo(const Rat& v) : n_(1), c_{v} {}  // NOLINT(google-explicit-constructor)
    Cyclo(int n, std::vector<Rat> coeffs);

    /// zeta_n^power, reduced.
    static Cyclo zeta(int n, long power = 1);

    int conductor() const { return n_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Constant coefficient; meaningful when is_rational().
    const Rat& rational_part() const { return c_[0]; }

    /// Embeds into Q(zeta_m); requires conductor() | m.
    Cyclo embed(int m) const;
    Cyclo inverse() const;

    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);
    Cyclo& operator/=(const Cyclo& o) { return *this *= o.inverse(); }

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
    friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }
    Cyclo operator-() const;

    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }
    /// Total order on the coefficient vectors after embedding into a common field.
    friend bool operator<(const Cyclo& a, const Cyclo& b);

    std::string to_string() const;

private:
    int n_;
    std::vector<Rat> c_;
};

inline bool is_zero(const Cyclo& a) { return a.is_zero(); }
inline std::string to_string(const Cyclo& a) { return a.to_string(); }

}  // namespace jacsyz
