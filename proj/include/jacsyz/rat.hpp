#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace jacsyz {

/// Exact rational number. GMP keeps it in lowest terms with a positive
/// denominator as long as every constructor goes through make_rat().
using Rat = mpq_class;
using BigInt = mpz_class;

inline Rat make_rat(const BigInt& num, const BigInt& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(BigInt(num), BigInt(den)); }

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }
inline bool is_one(const Rat& q) { return q == 1; }

/// "p/q" for non-integers, "p" otherwise.
inline std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }

/// Parses "p", "-p" or "p/q"; throws std::invalid_argument on malformed text.
Rat parse_rat(const std::string& text);

}  // namespace jacsyz
