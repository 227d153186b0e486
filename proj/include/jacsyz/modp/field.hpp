#pragma once

// Reduction of exact field elements (Rat or Cyclo) modulo a prime, under each
// embedding of Q(zeta_N) into F_p, and reassembly from lifted coordinates.

#include "jacsyz/cyclo.hpp"
#include "jacsyz/modp/kernels.hpp"
#include "jacsyz/modp/lift.hpp"
#include "jacsyz/rat.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace jacsyz::modp {

/// Prime p = 1 mod N together with the phi(N) images of zeta_N.
class PrimeContext {
public:
    PrimeContext(int conductor, std::size_t prime_index);

    std::uint32_t prime() const { return mod_.p; }
    const Modulus& modulus() const { return mod_; }
    int conductor() const { return conductor_; }
    /// Number of embeddings, phi(N).
    int embeddings() const { return phi_; }

    std::optional<std::uint32_t> reduce(const Rat& q, int emb) const;
    std::optional<std::uint32_t> reduce(const Cyclo& a, int emb) const;

    /// Power-basis coordinates (length phi) mod p from the phi embedded images.
    std::vector<std::uint32_t> coordinates(const std::vector<std::uint32_t>& images) const;

private:
    int conductor_;
    int phi_;
    Modulus mod_;
    std::vector<std::vector<std::uint32_t>> powers_;  // [emb][t] = omega_emb^t, t < phi
    std::vector<std::vector<std::uint32_t>> vinv_;    // inverse Vandermonde
};

inline int conductor_of(const Rat&) { return 1; }
inline int conductor_of(const Cyclo& a) { return a.is_rational() ? 1 : a.conductor(); }

/// Element of the field with the given power-basis coordinates.
template <class F>
F assemble(int conductor, const Rat* coords);

template <>
inline Rat assemble<Rat>(int, const Rat* coords) {
    return coords[0];
}

template <>
inline Cyclo assemble<Cyclo>(int conductor, const Rat* coords) {
    if (conductor == 1) return Cyclo(coords[0]);
    const int phi = euler_phi(conductor);
    return Cyclo(conductor, std::vector<Rat>(coords, coords + phi));
}

}  // namespace jacsyz::modp
