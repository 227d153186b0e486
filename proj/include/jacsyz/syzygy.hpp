#pragma once

#include "jacsyz/hompoly.hpp"
#include "jacsyz/linalg.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace jacsyz {

/// (a, b, c) with a f_x + b f_y + c f_z = 0, all of degree `degree`.
template <class F>
struct Syzygy {
    int degree = 0;
    std::array<BasicHomPoly<F>, 3> comps;

    /// Coordinates in S_k^3: index v * dim_s(k) + mono_index(m).
    std::vector<F> coords() const;
    static Syzygy from_coords(int k, const std::vector<F>& v);
    bool annihilates(const BasicHomPoly<F>& f) const;
    /// Same as annihilates() but throws std::logic_error when it fails.
    void assert_annihilates(const BasicHomPoly<F>& f) const;
    std::string to_string() const;
};

enum class CurveClass { free, nearly_free, plus_one_generated, m_syzygy, degenerate };

std::string to_string(CurveClass c);

struct DegreeStats {
    int k = 0;
    std::size_t dim_d0 = 0;          // dim D0_k
    std::size_t dim_image = 0;       // dim S_1 * D0_{k-1}
    std::size_t new_generators = 0;  // minimal generators in degree k
    std::size_t primes_used = 0;
};

template <class F>
struct ExponentProfile {
    int d = 0;
    int kmax = 0;
    std::vector<int> exponents;
    std::vector<Syzygy<F>> generators;
    CurveClass classification = CurveClass::degenerate;
    int type_t = 0;
    bool complete = true;  // false when generators still appear at kmax
    std::vector<DegreeStats> table;

    int m() const { return static_cast<int>(exponents.size()); }
    int exponent(int i) const { return exponents.at(static_cast<std::size_t>(i - 1)); }
};

CurveClass classify(int d, const std::vector<int>& exponents);

struct EngineOptions {
    std::size_t max_primes = 400;
};

/// Degree-by-degree computation of D0(f). Dimensions are computed modulo
/// word-size primes and certified exactly: new generators are lifted by
/// Chinese remaindering and rational reconstruction, then checked to be
/// syzygies and independent of the lower-degree part via lifted functionals.
template <class F>
class SyzygyEngine {
public:
    explicit SyzygyEngine(BasicHomPoly<F> f, EngineOptions opts = {});
    ~SyzygyEngine();
    SyzygyEngine(SyzygyEngine&&) noexcept;
    SyzygyEngine& operator=(SyzygyEngine&&) noexcept;

    const BasicHomPoly<F>& polynomial() const { return f_; }
    int degree() const { return d_; }

    /// Certified data for degree k (computes all lower degrees first).
    const DegreeStats& stats(int k);
    std::size_t dim_d0(int k) { return stats(k).dim_d0; }
    /// dim M(f)_j = dim S_j - dim (J_f)_j.
    long hilbert_milnor(int j);
    /// Generators found so far, by increasing degree.
    const std::vector<Syzygy<F>>& generators() const { return gens_; }
    int computed_up_to() const { return static_cast<int>(stats_.size()) - 1; }

    ExponentProfile<F> profile(int kmax);

private:
    struct Impl;
    void certify(int k);

    BasicHomPoly<F> f_;
    int d_ = 0;
    EngineOptions opts_;
    std::vector<DegreeStats> stats_;
    std::vector<Syzygy<F>> gens_;
    std::unique_ptr<Impl> impl_;
};

/// D0_k as the kernel of the exact pairing matrix (no modular arithmetic).
template <class F>
Subspace<F> syzygy_space(const BasicHomPoly<F>& f, int k);

/// Columns m * f_v for v in {x,y,z}, m in monomial_basis(k), in the basis of S_{k+d-1}.
template <class F>
Matrix<F> pairing_matrix(const BasicHomPoly<F>& f, int k);

template <class F>
ExponentProfile<F> exponent_profile(const BasicHomPoly<F>& f, int kmax);

/// Default search bound: max(3d - 6, d) for curves, d for line arrangements.
int default_kmax(int d, bool arrangement);

template <class F>
int mdr(const BasicHomPoly<F>& f);

}  // namespace jacsyz
