#include "jacsyz/syzygy.hpp"

#include "jacsyz/modp/field.hpp"
#include "jacsyz/modp/lift.hpp"
#include "jacsyz/modp/matrix.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace jacsyz {

template <class F>
std::vector<F> Syzygy<F>::coords() const {
    const std::size_t n = dim_s(degree);
    std::vector<F> v(3 * n, F(0));
    for (int c = 0; c < 3; ++c)
        for (const auto& [m, x] : comps[c].terms()) v[c * n + mono_index(m)] = x;
    return v;
}

template <class F>
Syzygy<F> Syzygy<F>::from_coords(int k, const std::vector<F>& v) {
    const std::size_t n = dim_s(k);
    if (v.size() != 3 * n) throw std::invalid_argument("Syzygy::from_coords: wrong length");
    Syzygy s;
    s.degree = k;
    for (int c = 0; c < 3; ++c)
        s.comps[c] = BasicHomPoly<F>::from_dense(k, std::vector<F>(v.begin() + c * n, v.begin() + (c + 1) * n));
    return s;
}

template <class F>
bool Syzygy<F>::annihilates(const BasicHomPoly<F>& f) const {
    const auto g = f.gradient();
    BasicHomPoly<F> acc(degree + f.degree() - 1);
    for (int v = 0; v < 3; ++v) acc += comps[v] * g[v];
    return acc.is_zero();
}

template <class F>
void Syzygy<F>::assert_annihilates(const BasicHomPoly<F>& f) const {
    if (!annihilates(f)) throw std::logic_error("not a Jacobian syzygy: " + to_string());
}

template <class F>
std::string Syzygy<F>::to_string() const {
    return "(" + comps[0].to_string() + ", " + comps[1].to_string() + ", " + comps[2].to_string() + ")";
}

std::string to_string(CurveClass c) {
    switch (c) {
        case CurveClass::free: return "free";
        case CurveClass::nearly_free: return "nearly_free";
        case CurveClass::plus_one_generated: return "plus_one_generated";
        case CurveClass::m_syzygy: return "m_syzygy";
        case CurveClass::degenerate: return "degenerate";
    }
    return "degenerate";
}

CurveClass classify(int d, const std::vector<int>& e) {
    const std::size_t m = e.size();
    if (m < 2) return CurveClass::degenerate;
    if (m == 2) return CurveClass::free;
    if (m == 3 && e[0] + e[1] == d) return e[1] == e[2] ? CurveClass::nearly_free : CurveClass::plus_one_generated;
    return CurveClass::m_syzygy;
}

int default_kmax(int d, bool arrangement) { return arrangement ? d : std::max(3 * d - 6, d); }

namespace {

using Residue = std::uint32_t;

struct Image {
    std::size_t r = 0;
    std::vector<std::size_t> ph;
    std::size_t c = 0;
    std::vector<std::size_t> leads;
    std::vector<std::vector<Residue>> rows;  // c x ncols, reduced echelon
    std::vector<std::vector<Residue>> cert;  // c x r, cert[j][i] = RREF(H)[i][leads[j]]
};

// < 0 when a is closer to the characteristic-zero answer than b
int compare_shape(const Image& a, const Image& b) {
    if (a.r != b.r) return a.r > b.r ? -1 : 1;
    if (a.ph != b.ph) return a.ph < b.ph ? -1 : 1;
    if (a.c != b.c) return a.c < b.c ? -1 : 1;
    if (a.leads != b.leads) return a.leads < b.leads ? -1 : 1;
    return 0;
}

}  // namespace

template <class F>
struct SyzygyEngine<F>::Impl {
    struct GenTerm {
        int v;
        Mono m;
        Residue val;
    };
    struct Reduced {
        std::unique_ptr<modp::PrimeContext> ctx;
        bool bad = false;
        std::vector<std::array<std::vector<std::pair<Mono, Residue>>, 3>> grad;  // [emb][v]
        std::vector<std::vector<std::vector<GenTerm>>> gens;                    // [emb][gen]
    };

    int conductor = 1;
    std::array<BasicHomPoly<F>, 3> grad;
    std::map<std::size_t, Reduced> primes;

    Reduced& prime(std::size_t idx, const std::vector<Syzygy<F>>& gens) {
        auto [it, fresh] = primes.try_emplace(idx);
        Reduced& red = it->second;
        if (fresh) {
            red.ctx = std::make_unique<modp::PrimeContext>(conductor, idx);
            const int phi = red.ctx->embeddings();
            red.grad.resize(phi);
            red.gens.resize(phi);
            for (int e = 0; e < phi && !red.bad; ++e)
                for (int v = 0; v < 3 && !red.bad; ++v)
                    for (const auto& [m, c] : grad[v].terms()) {
                        auto r = red.ctx->reduce(c, e);
                        if (!r) {
                            red.bad = true;
                            break;
                        }
                        if (*r) red.grad[e][v].emplace_back(m, *r);
                    }
        }
        if (red.bad) return red;
        const int phi = red.ctx->embeddings();
        for (int e = 0; e < phi && !red.bad; ++e) {
            while (red.gens[e].size() < gens.size()) {
                const auto& g = gens[red.gens[e].size()];
                std::vector<GenTerm> terms;
                for (int v = 0; v < 3 && !red.bad; ++v)
                    for (const auto& [m, c] : g.comps[v].terms()) {
                        auto r = red.ctx->reduce(c, e);
                        if (!r) {
                            red.bad = true;
                            break;
                        }
                        if (*r) terms.push_back({v, m, *r});
                    }
                if (red.bad) break;
                red.gens[e].push_back(std::move(terms));
            }
        }
        return red;
    }

    Image image(Reduced& red, int e, int k, int d, const std::vector<Syzygy<F>>& gens) const {
        const std::uint32_t p = red.ctx->prime();
        const std::size_t n = dim_s(k);
        const std::size_t ncols = 3 * n;
        const auto basis = monomial_basis(k);

        std::size_t hrows = 0;
        for (const auto& g : gens)
            if (g.degree < k) hrows += dim_s(k - g.degree);
        modp::ModMatrix h(hrows, ncols, p);
        std::size_t row = 0;
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            if (gens[gi].degree >= k) continue;
            for (const auto& m : monomial_basis(k - gens[gi].degree)) {
                for (const auto& t : red.gens[e][gi]) h.set(row, t.v * n + mono_index(t.m * m), t.val);
                ++row;
            }
        }
        Image im;
        im.ph = h.echelonize();
        im.r = im.ph.size();

        std::vector<char> in_ph(ncols, 0);
        for (auto c : im.ph) in_ph[c] = 1;
        std::vector<std::size_t> free_cols;
        for (std::size_t c = 0; c < ncols; ++c)
            if (!in_ph[c]) free_cols.push_back(c);

        modp::ModMatrix pair(dim_s(k + d - 1), free_cols.size(), p);
        for (std::size_t q = 0; q < free_cols.size(); ++q) {
            const std::size_t col = free_cols[q];
            const int v = static_cast<int>(col / n);
            const Mono& m = basis[col % n];
            for (const auto& [mm, val] : red.grad[e][v]) pair.add_to(mono_index(m * mm), q, val);
        }
        auto piv = pair.echelonize();
        im.c = free_cols.size() - piv.size();
        if (im.c == 0) return im;

        pair.back_substitute(piv);
        const auto ker = modp::kernel_from_rref(pair, piv);
        modp::ModMatrix g(im.c, ncols, p);
        for (std::size_t j = 0; j < ker.size(); ++j)
            for (std::size_t q = 0; q < free_cols.size(); ++q)
                if (ker[j][q]) g.set(j, free_cols[q], ker[j][q]);
        im.leads = g.rref();
        im.rows.assign(im.c, std::vector<Residue>(ncols));
        for (std::size_t j = 0; j < im.c; ++j)
            for (std::size_t c = 0; c < ncols; ++c) im.rows[j][c] = g.at(j, c);

        h.back_substitute(im.ph);
        im.cert.assign(im.c, std::vector<Residue>(im.r));
        for (std::size_t j = 0; j < im.c; ++j)
            for (std::size_t i = 0; i < im.r; ++i) im.cert[j][i] = h.at(i, im.leads[j]);
        return im;
    }
};

template <class F>
SyzygyEngine<F>::SyzygyEngine(BasicHomPoly<F> f, EngineOptions opts)
    : f_(std::move(f)), d_(f_.degree()), opts_(opts), impl_(std::make_unique<Impl>()) {
    if (d_ < 1 || f_.is_zero()) throw std::invalid_argument("SyzygyEngine: need a nonzero form of positive degree");
    for (const auto& [m, c] : f_.terms()) impl_->conductor = std::lcm(impl_->conductor, modp::conductor_of(c));
    impl_->grad = f_.gradient();
}

template <class F>
SyzygyEngine<F>::~SyzygyEngine() = default;
template <class F>
SyzygyEngine<F>::SyzygyEngine(SyzygyEngine&&) noexcept = default;
template <class F>
SyzygyEngine<F>& SyzygyEngine<F>::operator=(SyzygyEngine&&) noexcept = default;

template <class F>
const DegreeStats& SyzygyEngine<F>::stats(int k) {
    if (k < 0) throw std::invalid_argument("SyzygyEngine::stats: negative degree");
    while (static_cast<int>(stats_.size()) <= k) certify(static_cast<int>(stats_.size()));
    return stats_[k];
}

template <class F>
long SyzygyEngine<F>::hilbert_milnor(int j) {
    if (j < 0) return 0;
    const int k = j - d_ + 1;
    if (k < 0) return static_cast<long>(dim_s(j));
    return static_cast<long>(dim_s(j)) - 3 * static_cast<long>(dim_s(k)) + static_cast<long>(dim_d0(k));
}

template <class F>
void SyzygyEngine<F>::certify(int k) {
    const std::size_t ncols = 3 * dim_s(k);
    const int conductor = impl_->conductor;

    Image best;
    bool have = false;
    std::unique_ptr<modp::CrtVector> crt;
    std::size_t used = 0;

    for (std::size_t idx = 0; idx < opts_.max_primes; ++idx) {
        auto& red = impl_->prime(idx, gens_);
        if (red.bad) continue;
        const int phi = red.ctx->embeddings();
        std::vector<Image> imgs;
        imgs.reserve(phi);
        for (int e = 0; e < phi; ++e) imgs.push_back(impl_->image(red, e, k, d_, gens_));
        bool consistent = true;
        for (int e = 1; e < phi; ++e)
            if (compare_shape(imgs[e], imgs[0]) != 0) consistent = false;
        ++used;
        if (!consistent) continue;
        Image& im = imgs[0];

        if (im.c == 0) {
            // dim_p is an upper bound and rank_p(H) a lower bound for the
            // characteristic-zero values, so one prime settles the degree
            stats_.push_back({k, im.r, im.r, 0, used});
            return;
        }
        if (!have || compare_shape(im, best) < 0) {
            best = im;
            have = true;
            crt = std::make_unique<modp::CrtVector>(best.c * (ncols + best.r) * phi);
        } else if (compare_shape(im, best) > 0) {
            continue;
        }

        const std::size_t c = best.c, r = best.r;
        std::vector<Residue> residues(crt->size());
        std::vector<Residue> images(phi);
        std::size_t entry = 0;
        auto push = [&](auto getter) {
            for (int e = 0; e < phi; ++e) images[e] = getter(imgs[e]);
            const auto coords = red.ctx->coordinates(images);
            for (int t = 0; t < phi; ++t) residues[entry * phi + t] = coords[t];
            ++entry;
        };
        for (std::size_t j = 0; j < c; ++j)
            for (std::size_t col = 0; col < ncols; ++col) push([&](const Image& x) { return x.rows[j][col]; });
        for (std::size_t j = 0; j < c; ++j)
            for (std::size_t i = 0; i < r; ++i) push([&](const Image& x) { return x.cert[j][i]; });
        crt->add(red.ctx->prime(), residues);

        const auto lifted = crt->reconstruct();
        if (!lifted) continue;
        auto value = [&](std::size_t ent) { return modp::assemble<F>(conductor, lifted->data() + ent * phi); };

        std::vector<Syzygy<F>> fresh;
        bool ok = true;
        for (std::size_t j = 0; j < c && ok; ++j) {
            std::vector<F> v(ncols);
            for (std::size_t col = 0; col < ncols; ++col) v[col] = value(j * ncols + col);
            auto s = Syzygy<F>::from_coords(k, v);
            if (!s.annihilates(f_)) ok = false;
            fresh.push_back(std::move(s));
        }
        if (!ok) continue;

        // functionals w_j(v) = v[lead_j] - sum_i cert[j][i] v[ph_i] must vanish on S_1 * D0_{k-1}
        std::vector<std::vector<F>> cert(c, std::vector<F>(r));
        for (std::size_t j = 0; j < c; ++j)
            for (std::size_t i = 0; i < r; ++i) cert[j][i] = value(c * ncols + j * r + i);
        std::vector<int> pivot_row(ncols, -1);
        for (std::size_t i = 0; i < r; ++i) pivot_row[best.ph[i]] = static_cast<int>(i);
        std::vector<int> lead_of(ncols, -1);
        for (std::size_t j = 0; j < c; ++j) lead_of[best.leads[j]] = static_cast<int>(j);

        const std::size_t n = dim_s(k);
        for (const auto& g : gens_) {
            if (g.degree >= k || !ok) continue;
            for (const auto& m : monomial_basis(k - g.degree)) {
                std::vector<F> acc(c, F(0));
                for (int v = 0; v < 3; ++v)
                    for (const auto& [gm, gc] : g.comps[v].terms()) {
                        const std::size_t col = v * n + mono_index(gm * m);
                        if (lead_of[col] >= 0) acc[lead_of[col]] += gc;
                        if (pivot_row[col] >= 0)
                            for (std::size_t j = 0; j < c; ++j)
                                if (!jacsyz::is_zero(cert[j][pivot_row[col]])) acc[j] -= cert[j][pivot_row[col]] * gc;
                    }
                for (const auto& a : acc)
                    if (!jacsyz::is_zero(a)) ok = false;
                if (!ok) break;
            }
        }
        if (!ok) continue;

        for (auto& s : fresh) gens_.push_back(std::move(s));
        stats_.push_back({k, r + c, r, c, used});
        return;
    }
    throw std::runtime_error("syzygy engine: could not certify degree " + std::to_string(k) + " within the prime budget");
}

template <class F>
ExponentProfile<F> SyzygyEngine<F>::profile(int kmax) {
    if (kmax < 0) throw std::invalid_argument("profile: negative kmax");
    stats(kmax);
    ExponentProfile<F> out;
    out.d = d_;
    out.kmax = kmax;
    for (const auto& g : gens_) {
        if (g.degree > kmax) continue;
        out.exponents.push_back(g.degree);
        out.generators.push_back(g);
    }
    out.table.assign(stats_.begin(), stats_.begin() + kmax + 1);
    out.complete = stats_[kmax].new_generators == 0;
    out.classification = classify(d_, out.exponents);
    if (out.exponents.size() >= 2) out.type_t = out.exponents[0] + out.exponents[1] - d_ + 1;
    return out;
}

template <class F>
Matrix<F> pairing_matrix(const BasicHomPoly<F>& f, int k) {
    const int d = f.degree();
    const auto g = f.gradient();
    const std::size_t n = dim_s(k);
    Matrix<F> m(dim_s(k + d - 1), 3 * n);
    const auto basis = monomial_basis(k);
    for (int v = 0; v < 3; ++v)
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& [mm, c] : g[v].terms()) m(mono_index(basis[i] * mm), v * n + i) += c;
    return m;
}

template <class F>
Subspace<F> syzygy_space(const BasicHomPoly<F>& f, int k) {
    if (k < 0) throw std::invalid_argument("syzygy_space: negative degree");
    return kernel_basis(pairing_matrix(f, k));
}

template <class F>
ExponentProfile<F> exponent_profile(const BasicHomPoly<F>& f, int kmax) {
    SyzygyEngine<F> engine(f);
    return engine.profile(kmax);
}

template <class F>
int mdr(const BasicHomPoly<F>& f) {
    SyzygyEngine<F> engine(f);
    for (int k = 0;; ++k) {
        if (engine.dim_d0(k) > 0) return k;
        if (k > 3 * f.degree()) throw std::runtime_error("mdr: no syzygy found");
    }
}

#define JACSYZ_INSTANTIATE(F)                                                   \
    template struct Syzygy<F>;                                                  \
    template class SyzygyEngine<F>;                                             \
    template Matrix<F> pairing_matrix<F>(const BasicHomPoly<F>&, int);          \
    template Subspace<F> syzygy_space<F>(const BasicHomPoly<F>&, int);          \
    template ExponentProfile<F> exponent_profile<F>(const BasicHomPoly<F>&, int); \
    template int mdr<F>(const BasicHomPoly<F>&);

JACSYZ_INSTANTIATE(Rat)
JACSYZ_INSTANTIATE(Cyclo)

#undef JACSYZ_INSTANTIATE

}  // namespace jacsyz
