#include "jacsyz/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jacsyz {

Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return make_rat(BigInt(text), BigInt(1));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        return make_rat(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
}

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// exact quotient of integer polynomials (low degree first), divisor monic
std::vector<BigInt> divide_monic(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    const size_t dd = den.size() - 1;
    if (num.size() <= dd) return {BigInt(0)};
    std::vector<BigInt> q(num.size() - dd);
    for (size_t i = num.size(); i-- > dd;) {
        BigInt c = num[i];
        q[i - dd] = c;
        if (c == 0) continue;
        for (size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (size_t j = 0; j < dd; ++j)
        if (num[j] != 0) throw std::logic_error("cyclotomic division not exact");
    return q;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    std::vector<BigInt> p(n + 1, BigInt(0));
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
    return p;
}

CycloField::CycloField(int n) : n_(n), phi_(euler_phi(n)), modulus_(cyclotomic_polynomial(n)) {
    for (int e = 1; e <= n; ++e)
        if (std::gcd(e, n) == 1) units_.push_back(e);
    // zeta^phi = -(m_0 + m_1 zeta + ... + m_{phi-1} zeta^{phi-1})
    const int len = std::max(2 * phi_ - 1, n_);
    power_.assign(len, std::vector<BigInt>(phi_, BigInt(0)));
    for (int j = 0; j < len; ++j) {
        if (j < phi_) {
            power_[j][j] = 1;
            continue;
        }
        const auto& prev = power_[j - 1];
        std::vector<BigInt> cur(phi_, BigInt(0));
        for (int t = phi_ - 1; t >= 1; --t) cur[t] = prev[t - 1];
        const BigInt top = prev[phi_ - 1];
        for (int t = 0; t < phi_; ++t) cur[t] -= top * modulus_[t];
        power_[j] = std::move(cur);
    }
}

const CycloField& CycloField::of(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycloField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, std::unique_ptr<CycloField>(new CycloField(n))).first;
    return *it->second;
}

std::vector<Rat> CycloField::reduce(const std::vector<Rat>& c) const {
    std::vector<Rat> out(phi_, Rat(0));
    for (size_t j = 0; j < c.size(); ++j) {
        if (sgn(c[j]) == 0) continue;
        if (static_cast<int>(j) < phi_) {
            out[j] += c[j];
        } else {
            const size_t e = j < power_.size() ? j : j % n_;
            for (int t = 0; t < phi_; ++t)
                if (power_[e][t] != 0) out[t] += c[j] * power_[e][t];
        }
    }
    return out;
}

Cyclo::Cyclo(int n, std::vector<Rat> coeffs) : n_(n) {
    const auto& field = CycloField::of(n);
    c_ = field.reduce(coeffs);
}

Cyclo Cyclo::zeta(int n, long power) {
    power %= n;
    if (power < 0) power += n;
    std::vector<Rat> c(power + 1, Rat(0));
    c[power] = 1;
    return Cyclo(n, std::move(c));
}

bool Cyclo::is_zero() const {
    for (const auto& q : c_)
        if (sgn(q) != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

Cyclo Cyclo::embed(int m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw std::invalid_argument("Cyclo::embed: conductor does not divide target");
    const int step = m / n_;
    std::vector<Rat> c(static_cast<size_t>(step) * (c_.size() - 1) + 1, Rat(0));
    for (size_t t = 0; t < c_.size(); ++t) c[t * step] = c_[t];
    return Cyclo(m, std::move(c));
}

namespace {

int common_conductor(int a, int b) { return std::lcm(a, b); }

}  // namespace

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    if (o.n_ != n_) {
        const int m = common_conductor(n_, o.n_);
        *this = embed(m);
        return *this += o.embed(m);
    }
    for (size_t t = 0; t < c_.size(); ++t) c_[t] += o.c_[t];
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
    if (o.n_ != n_) {
        const int m = common_conductor(n_, o.n_);
        *this = embed(m);
        return *this -= o.embed(m);
    }
    for (size_t t = 0; t < c_.size(); ++t) c_[t] -= o.c_[t];
    return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
    if (o.is_rational()) {
        for (auto& q : c_) q *= o.c_[0];
        return *this;
    }
    if (is_rational()) {
        const Rat s = c_[0];
        *this = o;
        for (auto& q : c_) q *= s;
        return *this;
    }
    if (o.n_ != n_) {
        const int m = common_conductor(n_, o.n_);
        *this = embed(m);
        return *this *= o.embed(m);
    }
    std::vector<Rat> prod(2 * c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            if (sgn(o.c_[j]) != 0) prod[i + j] += c_[i] * o.c_[j];
    }
    c_ = CycloField::of(n_).reduce(prod);
    return *this;
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclo::inverse of zero");
    if (is_rational()) return Cyclo(Rat(1) / c_[0]);
    // Solve (this) * x = 1 in the power basis: column i of M is this * zeta^i.
    const int phi = static_cast<int>(c_.size());
    std::vector<std::vector<Rat>> m(phi, std::vector<Rat>(phi + 1, Rat(0)));
    for (int i = 0; i < phi; ++i) {
        Cyclo col = *this * Cyclo::zeta(n_, i);
        for (int r = 0; r < phi; ++r) m[r][i] = col.c_[r];
    }
    m[0][phi] = 1;
    for (int col = 0, row = 0; col < phi; ++col) {
        int piv = -1;
        for (int r = row; r < phi; ++r)
            if (sgn(m[r][col]) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::logic_error("Cyclo::inverse: singular multiplication matrix");
        std::swap(m[piv], m[row]);
        const Rat inv = Rat(1) / m[row][col];
        for (auto& v : m[row]) v *= inv;
        for (int r = 0; r < phi; ++r) {
            if (r == row || sgn(m[r][col]) == 0) continue;
            const Rat f = m[r][col];
            for (int j = col; j <= phi; ++j) m[r][j] -= f * m[row][j];
        }
        ++row;
    }
    std::vector<Rat> x(phi);
    for (int r = 0; r < phi; ++r) x[r] = m[r][phi];
    return Cyclo(n_, std::move(x));
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    if (a.n_ == b.n_) return a.c_ == b.c_;
    if (a.is_rational() && b.is_rational()) return a.c_[0] == b.c_[0];
    const int m = std::lcm(a.n_, b.n_);
    return a.embed(m).c_ == b.embed(m).c_;
}

bool operator<(const Cyclo& a, const Cyclo& b) {
    if (a.n_ != b.n_) {
        if (a.is_rational() && b.is_rational()) return a.c_[0] < b.c_[0];
        const int m = std::lcm(a.n_, b.n_);
        return a.embed(m) < b.embed(m);
    }
    for (size_t t = 0; t < a.c_.size(); ++t) {
        const int c = cmp(a.c_[t], b.c_[t]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::string Cyclo::to_string() const {
    if (is_rational()) return jacsyz::to_string(c_[0]);
    std::ostringstream out;
    bool first = true;
    for (size_t t = 0; t < c_.size(); ++t) {
        const Rat& q = c_[t];
        if (sgn(q) == 0) continue;
        Rat mag = abs(q);
        if (!first) out << (sgn(q) < 0 ? " - " : " + ");
        else if (sgn(q) < 0) out << "-";
        if (t == 0) {
            out << jacsyz::to_string(mag);
        } else {
            if (mag != 1) out << jacsyz::to_string(mag) << "*";
            out << "zeta" << n_;
            if (t > 1) out << "^" << t;
        }
        first = false;
    }
    return out.str();
}

}  // namespace jacsyz
