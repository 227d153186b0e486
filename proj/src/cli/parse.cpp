#include "jacsyz/cli/parse.hpp"

#include "jacsyz/upoly.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace jacsyz::cli {

std::string to_string(ParseError::Kind k) {
    switch (k) {
        case ParseError::Kind::syntax: return "syntax";
        case ParseError::Kind::inhomogeneous: return "inhomogeneous";
        case ParseError::Kind::non_rational: return "non_rational";
        case ParseError::Kind::not_squarefree: return "not_squarefree";
        case ParseError::Kind::not_lines: return "not_lines";
        case ParseError::Kind::bad_file: return "bad_file";
    }
    return "syntax";
}

HomPoly CurveInput::product() const {
    HomPoly f = HomPoly::constant(Rat(1));
    for (const auto& g : factors) f = f * g;
    return f;
}

int CurveInput::degree() const {
    int d = 0;
    for (const auto& g : factors) d += g.degree();
    return d;
}

namespace {

// mixed-degree polynomial used while parsing
using Exps = std::array<int, 3>;
using Sparse = std::map<Exps, Rat>;

void clean(Sparse& p) {
    std::erase_if(p, [](const auto& kv) { return jacsyz::is_zero(kv.second); });
}

Sparse add(Sparse a, const Sparse& b, int sign) {
    for (const auto& [e, c] : b) a[e] += sign > 0 ? c : Rat(-c);
    clean(a);
    return a;
}

Sparse mul(const Sparse& a, const Sparse& b) {
    Sparse out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) out[{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}] += ca * cb;
    clean(out);
    return out;
}

Sparse constant(const Rat& c) {
    Sparse s;
    if (!jacsyz::is_zero(c)) s[{0, 0, 0}] = c;
    return s;
}

struct Node {
    Sparse poly;
    std::size_t pos;
};

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    // top level: list of factors when the expression is a single product
    std::vector<Node> parse_top() {
        skip();
        std::vector<Node> factors = product();
        skip();
        if (i_ < s_.size() && (s_[i_] == '+' || s_[i_] == '-')) {
            Sparse acc = collapse(factors);
            while (i_ < s_.size() && (s_[i_] == '+' || s_[i_] == '-')) {
                const int sign = s_[i_] == '+' ? 1 : -1;
                ++i_;
                acc = add(acc, collapse(product()), sign);
                skip();
            }
            factors = {{acc, 0}};
        }
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return factors;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(ParseError::Kind::syntax, i_, "syntax error at position " + std::to_string(i_) + ": " + msg);
    }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    static Sparse collapse(const std::vector<Node>& f) {
        Sparse p = constant(Rat(1));
        for (const auto& n : f) p = mul(p, n.poly);
        return p;
    }

    Sparse expr() {
        skip();
        Sparse acc = collapse(product());
        skip();
        while (i_ < s_.size() && (s_[i_] == '+' || s_[i_] == '-')) {
            const int sign = s_[i_] == '+' ? 1 : -1;
            ++i_;
            acc = add(acc, collapse(product()), sign);
            skip();
        }
        return acc;
    }

    std::vector<Node> product() {
        std::vector<Node> out;
        skip();
        if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) {
            const bool neg = s_[i_] == '-';
            ++i_;
            auto rest = product();
            if (neg) rest.insert(rest.begin(), Node{constant(Rat(-1)), i_});
            return rest;
        }
        out.push_back(power());
        for (;;) {
            skip();
            if (i_ >= s_.size()) break;
            const char c = s_[i_];
            if (c == '*') {
                ++i_;
                out.push_back(power());
            } else if (c == '(' || c == 'x' || c == 'y' || c == 'z' || std::isdigit(static_cast<unsigned char>(c))) {
                out.push_back(power());
            } else {
                break;
            }
        }
        return out;
    }

    Node power() {
        skip();
        const std::size_t start = i_;
        Sparse base = primary();
        skip();
        if (i_ < s_.size() && s_[i_] == '^') {
            ++i_;
            skip();
            if (i_ < s_.size() && s_[i_] == '{') {
                ++i_;
                const long n = integer();
                skip();
                if (i_ >= s_.size() || s_[i_] != '}') fail("expected '}'");
                ++i_;
                return {pow(base, n), start};
            }
            return {pow(base, integer()), start};
        }
        return {base, start};
    }

    Sparse pow(const Sparse& b, long n) {
        if (n < 0) fail("negative exponent");
        if (n > 200) fail("exponent too large");
        Sparse r = constant(Rat(1));
        for (long k = 0; k < n; ++k) r = mul(r, b);
        return r;
    }

    long integer() {
        skip();
        const std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail("expected a non-negative integer exponent");
        if (i_ - start > 6) fail("exponent too large");
        return std::stol(s_.substr(start, i_ - start));
    }

    Sparse primary() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[i_];
        if (c == '(') {
            ++i_;
            Sparse inner = expr();
            skip();
            if (i_ >= s_.size() || s_[i_] != ')') fail("expected ')'");
            ++i_;
            return inner;
        }
        if (c == 'x' || c == 'y' || c == 'z') {
            ++i_;
            if (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) {
                --i_;
                identifier();
            }
            Exps e{0, 0, 0};
            e[c - 'x'] = 1;
            return Sparse{{e, Rat(1)}};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return constant(literal());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') identifier();
        fail("unexpected '" + std::string(1, c) + "'");
    }

    [[noreturn]] void identifier() {
        const std::size_t start = i_;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
        const std::string name = s_.substr(start, i_ - start);
        i_ = start;
        static const char* irrational[] = {"sqrt", "pi", "e", "i", "I", "exp", "log", "sin", "cos", "zeta"};
        if (std::find(std::begin(irrational), std::end(irrational), name) != std::end(irrational))
            throw ParseError(ParseError::Kind::non_rational, start,
                             "non-rational literal '" + name + "' at position " + std::to_string(start));
        fail("unknown identifier '" + name + "'");
    }

    Rat literal() {
        const std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        std::string text = s_.substr(start, i_ - start);
        if (i_ < s_.size() && (s_[i_] == '.' || s_[i_] == 'e' || s_[i_] == 'E') && i_ + 1 < s_.size() &&
            (std::isdigit(static_cast<unsigned char>(s_[i_ + 1])) || s_[i_] == '.'))
            throw ParseError(ParseError::Kind::non_rational, start,
                             "non-rational literal at position " + std::to_string(start) + " (use p/q)");
        if (i_ < s_.size() && s_[i_] == '/') {
            ++i_;
            const std::size_t ds = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (ds == i_) fail("expected denominator");
            text += "/" + s_.substr(ds, i_ - ds);
        }
        try {
            return parse_rat(text);
        } catch (const std::invalid_argument& e) {
            i_ = start;
            fail(e.what());
        }
    }

    const std::string& s_;
    std::size_t i_ = 0;
};

HomPoly to_hom(const Sparse& p, std::size_t pos) {
    if (p.empty()) throw ParseError(ParseError::Kind::syntax, pos, "factor at position " + std::to_string(pos) + " is zero");
    const int d = p.begin()->first[0] + p.begin()->first[1] + p.begin()->first[2];
    std::vector<HomPoly::Term> terms;
    for (const auto& [e, c] : p) {
        if (e[0] + e[1] + e[2] != d)
            throw ParseError(ParseError::Kind::inhomogeneous, pos,
                             "inhomogeneous factor at position " + std::to_string(pos));
        terms.emplace_back(Mono{e}, c);
    }
    return HomPoly::from_terms(d, terms);
}

}  // namespace

CurveInput parse_poly(const std::string& text) {
    Parser parser(text);
    const auto nodes = parser.parse_top();
    CurveInput in;
    in.source = text;
    Rat scalar(1);
    for (const auto& n : nodes) {
        HomPoly g = to_hom(n.poly, n.pos);
        if (g.degree() == 0) scalar *= g.terms().front().second;
        else in.factors.push_back(std::move(g));
    }
    if (in.factors.empty()) throw ParseError(ParseError::Kind::syntax, 0, "expression is a constant");
    in.factors.front() = in.factors.front() * scalar;
    in.declared_irreducible.assign(in.factors.size(), false);
    return in;
}

namespace {

bool mentions_variable(const std::string& s) {
    return std::any_of(s.begin(), s.end(), [](char c) { return c == 'x' || c == 'y' || c == 'z'; });
}

}  // namespace

Line parse_line(const std::string& text) {
    if (mentions_variable(text)) {
        const auto in = parse_poly(text);
        if (in.factors.size() != 1 || in.factors[0].degree() != 1)
            throw ParseError(ParseError::Kind::not_lines, 0, "'" + text + "' is not a linear form");
        const auto& g = in.factors[0];
        return Line(Cyclo(g.coeff(mono(1, 0, 0))), Cyclo(g.coeff(mono(0, 1, 0))), Cyclo(g.coeff(mono(0, 0, 1))));
    }
    std::istringstream is(text);
    std::vector<std::string> tok{std::istream_iterator<std::string>(is), std::istream_iterator<std::string>()};
    if (tok.size() != 3) throw ParseError(ParseError::Kind::syntax, 0, "expected three rationals, got '" + text + "'");
    std::array<Rat, 3> c;
    for (int i = 0; i < 3; ++i) {
        if (tok[i].find('.') != std::string::npos)
            throw ParseError(ParseError::Kind::non_rational, 0, "non-rational coefficient '" + tok[i] + "'");
        try {
            c[i] = parse_rat(tok[i]);
        } catch (const std::invalid_argument& e) {
            throw ParseError(ParseError::Kind::syntax, 0, e.what());
        }
    }
    try {
        return Line(Cyclo(c[0]), Cyclo(c[1]), Cyclo(c[2]));
    } catch (const std::invalid_argument& e) {
        throw ParseError(ParseError::Kind::syntax, 0, e.what());
    }
}

Arrangement parse_arrangement_file(const std::string& text) {
    std::istringstream is(text);
    std::string raw;
    std::vector<Line> lines;
    std::size_t lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        if (std::all_of(raw.begin(), raw.end(), [](unsigned char c) { return std::isspace(c); })) continue;
        try {
            lines.push_back(parse_line(raw));
        } catch (const ParseError& e) {
            throw ParseError(e.kind, lineno, "line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (lines.empty()) throw ParseError(ParseError::Kind::bad_file, 0, "arrangement file has no lines");
    try {
        return Arrangement(std::move(lines));
    } catch (const std::invalid_argument& e) {
        throw ParseError(ParseError::Kind::not_squarefree, 0, e.what());
    }
}

namespace {

std::optional<BigInt> exact_root(const BigInt& a, unsigned long n) {
    BigInt r;
    if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), n) == 0) return std::nullopt;
    return r;
}

std::vector<BigInt> divisors(BigInt a) {
    a = abs(a);
    std::vector<BigInt> primes;
    std::vector<int> mult;
    if (a > BigInt(1) << 40) return {};
    for (BigInt p = 2; p * p <= a; ++p) {
        if (a % p != 0) continue;
        int k = 0;
        while (a % p == 0) {
            a /= p;
            ++k;
        }
        primes.push_back(p);
        mult.push_back(k);
    }
    if (a > 1) {
        primes.push_back(a);
        mult.push_back(1);
    }
    std::vector<BigInt> out{1};
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const std::size_t n = out.size();
        BigInt pk = 1;
        for (int k = 1; k <= mult[i]; ++k) {
            pk *= primes[i];
            for (std::size_t j = 0; j < n; ++j) out.push_back(out[j] * pk);
        }
    }
    return out;
}

// distinct rational roots, or nothing if p does not split into them
std::optional<std::vector<Rat>> rational_roots(UPoly p) {
    std::vector<Rat> roots;
    while (p.degree() > 0 && jacsyz::is_zero(p.coeff(0))) {
        roots.push_back(Rat(0));
        p = divmod(p, UPoly({Rat(0), Rat(1)})).first;
    }
    if (p.degree() <= 0) return roots;
    BigInt lcm_den = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
    const BigInt a0 = Rat(p.coeff(0) * lcm_den).get_num();
    const BigInt an = Rat(p.lead() * lcm_den).get_num();
    const auto num = divisors(a0), den = divisors(an);
    if (num.empty() || den.empty()) return std::nullopt;
    for (const auto& q : den)
        for (const auto& n : num)
            for (int s : {1, -1}) {
                if (p.degree() == 0) break;
                const Rat r = make_rat(BigInt(s * n), q);
                if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
                if (jacsyz::is_zero(p.eval(r))) {
                    roots.push_back(r);
                    p = divmod(p, UPoly({Rat(-r), Rat(1)})).first;
                }
            }
    if (p.degree() != 0) return std::nullopt;
    return roots;
}

Line line_from(int u, int v, const Cyclo& cu, const Cyclo& cv) {
    std::array<Cyclo, 3> c{Cyclo(0), Cyclo(0), Cyclo(0)};
    c[u] = cu;
    c[v] = cv;
    return Line(c[0], c[1], c[2]);
}

}  // namespace

std::optional<std::vector<Line>> split_binary_form(const HomPoly& g) {
    const int n = g.degree();
    if (n < 1 || g.is_zero()) return std::nullopt;
    if (n == 1) {
        return std::vector<Line>{Line(Cyclo(g.coeff(mono(1, 0, 0))), Cyclo(g.coeff(mono(0, 1, 0))),
                                      Cyclo(g.coeff(mono(0, 0, 1))))};
    }
    int missing = -1;
    for (int w = 2; w >= 0 && missing < 0; --w)
        if (std::all_of(g.terms().begin(), g.terms().end(), [&](const auto& t) { return t.first.e[w] == 0; }))
            missing = w;
    if (missing < 0) return std::nullopt;
    const int u = missing == 0 ? 1 : 0;
    const int v = missing == 2 ? 1 : 2;
    auto coeff = [&](int i) {  // u^i v^(n-i)
        Mono m;
        m.e[u] = i;
        m.e[v] = n - i;
        return g.coeff(m);
    };
    std::vector<Rat> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = coeff(i);
    std::vector<Line> out;
    UPoly p(c);
    if (p.degree() < n - 1) return std::nullopt;  // v^2 divides g
    if (p.degree() == n - 1) out.push_back(line_from(u, v, Cyclo(0), Cyclo(1)));

    const bool binomial = p.degree() == n &&
                          std::count_if(c.begin(), c.end(), [](const Rat& q) { return !jacsyz::is_zero(q); }) == 2 &&
                          !jacsyz::is_zero(c[0]);
    if (binomial) {
        // u^n = q v^n
        const Rat q = -c[0] / c[n];
        const Rat aq = abs(q);
        const auto rn = exact_root(aq.get_num(), static_cast<unsigned long>(n));
        const auto rd = exact_root(aq.get_den(), static_cast<unsigned long>(n));
        if (rn && rd) {
            const Rat s = make_rat(*rn, *rd);
            for (int k = 0; k < n; ++k) {
                const Cyclo w = sgn(q) > 0 ? Cyclo::zeta(n, k) : Cyclo::zeta(2 * n, 2 * k + 1);
                out.push_back(line_from(u, v, Cyclo(1), -(w * Cyclo(s))));
            }
            return out;
        }
    }
    const auto roots = rational_roots(p);
    if (!roots || static_cast<int>(roots->size()) != p.degree()) return std::nullopt;
    for (const auto& r : *roots) out.push_back(line_from(u, v, Cyclo(1), Cyclo(Rat(-r))));
    return out;
}

std::optional<Arrangement> arrangement_from_factors(const std::vector<HomPoly>& factors) {
    std::vector<Line> lines;
    for (const auto& g : factors) {
        auto ls = split_binary_form(g);
        if (!ls) return std::nullopt;
        lines.insert(lines.end(), ls->begin(), ls->end());
    }
    try {
        return Arrangement(std::move(lines));
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(ParseError::Kind::bad_file, 0, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Arrangement load_arrangement(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) return parse_arrangement_file(read_file(arg));
    const auto in = parse_poly(arg);
    auto a = arrangement_from_factors(in.factors);
    if (!a)
        throw ParseError(ParseError::Kind::not_lines, 0,
                         "'" + arg + "' is not a product of distinct lines (factors must be linear or split binary forms)");
    return *a;
}

}  // namespace jacsyz::cli
