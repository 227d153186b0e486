#include "jacsyz/cli/corpus.hpp"

#include <algorithm>
#include <filesystem>

namespace jacsyz::cli {

CurveInput CorpusEntry::input() const {
    CurveInput in = parse_poly(expression);
    for (std::size_t i = 0; i < declared_irreducible.size() && i < in.declared_irreducible.size(); ++i)
        in.declared_irreducible[i] = declared_irreducible[i];
    return in;
}

std::string fermat_arrangement(int a, bool with_axes) {
    const std::string s = std::to_string(a);
    std::string out = with_axes ? "x*y*z*" : "";
    out += "(x^" + s + "-y^" + s + ")*(y^" + s + "-z^" + s + ")*(x^" + s + "-z^" + s + ")";
    return out;
}

std::vector<CorpusEntry> builtin_corpus() {
    std::vector<CorpusEntry> c = {
        {"xyz", "x*y*z", {}},
        {"fermat_cubic", "x^3+y^3+z^3", {}},
        {"fermat_quartic", "x^4+y^4+z^4", {}},
    };
    for (int m : {3, 4, 5}) c.push_back({"monomial_" + std::to_string(m) + "_" + std::to_string(m), fermat_arrangement(m, false), {}});
    for (int m : {2, 3, 4}) c.push_back({"full_monomial_" + std::to_string(m), fermat_arrangement(m, true), {}});
    const std::vector<CorpusEntry> rest = {
        {"pencil5_plus_two", "(x^5-y^5)*(x+2*y+z)*(x+3*y-5*z)", {}},
        {"pencil4_plus_one", "x*y*(x-y)*(x+y)*(x+2*y+3*z)", {}},
        {"pencil4_plus_two", "x*y*(x-y)*(x+y)*(x+2*y+3*z)*(2*x-y+5*z)", {}},
        {"pencil3_plus_three", "x*y*(x+y)*(x+z)*(y+3*z)*(2*x-5*y+7*z)", {}},
        {"xyz_plus_line", "x*y*z*(x+y+z)", {}},
        {"thom_sebastiani_quartic", "x^2*y*(x+y)+z^4", {true}},
        {"thom_sebastiani_quintic", "x^4*y+z^5", {true}},
        {"cubic_plus_secant", "(x^3+y^3+z^3)*(x+2*y+3*z)", {}},
        {"cubic_plus_flex_tangent", "(x^3+y^3+z^3)*(x+y)", {}},
        {"cusp_quartic", "y^3*z-x^4", {true}},
        {"nodal_cubic", "y^2*z-x^3-x^2*z", {true}},
        {"cuspidal_cubic", "y^2*z-x^3", {true}},
        {"w12_quintic", "x^4*z+y^5+x^2*y^3", {true}},
    };
    c.insert(c.end(), rest.begin(), rest.end());
    return c;
}

std::vector<CorpusEntry> load_corpus_dir(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw ParseError(ParseError::Kind::bad_file, 0, "'" + dir + "' is not a directory");
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && (e.path().extension() == ".poly" || e.path().extension() == ".lines"))
            files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<CorpusEntry> out;
    for (const auto& p : files) {
        std::string text = read_file(p.string());
        if (p.extension() == ".lines") {
            const Arrangement a = parse_arrangement_file(text);
            std::string expr;
            for (const auto& l : a.lines()) {
                if (!l.is_rational())
                    throw ParseError(ParseError::Kind::non_rational, 0, p.string() + ": non-rational line");
                if (!expr.empty()) expr += "*";
                expr += "(" + l.to_string() + ")";
            }
            out.push_back({p.stem().string(), expr, {}});
        } else {
            std::erase_if(text, [](char ch) { return ch == '\n' || ch == '\r'; });
            out.push_back({p.stem().string(), text, {}});
        }
    }
    return out;
}

}  // namespace jacsyz::cli
