#pragma once

#include "jacsyz/arrangement.hpp"
#include "jacsyz/hompoly.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jacsyz::cli {

struct ParseError : std::runtime_error {
    enum class Kind { syntax, inhomogeneous, non_rational, not_squarefree, not_lines, bad_file };
    ParseError(Kind k, std::size_t pos, const std::string& msg) : std::runtime_error(msg), kind(k), position(pos) {}
    Kind kind;
    std::size_t position;  // byte offset into the source (or line number for files)
};

std::string to_string(ParseError::Kind k);

struct CurveInput {
    std::string source;
    std::vector<HomPoly> factors;
    /// Per factor, set when the caller vouches for irreducibility.
    std::vector<bool> declared_irreducible;

    HomPoly product() const;
    int degree() const;
};

/// Expression grammar: rational literals (p or p/q), x y z, + - * ^ and
/// parentheses; juxtaposition of a literal with a variable or bracket is a
/// product. The top-level product is kept as the factor list; numeric
/// factors are folded into the first polynomial factor.
CurveInput parse_poly(const std::string& text);

/// "a b c" (three rationals) or a linear expression in x, y, z.
Line parse_line(const std::string& text);

/// One line per projective line, three whitespace-separated rationals;
/// '#' starts a comment. ParseError::position is the 1-based line number.
Arrangement parse_arrangement_file(const std::string& text);

/// Lines of a binary form in two of the variables: rational roots, or
/// c1 u^n + c2 v^n whose ratio is plus or minus an n-th power, which splits
/// over a cyclotomic field. Nothing when neither applies.
std::optional<std::vector<Line>> split_binary_form(const HomPoly& g);

/// Every factor must be linear or split by split_binary_form.
std::optional<Arrangement> arrangement_from_factors(const std::vector<HomPoly>& factors);

/// File path (arrangement format) if it exists, otherwise an expression.
Arrangement load_arrangement(const std::string& arg);

std::string read_file(const std::string& path);

}  // namespace jacsyz::cli
