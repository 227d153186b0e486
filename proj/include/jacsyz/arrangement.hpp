#pragma once

#include "jacsyz/cyclo.hpp"
#include "jacsyz/hompoly.hpp"
#include "jacsyz/syzygy.hpp"
#include "jacsyz/verdict.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace jacsyz {

/// a x + b y + c z = 0, scaled so the first nonzero coefficient is 1.
class Line {
public:
    Line(const Cyclo& a, const Cyclo& b, const Cyclo& c);
    static Line rational(long a, long b, long c) { return Line(Cyclo(a), Cyclo(b), Cyclo(c)); }

    const std::array<Cyclo, 3>& coeffs() const { return c_; }
    bool is_rational() const;
    int conductor() const;
    CycloPoly form() const;
    bool contains(const std::array<Cyclo, 3>& point) const;
    std::string to_string() const;

    friend bool operator==(const Line& a, const Line& b) { return a.c_ == b.c_; }

private:
    std::array<Cyclo, 3> c_;
};

struct PointRecord {
    std::array<Cyclo, 3> point;  // first nonzero coordinate is 1
    std::vector<int> incident;   // sorted line indices
    int multiplicity() const { return static_cast<int>(incident.size()); }
};

class Arrangement {
public:
    Arrangement() = default;
    /// Throws std::invalid_argument on repeated lines.
    explicit Arrangement(std::vector<Line> lines);

    int size() const { return static_cast<int>(lines_.size()); }
    const std::vector<Line>& lines() const { return lines_; }
    const Line& line(int i) const { return lines_.at(static_cast<std::size_t>(i)); }
    bool contains(const Line& l) const;
    bool is_rational() const;
    int conductor() const;

    CycloPoly polynomial() const;
    std::optional<HomPoly> rational_polynomial() const;

    Arrangement without(int i) const;
    Arrangement with(const Line& l) const;

private:
    std::vector<Line> lines_;
};

/// Pairwise intersections grouped by point; asserts sum C(m_p, 2) = C(d, 2).
std::vector<PointRecord> intersection_lattice(const Arrangement& a);

struct MultiplicityProfile {
    int m_a = 0;             // largest multiplicity
    int n_a = 0;             // largest multiplicity off a maximal point (1 if none)
    std::vector<int> r_l;    // points on each line
    int maximal_points = 0;  // number of points of multiplicity m_a
};

MultiplicityProfile multiplicity_profile(const Arrangement& a, const std::vector<PointRecord>& lattice);

long combinatorial_tau_mu(const std::vector<PointRecord>& lattice);

/// Indices into lattice of the modular points.
std::vector<int> modular_points(const std::vector<PointRecord>& lattice);

/// Number of distinct points in which l meets the lines of a.
int intersection_count(const Arrangement& a, const Line& l);

/// Exponents of the arrangement's defining polynomial, over Q when possible.
struct ArrangementSyzygies {
    std::vector<int> exponents;
    CurveClass classification = CurveClass::degenerate;
    bool complete = true;
    std::optional<long> tau;
};

ArrangementSyzygies arrangement_syzygies(const Arrangement& a, bool with_tau, int kmax = -1);

Verdict lattice_check(const Arrangement& a, const std::vector<PointRecord>& lattice);
Verdict cor20_check(int d, const std::vector<int>& exps, long tau);
Verdict thm4_filter(const std::vector<int>& exps, const MultiplicityProfile& mp, bool has_modular_point,
                    const std::vector<PointRecord>& lattice);
Verdict thm5_bounds(int d, const std::vector<int>& exps, const MultiplicityProfile& mp);
Verdict dm_bound(int d, const std::vector<int>& exps);

struct DeletionRecord {
    int line = -1;
    int r = 0;
    int matched_case = 0;  // 1, 2, 3 or 0 if none
    std::vector<int> exponents;          // of A
    std::vector<int> deleted_exponents;  // of A minus the line
    CurveClass deleted_class = CurveClass::degenerate;
    Verdict verdict;
};

/// Requires `exps` to be the (free) exponents of a.
DeletionRecord deletion_classify(const Arrangement& a, const std::vector<int>& exps, int line);

struct AdditionRecord {
    int r = 0;
    int matched_case = 0;
    std::vector<int> exponents;        // of A' (free)
    std::vector<int> added_exponents;  // of A' plus the line
    CurveClass added_class = CurveClass::degenerate;
    Verdict verdict;
};

/// Requires `exps` to be the (free) exponents of a.
AdditionRecord addition_classify(const Arrangement& a, const std::vector<int>& exps, const Line& l);

/// d distinct rational lines with integer coefficients in [-5, 5].
Arrangement random_arrangement(int d, std::mt19937_64& rng);

/// Supersolvable (hence free) rational arrangement with about d lines: a pencil
/// through a point plus transversals, closed under joining the point to every
/// intersection of two transversals.
Arrangement random_supersolvable(int d, std::mt19937_64& rng);

/// A random line not in a; with probability it passes through 0, 1 or 2
/// existing intersection points.
Line random_line_for(const Arrangement& a, const std::vector<PointRecord>& lattice, std::mt19937_64& rng);

}  // namespace jacsyz
