#pragma once

#include "jacsyz/cli/parse.hpp"

#include <string>
#include <vector>

namespace jacsyz::cli {

struct CorpusEntry {
    std::string name;
    std::string expression;
    /// Per top-level factor; factors the component counter cannot certify.
    std::vector<bool> declared_irreducible;

    CurveInput input() const;
};

/// Fixed list used by `verify --corpus builtin` and the acceptance suite.
std::vector<CorpusEntry> builtin_corpus();

/// (x^a - y^a)(y^a - z^a)(x^a - z^a) times x y z when with_axes.
std::string fermat_arrangement(int a, bool with_axes);

/// Every *.poly (one expression) and *.lines (arrangement) file, sorted by name.
std::vector<CorpusEntry> load_corpus_dir(const std::string& dir);

}  // namespace jacsyz::cli
