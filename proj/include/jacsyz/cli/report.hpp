#pragma once

#include "jacsyz/arrangement.hpp"
#include "jacsyz/cli/parse.hpp"
#include "jacsyz/invariants.hpp"
#include "jacsyz/syzygy.hpp"
#include "jacsyz/verdict.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <optional>
#include <string>
#include <vector>

namespace jacsyz::cli {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

struct AnalyzeOptions {
    std::uint64_t seed = 1;
    int kmax = -1;  // -1: default_kmax
    MuMode mu_mode = MuMode::polar;
    bool strict = false;
};

struct ArrangementAnalysis {
    Arrangement arrangement;
    std::vector<PointRecord> lattice;
    MultiplicityProfile profile;
    std::vector<int> modular;
    ArrangementSyzygies syzygies;
    long combinatorial = 0;  // sum (m_p - 1)^2
    std::vector<Verdict> verdicts;
    nlohmann::json report;
};

/// Lattice, exponents, tau and the arrangement checks. Pass `known` to reuse
/// exponents already computed for the same polynomial.
ArrangementAnalysis analyze_arrangement(const Arrangement& a, int kmax = -1,
                                        const std::optional<ArrangementSyzygies>& known = std::nullopt);

struct CurveAnalysis {
    CurveNumbers numbers;
    ExponentProfile<Rat> profile;
    TjurinaResult tjurina;
    MuResult mu;
    ComponentCount components;
    std::optional<ArrangementAnalysis> arrangement;
    std::vector<Verdict> verdicts;  // all, including the arrangement ones
    nlohmann::json report;
    bool ok() const { return !any_failed(verdicts); }
};

/// Throws ParseError(not_squarefree) for non-reduced input.
CurveAnalysis analyze_curve(const CurveInput& in, const AnalyzeOptions& opts = {});

nlohmann::json envelope(const std::string& command, const std::string& input, std::uint64_t seed);
nlohmann::json verdicts_json(const std::vector<Verdict>& vs);
nlohmann::json line_json(const Line& l);
nlohmann::json cyclo_json(const Cyclo& c);
nlohmann::json class_json(CurveClass c);

struct EntryResult {
    std::string name;
    nlohmann::json report;
    std::vector<Verdict> verdicts;
    std::string error;  // parse or internal failure, empty when analysed
    bool input_error = false;
};

/// analyze_curve plus, for free line arrangements, deletion of every line.
EntryResult verify_entry(const std::string& name, const CurveInput& in, const AnalyzeOptions& opts);

struct CampaignOptions {
    int count = 100;
    int lines = 0;  // 0: uniform in [3, 10]
    std::uint64_t seed = 1;
    bool addition_deletion = false;  // also run deletion/addition on supersolvable arrangements
};

/// Seeded random arrangements checked for lattice consistency and the
/// exponent bounds; entries are independent and run in parallel.
std::vector<EntryResult> run_campaign(const CampaignOptions& opts);

/// Runs f(i) for i in [0, n) on a thread pool; results in index order.
template <class R, class Fn>
std::vector<R> parallel_map(std::size_t n, Fn f) {
    std::vector<R> out(n);
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mu;
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(n, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < n;) {
                try {
                    out[i] = f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string canonical(const nlohmann::json& j);

}  // namespace jacsyz::cli
