#include "jacsyz/cli/corpus.hpp"
#include "jacsyz/cli/parse.hpp"
#include "jacsyz/cli/report.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>

using namespace jacsyz;
using namespace jacsyz::cli;

namespace {

constexpr int kOk = 0, kInputError = 2, kVerdictFailure = 3, kInternalError = 4;

struct Common {
    std::uint64_t seed = 1;
    int kmax = -1;
    std::string mu_mode = "polar";
    bool strict = false;
    bool json_only = false;

    AnalyzeOptions analyze() const {
        AnalyzeOptions o;
        o.seed = seed;
        o.kmax = kmax;
        o.mu_mode = parse_mu_mode(mu_mode);
        o.strict = strict;
        return o;
    }
};

void summary(const Common& c, const std::string& text) {
    if (!c.json_only) std::cerr << text << '\n';
}

std::string verdict_line(const std::vector<Verdict>& vs) {
    std::string s;
    for (const auto& v : vs) {
        if (v.status == Status::not_applicable) continue;
        s += " " + v.name + (v.failed() ? "=FAIL" : "=ok");
    }
    return s;
}

int finish(const Common& c, nlohmann::json report, const std::vector<Verdict>& vs,
           std::chrono::steady_clock::time_point t0) {
    const bool ok = !any_failed(vs);
    report["ok"] = ok;
    std::cout << canonical(report);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    summary(c, std::string(ok ? "all checks passed" : "CHECK FAILED") + " (" + std::to_string(ms.count()) + " ms)");
    return ok ? kOk : kVerdictFailure;
}

int cmd_analyze(const Common& c, const std::string& expr) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto in = parse_poly(expr);
    const auto an = analyze_curve(in, c.analyze());
    nlohmann::json rep = envelope("analyze", expr, c.seed);
    rep["curve"] = an.report;
    rep["verdicts"] = verdicts_json(an.verdicts);
    std::string exps;
    for (int e : an.numbers.exponents) exps += (exps.empty() ? "" : ",") + std::to_string(e);
    summary(c, "d=" + std::to_string(an.numbers.d) + " exponents=(" + exps + ") " + to_string(an.profile.classification) +
                   " tau=" + std::to_string(an.numbers.tau) + " mu=" + std::to_string(an.numbers.mu) + " [" +
                   to_string(an.mu.mode) + "]");
    for (const auto& w : an.mu.warnings) summary(c, "warning: " + w);
    summary(c, "verdicts:" + verdict_line(an.verdicts));
    return finish(c, rep, an.verdicts, t0);
}

int cmd_arrangement(const Common& c, const std::string& arg) {
    const auto t0 = std::chrono::steady_clock::now();
    const Arrangement a = load_arrangement(arg);
    const auto an = analyze_arrangement(a, c.kmax);
    nlohmann::json rep = envelope("arrangement", arg, c.seed);
    rep["arrangement"] = an.report;
    rep["verdicts"] = verdicts_json(an.verdicts);
    summary(c, "d=" + std::to_string(a.size()) + " m(A)=" + std::to_string(an.profile.m_a) +
                   " n(A)=" + std::to_string(an.profile.n_a) + " " + to_string(an.syzygies.classification) +
                   " tau=" + std::to_string(*an.syzygies.tau));
    summary(c, "verdicts:" + verdict_line(an.verdicts));
    return finish(c, rep, an.verdicts, t0);
}

std::vector<int> free_exponents(const Arrangement& a, int kmax) {
    const auto sy = arrangement_syzygies(a, false, kmax);
    if (sy.exponents.size() != 2)
        throw ParseError(ParseError::Kind::not_lines, 0, "arrangement is not free (" + to_string(sy.classification) + ")");
    return sy.exponents;
}

int cmd_delete(const Common& c, const std::string& arg, int line) {
    const auto t0 = std::chrono::steady_clock::now();
    const Arrangement a = load_arrangement(arg);
    if (line < 0 || line >= a.size())
        throw ParseError(ParseError::Kind::syntax, 0, "--line must be in [0, " + std::to_string(a.size() - 1) + "]");
    const auto exps = free_exponents(a, c.kmax);
    const auto rec = deletion_classify(a, exps, line);
    nlohmann::json rep = envelope("delete", arg, c.seed);
    rep["line"] = line_json(a.line(line));
    rep["deletion"] = rec.verdict.to_json();
    summary(c, "r=" + std::to_string(rec.r) + " case=" + std::to_string(rec.matched_case) + " result " +
                   to_string(rec.deleted_class));
    return finish(c, rep, {rec.verdict}, t0);
}

int cmd_add(const Common& c, const std::string& arg, const std::string& line) {
    const auto t0 = std::chrono::steady_clock::now();
    const Arrangement a = load_arrangement(arg);
    const Line l = parse_line(line);
    if (a.contains(l)) throw ParseError(ParseError::Kind::syntax, 0, "line is already in the arrangement");
    const auto exps = free_exponents(a, c.kmax);
    const auto rec = addition_classify(a, exps, l);
    nlohmann::json rep = envelope("add", arg, c.seed);
    rep["line"] = line_json(l);
    rep["addition"] = rec.verdict.to_json();
    summary(c, "r=" + std::to_string(rec.r) + " case=" + std::to_string(rec.matched_case) + " result " +
                   to_string(rec.added_class));
    return finish(c, rep, {rec.verdict}, t0);
}

int report_entries(const Common& c, nlohmann::json rep, const std::vector<EntryResult>& results,
                   std::chrono::steady_clock::time_point t0) {
    nlohmann::json entries = nlohmann::json::array();
    std::vector<Verdict> all;
    bool input_error = false, internal_error = false;
    for (const auto& r : results) {
        nlohmann::json e = {{"name", r.name}, {"verdicts", verdicts_json(r.verdicts)}};
        if (!r.error.empty()) {
            e["error"] = r.error;
            (r.input_error ? input_error : internal_error) = true;
            summary(c, r.name + ": ERROR " + r.error);
        } else {
            e["report"] = r.report;
            summary(c, r.name + ":" + (any_failed(r.verdicts) ? " FAIL" : " ok") + verdict_line(r.verdicts));
        }
        all.insert(all.end(), r.verdicts.begin(), r.verdicts.end());
        entries.push_back(std::move(e));
    }
    rep["entries"] = entries;
    rep["verdict_count"] = all.size();
    const int code = finish(c, rep, all, t0);
    if (internal_error) return kInternalError;
    if (input_error) return kInputError;
    return code;
}

int cmd_verify(const Common& c, const std::string& corpus) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto entries = corpus == "builtin" ? builtin_corpus() : load_corpus_dir(corpus);
    const auto opts = c.analyze();
    auto results = parallel_map<EntryResult>(entries.size(), [&](std::size_t i) {
        try {
            return verify_entry(entries[i].name, entries[i].input(), opts);
        } catch (const ParseError& e) {
            EntryResult r;
            r.name = entries[i].name;
            r.error = e.what();
            r.input_error = true;
            return r;
        }
    });
    return report_entries(c, envelope("verify", corpus, c.seed), results, t0);
}

int cmd_random(const Common& c, const CampaignOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    if (opts.count < 0 || opts.lines < 0 || (opts.lines > 0 && opts.lines < 3))
        throw ParseError(ParseError::Kind::syntax, 0, "--count must be >= 0 and --lines 0 or >= 3");
    nlohmann::json rep = envelope("random-arrangements", "", opts.seed);
    rep["count"] = opts.count;
    rep["lines"] = opts.lines;
    rep["addition_deletion"] = opts.addition_deletion;
    return report_entries(c, rep, run_campaign(opts), t0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jacobian syzygies, Tjurina numbers and freeness checks for plane curves"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", common.seed, "random seed");
        sub->add_option("--kmax", common.kmax, "largest syzygy degree searched");
        sub->add_option("--mu-mode", common.mu_mode, "polar | assume_quasihomogeneous | arrangement");
        sub->add_flag("--strict", common.strict, "deterministic squarefree test");
        sub->add_flag("--json-only", common.json_only, "no summary on stderr");
    };

    std::string curve, arr, corpus = "builtin", line_text;
    int line_index = -1;
    CampaignOptions campaign;

    auto* analyze = app.add_subcommand("analyze", "full report for a curve");
    analyze->add_option("curve", curve, "polynomial expression")->required();
    add_common(analyze);

    auto* arrangement = app.add_subcommand("arrangement", "line arrangement analytics");
    arrangement->add_option("input", arr, "arrangement file or product of lines")->required();
    add_common(arrangement);

    auto* del = app.add_subcommand("delete", "delete a line from a free arrangement");
    del->add_option("input", arr, "arrangement file or product of lines")->required();
    del->add_option("--line", line_index, "0-based index of the line")->required();
    add_common(del);

    auto* add = app.add_subcommand("add", "add a line to a free arrangement");
    add->add_option("input", arr, "arrangement file or product of lines")->required();
    add->add_option("--line", line_text, "\"a*x+b*y+c*z\" or \"a b c\"")->required();
    add_common(add);

    auto* verify = app.add_subcommand("verify", "run every check over a corpus");
    verify->add_option("--corpus", corpus, "builtin or a directory of .poly/.lines files");
    add_common(verify);

    auto* random = app.add_subcommand("random-arrangements", "seeded property campaign");
    random->add_option("--count", campaign.count, "number of arrangements");
    random->add_option("--lines", campaign.lines, "lines per arrangement (0: random in [3, 10])");
    random->add_flag("--addition-deletion", campaign.addition_deletion,
                     "also add and delete lines on random supersolvable arrangements");
    add_common(random);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        if (*analyze) return cmd_analyze(common, curve);
        if (*arrangement) return cmd_arrangement(common, arr);
        if (*del) return cmd_delete(common, arr, line_index);
        if (*add) return cmd_add(common, arr, line_text);
        if (*verify) return cmd_verify(common, corpus);
        if (*random) {
            campaign.seed = common.seed;
            return cmd_random(common, campaign);
        }
    } catch (const ParseError& e) {
        std::cerr << "input error (" << to_string(e.kind) << "): " << e.what() << '\n';
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
    return kInternalError;
}
