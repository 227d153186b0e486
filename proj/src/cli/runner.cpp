#include "jacsyz/cli/report.hpp"

#include <random>

namespace jacsyz::cli {

EntryResult verify_entry(const std::string& name, const CurveInput& in, const AnalyzeOptions& opts) {
    EntryResult r;
    r.name = name;
    try {
        auto an = analyze_curve(in, opts);
        r.report = std::move(an.report);
        r.verdicts = std::move(an.verdicts);
        if (an.arrangement && an.numbers.exponents.size() == 2) {
            nlohmann::json dels = nlohmann::json::array();
            const auto& a = an.arrangement->arrangement;
            for (int i = 0; i < a.size(); ++i) {
                auto rec = deletion_classify(a, an.numbers.exponents, i);
                dels.push_back(rec.verdict.to_json());
                r.verdicts.push_back(std::move(rec.verdict));
            }
            r.report["deletions"] = dels;
        }
    } catch (const ParseError& e) {
        r.error = e.what();
        r.input_error = true;
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    return r;
}

namespace {

EntryResult campaign_entry(const CampaignOptions& opts, std::size_t i) {
    EntryResult r;
    r.name = "random_" + std::to_string(i);
    std::mt19937_64 rng(opts.seed * 0x9E3779B97F4A7C15ULL + i);
    const int d = opts.lines > 0 ? opts.lines : std::uniform_int_distribution<int>(3, 10)(rng);
    try {
        const Arrangement a = random_arrangement(d, rng);
        auto an = analyze_arrangement(a);
        r.verdicts = an.verdicts;
        r.verdicts.push_back(cor2_bounds(d, an.syzygies.exponents, *an.syzygies.tau));
        r.report = an.report;
        r.report["verdicts"] = verdicts_json(r.verdicts);
        if (opts.addition_deletion) {
            const Arrangement s = random_supersolvable(std::min(d, 9), rng);
            const auto lat = intersection_lattice(s);
            const auto sy = arrangement_syzygies(s, false);
            nlohmann::json sj = {{"lines", nlohmann::json::array()}, {"exponents", sy.exponents}};
            for (const auto& l : s.lines()) sj["lines"].push_back(line_json(l));
            const bool free = sy.exponents.size() == 2;
            r.verdicts.push_back(make_verdict("supersolvable_free", free, {{"exponents", sy.exponents}}));
            if (free) {
                const Line l = random_line_for(s, lat, rng);
                auto add = addition_classify(s, sy.exponents, l);
                sj["added_line"] = line_json(l);
                sj["addition"] = add.verdict.to_json();
                r.verdicts.push_back(add.verdict);
                const int idx = std::uniform_int_distribution<int>(0, s.size() - 1)(rng);
                auto del = deletion_classify(s, sy.exponents, idx);
                sj["deletion"] = del.verdict.to_json();
                r.verdicts.push_back(del.verdict);
            }
            r.report["supersolvable"] = sj;
        }
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    return r;
}

}  // namespace

std::vector<EntryResult> run_campaign(const CampaignOptions& opts) {
    return parallel_map<EntryResult>(static_cast<std::size_t>(opts.count),
                                     [&](std::size_t i) { return campaign_entry(opts, i); });
}

}  // namespace jacsyz::cli
