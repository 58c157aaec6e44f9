#include "replab/repro.hpp"

#include <cmath>
#include <cstdio>

#include "replab/enumeration.hpp"
#include "replab/reference.hpp"
#include "replab/registry.hpp"
#include "replab/treesearch.hpp"

namespace replab {

namespace {

std::string fixed(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, value);
    return buf;
}

AvoidanceSpec make_spec(std::size_t l, const char* power) {
    return AvoidanceSpec(l, ExponentThreshold::parse(power));
}

void tree_checks(std::vector<ReproCheck>& checks, unsigned threads) {
    for (const auto& row : reference::tree_rows()) {
        const auto spec = make_spec(row.l, row.power);
        ReproCheck check{"tree " + spec.to_string(), false, ""};
        const auto outcome = explore(spec, SearchOptions{kDefaultMaxDepth, threads});
        if (const auto* report = std::get_if<TreeReport>(&outcome)) {
            std::vector<Word> expected;
            for (const char* w : row.maximal_words_starting_with_zero) expected.push_back(Word::parse(w));
            check.pass = report->leaves == row.leaves && report->height == row.height &&
                         report->maximal_count == row.maximal_count &&
                         report->maximal_words_starting_with_zero == expected;
            check.detail = "n=" + std::to_string(report->leaves) + " h=" +
                           std::to_string(report->height) + " t=" +
                           std::to_string(report->maximal_count);
        } else {
            check.detail = "search did not terminate";
        }
        checks.push_back(std::move(check));
    }
}

void count_checks(std::vector<ReproCheck>& checks, unsigned threads) {
    for (const auto& column : reference::count_columns()) {
        const auto spec = make_spec(column.l, column.power);
        const auto table = count_avoiding(spec, column.values.size() - 1, threads);
        ReproCheck check{std::string("counts ") + column.name + " " + spec.to_string(),
                         table.counts == column.values, ""};
        check.detail = "n=25 count " + std::to_string(table.counts.back());
        checks.push_back(std::move(check));
    }
}

void morphism_checks(std::vector<ReproCheck>& checks) {
    const auto& registry = MorphismRegistry::builtin();
    for (const char* name : {"f", "g", "h"}) {
        const auto& m = registry.find(name);
        const auto spec = *target_spec(name);
        const auto images = check_images_avoid(m, spec, 5);
        const bool pass = check_distinct(m).empty() && check_inclusion(m).empty() &&
                          check_interchange(m).empty() && images.ok() &&
                          images.words_checked_by_length[5] == 30;
        checks.push_back({std::string("morphism ") + name + " " + spec.to_string(), pass,
                          "width " + std::to_string(m.width())});

        const std::size_t n = 10 * m.width();
        const bool avoids_spec = avoids(generate_avoiding(name, n), spec);
        checks.push_back({std::string("generated ") + name + " prefix", avoids_spec,
                          "length " + std::to_string(n)});
    }
}

void growth_checks(std::vector<ReproCheck>& checks) {
    const auto tribonacci = growth_upper(ForbiddenSet::from_words({Word::parse("0000"), Word::parse("1111")}));
    checks.push_back({"growth {0000,1111}",
                      std::abs(tribonacci.value - 1.8392868) <= 1e-6 && tribonacci.value < 1.84,
                      fixed(tribonacci.value, 9)});
    for (const auto& target : reference::growth_targets()) {
        const auto spec = make_spec(target.l, target.power);
        const auto forbidden = minimal_forbidden(spec, target.max_len);
        const auto estimate = growth_upper(forbidden);
        checks.push_back({"growth upper " + spec.to_string(),
                          std::abs(estimate.value - target.dominant_zero) <= 1e-2,
                          fixed(estimate.value, 7) + " from " + std::to_string(forbidden.size()) +
                              " words"});
    }
    const double f_rate = growth_lower_from_morphism(10, reference::kSquarefreeTernaryGrowth).value;
    checks.push_back({"growth lower f", f_rate > 1.01, fixed(f_rate, 9)});
    const double g_rate = growth_lower_from_morphism(1560, reference::kSquarefreeTernaryGrowth).value;
    checks.push_back({"growth lower g", std::abs(g_rate - 1.000066899) <= 1e-6, fixed(g_rate, 9)});
    const double h_rate = growth_lower_from_morphism(252, reference::kSquarefreeTernaryGrowth).value;
    checks.push_back({"growth lower h", std::abs(h_rate - 1.0004142) <= 1e-6, fixed(h_rate, 9)});
}

}  // namespace

std::vector<ReproCheck> run_repro(unsigned threads) {
    std::vector<ReproCheck> checks;
    tree_checks(checks, threads);
    count_checks(checks, threads);
    morphism_checks(checks);
    growth_checks(checks);
    return checks;
}

}  // namespace replab
