#include "replab/json_io.hpp"

namespace replab::json_io {

json words_to_json(const std::vector<Word>& words) {
    json out = json::array();
    for (const auto& w : words) out.push_back(w.to_string());
    return out;
}

json to_json(const Violation& v) {
    return {{"kind", to_string(v.kind)},
            {"start", v.start},
            {"length", v.length},
            {"period", v.period},
            {"exponent", v.exponent.to_string()}};
}

json to_json(const AvoidanceSpec& spec, const SearchOutcome& outcome) {
    json out = {{"l", spec.min_square_period()}, {"power", spec.power().to_string()}};
    if (const auto* report = std::get_if<TreeReport>(&outcome)) {
        out["finite"] = true;
        out["leaves"] = report->leaves;
        out["height"] = report->height;
        out["t"] = report->maximal_count;
        out["internal_count"] = report->internal_count;
        out["maximal_words"] = words_to_json(report->maximal_words_starting_with_zero);
        out["per_depth_counts"] = report->per_depth_counts;
    } else {
        const auto& inconclusive = std::get<Inconclusive>(outcome);
        out["finite"] = false;
        out["depth_reached"] = inconclusive.depth_reached;
        out["frontier_size"] = inconclusive.frontier_size;
    }
    return out;
}

json to_json(const CountTable& table) {
    json rows = json::array();
    for (std::size_t n = 0; n < table.counts.size(); ++n) {
        rows.push_back({{"n", n}, {"count", table.counts[n]}});
    }
    json out = {{"rows", rows}};
    if (table.spec) {
        out["l"] = table.spec->min_square_period();
        out["power"] = table.spec->power().to_string();
    }
    return out;
}

json to_json(const GrowthEstimate& e) {
    json out = {{"kind", to_string(e.kind)},
                {"value", e.value},
                {"certified_digits", e.certified_digits},
                {"lower", e.lower},
                {"upper", e.upper}};
    if (e.kind == GrowthKind::UpperAutomaton) out["state_count"] = e.state_count;
    return out;
}

json to_json(const UniformMorphism& m) {
    json images = json::array();
    for (const auto& img : m.images()) images.push_back(img.to_string());
    return {{"name", m.name()},
            {"width", m.width()},
            {"source_alphabet", m.source_alphabet()},
            {"target_alphabet", m.target_alphabet()},
            {"images", images}};
}

json to_json(const BlockAnalysis& a) {
    json counts = json::object();
    for (const auto& [len, count] : a.surviving_word_count_by_length) {
        counts[std::to_string(len)] = count;
    }
    return {{"k", a.k},
            {"candidate_blocks", words_to_json(a.candidate_blocks)},
            {"surviving_word_count_by_length", counts},
            {"exhausted", a.exhausted},
            {"appears_unbounded", a.appears_unbounded}};
}

json to_json(const AvoidedBlockReport& r) {
    return {{"morphism", r.morphism},
            {"l", r.spec.min_square_period()},
            {"power", r.spec.power().to_string()},
            {"window", r.window},
            {"avoided", words_to_json(r.avoided)}};
}

json to_json(const InclusionCounterexample& c) {
    return {{"a", c.a}, {"b", c.b}, {"c", c.c}, {"offset", c.offset}};
}

json to_json(const InterchangeCounterexample& c) {
    return {{"a", c.a}, {"b", c.b}, {"c", c.c}, {"split", c.split}};
}

json to_json(const DistinctnessCounterexample& c) { return {{"a", c.a}, {"b", c.b}}; }

json to_json(const ImageCounterexample& c) {
    return {{"source", c.source.to_string()}, {"violation", to_json(c.violation)}};
}

}  // namespace replab::json_io
