#pragma once

#include <json.hpp>

#include "replab/avoidance.hpp"
#include "replab/discovery.hpp"
#include "replab/enumeration.hpp"
#include "replab/morphism.hpp"
#include "replab/treesearch.hpp"

// JSON renderings used by the command-line tool. Objects are key-sorted by
// nlohmann::json itself; words are digit strings and rationals "p/q".
namespace replab::json_io {

using nlohmann::json;

json to_json(const Violation& v);
json to_json(const AvoidanceSpec& spec, const SearchOutcome& outcome);
json to_json(const CountTable& table);
json to_json(const GrowthEstimate& estimate);
json to_json(const UniformMorphism& m);
json to_json(const BlockAnalysis& analysis);
json to_json(const AvoidedBlockReport& report);
json to_json(const InclusionCounterexample& c);
json to_json(const InterchangeCounterexample& c);
json to_json(const DistinctnessCounterexample& c);
json to_json(const ImageCounterexample& c);

json words_to_json(const std::vector<Word>& words);

}  // namespace replab::json_io
