#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "replab/avoidance.hpp"
#include "replab/morphism.hpp"
#include "replab/word.hpp"

namespace replab {

/// Outcome of splitting avoiding words into aligned k-blocks and keeping
/// only words that use at most `max_blocks` distinct blocks.
struct BlockAnalysis {
    std::size_t k = 0;
    std::vector<Word> candidate_blocks;  // sorted; blocks of the longest survivors
    std::map<std::size_t, std::uint64_t> surviving_word_count_by_length;
    bool exhausted = false;
    // Survivor counts never decreased over the last three lengths. A
    // heuristic stand-in for "keeps growing", nothing more.
    bool appears_unbounded = false;
};

struct AvoidedBlockReport {
    std::string morphism;
    AvoidanceSpec spec;
    std::size_t window = 0;
    std::vector<Word> avoided;  // sorted by (length, lex)
};

BlockAnalysis block_filter(const AvoidanceSpec& spec, std::size_t k, std::size_t max_blocks,
                           std::size_t max_len);

/// Source words b with |b| <= window whose image violates `spec` while the
/// images of b minus its first or last letter do not.
AvoidedBlockReport infer_avoided_blocks(const UniformMorphism& m, const AvoidanceSpec& spec,
                                        std::size_t window);

/// Every `alphabet`-subset of the candidate blocks of block_filter(spec, k,
/// alphabet, corpus_len), letters assigned in lexicographic block order,
/// that passes distinctness, inclusion, interchange and the length-5 image
/// check. Sorted by image tuple.
std::vector<UniformMorphism> propose_morphisms(const AvoidanceSpec& spec, std::size_t k,
                                               int alphabet, std::size_t corpus_len);

/// Same, starting from an existing analysis.
std::vector<UniformMorphism> propose_morphisms(const AvoidanceSpec& spec,
                                               const BlockAnalysis& analysis, int alphabet);

}  // namespace replab
