#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "replab/avoidance.hpp"
#include "replab/word.hpp"

namespace replab {

inline constexpr std::size_t kDefaultMaxDepth = 200;

/// Statistics of a finite tree T(l, p) of binary words avoiding a spec.
/// Internal nodes are the avoiding words; leaves are the first violating
/// extensions.
struct TreeReport {
    std::uint64_t leaves = 0;
    std::size_t height = 0;
    std::uint64_t maximal_count = 0;
    std::vector<Word> maximal_words_starting_with_zero;  // sorted
    std::uint64_t internal_count = 0;
    std::vector<std::uint64_t> per_depth_counts;  // internal nodes at each depth 0..height-1

    bool operator==(const TreeReport& other) const = default;
};

/// The search reached `depth_reached` = max_depth. `frontier_size` counts the
/// avoiding words of that length seen before the search stopped; it is a
/// lower bound on the true frontier (at least 1).
struct Inconclusive {
    std::size_t depth_reached = 0;
    std::uint64_t frontier_size = 0;

    bool operator==(const Inconclusive& other) const = default;
};

using SearchOutcome = std::variant<TreeReport, Inconclusive>;

struct SearchOptions {
    std::size_t max_depth = kDefaultMaxDepth;
    unsigned threads = 1;
};

/// Exhaustive search of T(spec). Finite when no avoiding word of length
/// max_depth exists; otherwise Inconclusive.
SearchOutcome explore(const AvoidanceSpec& spec, const SearchOptions& options = {});
SearchOutcome explore(const AvoidanceSpec& spec, std::size_t max_depth);

/// All words of maximal length avoiding `spec` (both complement classes),
/// sorted. Throws NotFinite when the search is inconclusive.
std::vector<Word> longest_avoiding_words(const AvoidanceSpec& spec,
                                         const SearchOptions& options = {});

/// counts[n] = number of binary words of length n avoiding `spec`, for
/// 0 <= n <= n_max.
std::vector<std::uint64_t> count_by_length(const AvoidanceSpec& spec, std::size_t n_max,
                                           unsigned threads = 1);

}  // namespace replab
