#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

// Reference values checked by the `repro` command.
namespace replab::reference {

struct TreeRow {
    std::size_t l;
    const char* power;
    std::uint64_t leaves;
    std::size_t height;
    std::uint64_t maximal_count;
    std::vector<const char*> maximal_words_starting_with_zero;
};

/// Tree statistics for (l, p) at the optimal exponent, 2 <= l <= 7.
const std::vector<TreeRow>& tree_rows();

struct CountColumn {
    const char* name;
    std::size_t l;
    const char* power;
    std::vector<std::uint64_t> values;  // n = 0..25
};

const std::vector<CountColumn>& count_columns();

/// Dominant zeros reported for forbidden lists of words up to `max_len`.
struct GrowthTarget {
    std::size_t l;
    const char* power;
    std::size_t max_len;
    double dominant_zero;
};

const std::vector<GrowthTarget>& growth_targets();

inline constexpr double kSquarefreeTernaryGrowth = 1.109999;

}  // namespace replab::reference
