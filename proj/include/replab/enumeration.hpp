#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "replab/avoidance.hpp"
#include "replab/word.hpp"

namespace replab {

/// counts[n] = number of binary words of length n avoiding a constraint.
/// `spec` is empty for tables produced from a bare forbidden set.
struct CountTable {
    std::optional<AvoidanceSpec> spec;
    std::vector<std::uint64_t> counts;
};

/// Finite set of binary forbidden factors, kept sorted by (length, lex).
class ForbiddenSet {
  public:
    ForbiddenSet() = default;
    ForbiddenSet(std::vector<Word> words, std::size_t max_len);
    static ForbiddenSet from_words(std::vector<Word> words);
    static ForbiddenSet parse_lines(std::string_view text);

    const std::vector<Word>& words() const noexcept { return words_; }
    std::size_t size() const noexcept { return words_.size(); }
    bool empty() const noexcept { return words_.empty(); }
    std::size_t max_len() const noexcept { return max_len_; }

    /// Number of {w, complement(w)} classes among the members.
    std::size_t complement_classes() const;

    /// Newline-separated digit strings.
    std::string to_lines() const;

  private:
    std::vector<Word> words_;
    std::size_t max_len_ = 0;
};

enum class GrowthKind { UpperAutomaton, LowerMorphism, RecurrenceRoot };

const char* to_string(GrowthKind kind);

struct GrowthEstimate {
    GrowthKind kind;
    double value = 0.0;
    int certified_digits = 0;
    std::size_t state_count = 0;  // automaton kinds only
    double lower = 0.0;            // bracket around value
    double upper = 0.0;
};

/// Exact counts of binary words of each length 0..n_max avoiding `spec`.
CountTable count_avoiding(const AvoidanceSpec& spec, std::size_t n_max, unsigned threads = 1);

/// Binary words of length <= max_len that violate `spec` while every proper
/// factor avoids it.
ForbiddenSet minimal_forbidden(const AvoidanceSpec& spec, std::size_t max_len);

/// Transfer-matrix automaton over words of length max_len - 1 avoiding the
/// set; exposed for tests and diagnostics.
struct FactorAutomaton {
    std::size_t state_length = 0;
    std::vector<Word> states;
    std::vector<std::vector<std::uint32_t>> successors;
};

FactorAutomaton build_automaton(const ForbiddenSet& forbidden);

/// Dominant eigenvalue of the automaton's transition matrix; 0 when no
/// infinite word avoids the set.
GrowthEstimate growth_upper(const ForbiddenSet& forbidden);

/// base^(1/width): growth transferred through a width-uniform morphism.
GrowthEstimate growth_lower_from_morphism(std::size_t width, double base = 1.109999);

/// Largest real root of x^d - c_1 x^(d-1) - ... - c_d for the recurrence
/// a_n = c_1 a_(n-1) + ... + c_d a_(n-d) with non-negative coefficients.
GrowthEstimate growth_recurrence(std::span<const std::uint64_t> coefficients);

/// Words of each length 0..n_max containing no member of `forbidden`.
/// Throws Overflow when a count exceeds 64 bits.
CountTable automaton_counts(const ForbiddenSet& forbidden, std::size_t n_max);

}  // namespace replab
