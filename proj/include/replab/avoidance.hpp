#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "replab/rational.hpp"
#include "replab/word.hpp"

namespace replab {

/// The pair (l, p): forbid squares yy with |y| >= l and factors whose
/// exponent crosses the threshold p.
class AvoidanceSpec {
  public:
    AvoidanceSpec(std::size_t min_square_period, ExponentThreshold power);

    std::size_t min_square_period() const noexcept { return min_square_period_; }
    const ExponentThreshold& power() const noexcept { return power_; }

    /// "(l, p)" with p in threshold grammar, e.g. "(4, 5/2+)".
    std::string to_string() const;

    bool operator==(const AvoidanceSpec& other) const = default;

  private:
    std::size_t min_square_period_;
    ExponentThreshold power_;
};

enum class ViolationKind { LargeSquare, ForbiddenPower };

const char* to_string(ViolationKind kind);

/// Witness that a word fails a spec: w[start, start + length) has the given
/// period and exponent = length / period. For LargeSquare the factor is yy
/// with |y| = period >= l, so the exponent is always 2.
struct Violation {
    ViolationKind kind;
    std::size_t start;
    std::size_t length;
    std::size_t period;
    Rational exponent;

    std::size_t end() const noexcept { return start + length; }
    bool operator==(const Violation& other) const = default;
};

std::size_t minimal_period(std::span<const Symbol> w);
std::size_t minimal_period(const Word& w);

/// |w| / minimal_period(w).
Rational max_exponent(const Word& w);

/// Earliest violation of `spec` in `w`: smallest end index, then smallest
/// length; at equal length a square is reported before a power.
std::optional<Violation> find_violation(std::span<const Symbol> w, const AvoidanceSpec& spec);
std::optional<Violation> find_violation(const Word& w, const AvoidanceSpec& spec);

inline bool avoids(const Word& w, const AvoidanceSpec& spec) {
    return !find_violation(w, spec).has_value();
}

/// Shortest violating factor that is a suffix of `w` (ties as above), or
/// nullopt. `scratch` is reused between calls to avoid allocation.
std::optional<Violation> violation_at_end(std::span<const Symbol> w, const AvoidanceSpec& spec,
                                          std::vector<std::size_t>& scratch);

/// Mutable push/pop checker for depth-first searches. The word held is
/// always spec-avoiding once push() has returned nullopt; a push that
/// reports a violation leaves the offending symbol in place so the caller
/// decides when to pop it.
class IncrementalChecker {
  public:
    IncrementalChecker(AvoidanceSpec spec, int alphabet_size = 2);

    std::optional<Violation> push(Symbol s);
    void pop() { word_.pop_back(); }

    std::span<const Symbol> word() const noexcept { return word_; }
    std::size_t size() const noexcept { return word_.size(); }
    const AvoidanceSpec& spec() const noexcept { return spec_; }
    int alphabet_size() const noexcept { return alphabet_size_; }

  private:
    AvoidanceSpec spec_;
    int alphabet_size_;
    std::vector<Symbol> word_;
    std::vector<std::size_t> scratch_;
};

/// Immutable snapshot of an avoiding word, cheap to copy for branching.
class CheckerState {
  public:
    /// Throws ViolatingWord when `word` does not avoid `spec`.
    CheckerState(AvoidanceSpec spec, Word word);
    explicit CheckerState(AvoidanceSpec spec) : CheckerState(std::move(spec), Word()) {}

    const AvoidanceSpec& spec() const noexcept { return spec_; }
    const Word& word() const noexcept { return word_; }

  private:
    struct Trusted {};
    CheckerState(Trusted, AvoidanceSpec spec, Word word)
        : spec_(std::move(spec)), word_(std::move(word)) {}

    AvoidanceSpec spec_;
    Word word_;

    friend std::pair<CheckerState, std::optional<Violation>> extend_and_check(
        const CheckerState& state, Symbol a);
};

/// State for word.a plus the violation (if any) among factors ending at the
/// new last position.
std::pair<CheckerState, std::optional<Violation>> extend_and_check(const CheckerState& state,
                                                                   Symbol a);

}  // namespace replab
