#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "replab/avoidance.hpp"
#include "replab/word.hpp"

namespace replab {

/// A k-uniform morphism Σ_m* -> Σ_t*: every letter maps to a word of length
/// exactly k over the target alphabet.
///
/// Construction checks shapes only (counts, widths, alphabets). Letter
/// injectivity is a property to verify (check_distinct), not an invariant,
/// so that broken candidates can still be built and reported on.
class UniformMorphism {
  public:
    UniformMorphism(std::string name, int target_alphabet, std::vector<Word> images);

    static UniformMorphism identity(int alphabet);

    const std::string& name() const noexcept { return name_; }
    int source_alphabet() const noexcept { return static_cast<int>(images_.size()); }
    int target_alphabet() const noexcept { return target_alphabet_; }
    std::size_t width() const noexcept { return width_; }
    const std::vector<Word>& images() const noexcept { return images_; }
    const Word& image(Symbol letter) const { return images_.at(letter); }

    UniformMorphism renamed(std::string name) const;

    bool operator==(const UniformMorphism& other) const = default;

  private:
    std::string name_;
    int target_alphabet_;
    std::size_t width_;
    std::vector<Word> images_;
};

/// Concatenation of letter images. Throws InvalidSymbol for letters outside
/// the source alphabet.
Word apply(const UniformMorphism& m, const Word& w);

/// outer ∘ inner (inner applied first). Throws AlphabetMismatch unless
/// inner's target alphabet fits in outer's source alphabet.
UniformMorphism compose(const UniformMorphism& outer, const UniformMorphism& inner);

// m(c) occurs in m(a)m(b) at an offset other than 0 or k.
struct InclusionCounterexample {
    Symbol a, b, c;
    std::size_t offset;
    bool operator==(const InclusionCounterexample&) const = default;
};

// m(c) = m(a)[0, split) m(b)[split, k) with c != a and c != b.
struct InterchangeCounterexample {
    Symbol a, b, c;
    std::size_t split;
    bool operator==(const InterchangeCounterexample&) const = default;
};

struct DistinctnessCounterexample {
    Symbol a, b;
    bool operator==(const DistinctnessCounterexample&) const = default;
};

struct ImageCounterexample {
    Word source;
    Violation violation;
};

struct ImageCheckResult {
    std::vector<std::size_t> words_checked_by_length;  // index = source length
    std::vector<ImageCounterexample> counterexamples;

    bool ok() const noexcept { return counterexamples.empty(); }
};

/// Shortest lengths that tell images apart from the left and from the right.
/// A value of width + 1 means two letters share an entire image.
struct Distinguishability {
    std::size_t prefix_length;
    std::size_t suffix_length;
};

std::vector<InclusionCounterexample> check_inclusion(const UniformMorphism& m);
std::vector<InterchangeCounterexample> check_interchange(const UniformMorphism& m);
std::vector<DistinctnessCounterexample> check_distinct(const UniformMorphism& m);
Distinguishability distinguishability(const UniformMorphism& m);

/// Applies `m` to every squarefree word over its source alphabet of length
/// 1..source_len and reports images that violate `spec`.
ImageCheckResult check_images_avoid(const UniformMorphism& m, const AvoidanceSpec& spec,
                                    std::size_t source_len);

/// All squarefree words of exactly `length` over Σ_alphabet, in
/// lexicographic order.
std::vector<Word> squarefree_words(int alphabet, std::size_t length);

/// Length-n prefix of the fixed point of 2 -> 210, 1 -> 20, 0 -> 1.
Word squarefree_ternary(std::size_t n);

}  // namespace replab
