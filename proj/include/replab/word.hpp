#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace replab {

using Symbol = std::uint8_t;

inline constexpr int kMaxAlphabet = 10;

/// A finite word over the alphabet {0, ..., alphabet_size - 1}.
///
/// Symbols are validated on construction, so every Word in circulation
/// satisfies 0 <= s < alphabet_size. Alphabets are capped at 10 so that
/// words always render as plain digit strings.
class Word {
  public:
    Word() = default;
    explicit Word(int alphabet_size);
    Word(std::vector<Symbol> symbols, int alphabet_size);

    /// Parses a digit string such as "0010111010". An empty string gives
    /// the empty word.
    static Word parse(std::string_view digits, int alphabet_size = 2);

    std::span<const Symbol> symbols() const noexcept { return symbols_; }
    int alphabet_size() const noexcept { return alphabet_size_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }

    void push_back(Symbol s);
    void append(const Word& other);

    Word factor(std::size_t start, std::size_t length) const;
    Word prefix(std::size_t length) const { return factor(0, length); }

    /// Maps each symbol s to alphabet_size - 1 - s (0 <-> 1 on binary words).
    Word complement() const;

    std::string to_string() const;

    bool operator==(const Word& other) const = default;
    std::strong_ordering operator<=>(const Word& other) const;

  private:
    std::vector<Symbol> symbols_;
    int alphabet_size_ = 2;
};

Word operator+(const Word& lhs, const Word& rhs);

}  // namespace replab
