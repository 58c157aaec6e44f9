#include "replab/word.hpp"

#include <algorithm>

#include "replab/error.hpp"

namespace replab {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyWord: return "EmptyWord";
        case ErrorCode::InvalidSymbol: return "InvalidSymbol";
        case ErrorCode::InvalidSpec: return "InvalidSpec";
        case ErrorCode::ViolatingWord: return "ViolatingWord";
        case ErrorCode::NotFinite: return "NotFinite";
        case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
        case ErrorCode::UnknownMorphism: return "UnknownMorphism";
        case ErrorCode::InvalidMorphism: return "InvalidMorphism";
        case ErrorCode::Parse: return "Parse";
        case ErrorCode::Io: return "Io";
        case ErrorCode::Overflow: return "Overflow";
    }
    return "Unknown";
}

namespace {

void check_alphabet(int alphabet_size) {
    if (alphabet_size < 1 || alphabet_size > kMaxAlphabet) {
        throw Error(ErrorCode::InvalidSymbol,
                    "alphabet size " + std::to_string(alphabet_size) + " outside [1, 10]");
    }
}

void check_symbol(Symbol s, int alphabet_size) {
    if (s >= alphabet_size) {
        throw Error(ErrorCode::InvalidSymbol, "symbol " + std::to_string(int{s}) +
                                                  " outside alphabet of size " +
                                                  std::to_string(alphabet_size));
    }
}

}  // namespace

Word::Word(int alphabet_size) : alphabet_size_(alphabet_size) { check_alphabet(alphabet_size); }

Word::Word(std::vector<Symbol> symbols, int alphabet_size)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
    check_alphabet(alphabet_size);
    for (Symbol s : symbols_) check_symbol(s, alphabet_size);
}

Word Word::parse(std::string_view digits, int alphabet_size) {
    check_alphabet(alphabet_size);
    std::vector<Symbol> symbols;
    symbols.reserve(digits.size());
    for (char c : digits) {
        if (c < '0' || c > '9') {
            throw Error(ErrorCode::InvalidSymbol,
                        std::string("non-digit character '") + c + "' in word");
        }
        symbols.push_back(static_cast<Symbol>(c - '0'));
    }
    return Word(std::move(symbols), alphabet_size);
}

void Word::push_back(Symbol s) {
    check_symbol(s, alphabet_size_);
    symbols_.push_back(s);
}

void Word::append(const Word& other) {
    if (other.alphabet_size_ > alphabet_size_) {
        for (Symbol s : other.symbols_) check_symbol(s, alphabet_size_);
    }
    symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
}

Word Word::factor(std::size_t start, std::size_t length) const {
    start = std::min(start, symbols_.size());
    length = std::min(length, symbols_.size() - start);
    Word out(alphabet_size_);
    out.symbols_.assign(symbols_.begin() + static_cast<std::ptrdiff_t>(start),
                        symbols_.begin() + static_cast<std::ptrdiff_t>(start + length));
    return out;
}

Word Word::complement() const {
    Word out(alphabet_size_);
    out.symbols_.reserve(symbols_.size());
    for (Symbol s : symbols_) out.symbols_.push_back(static_cast<Symbol>(alphabet_size_ - 1 - s));
    return out;
}

std::string Word::to_string() const {
    std::string out;
    out.reserve(symbols_.size());
    for (Symbol s : symbols_) out.push_back(static_cast<char>('0' + s));
    return out;
}

std::strong_ordering Word::operator<=>(const Word& other) const {
    if (auto c = std::lexicographical_compare_three_way(symbols_.begin(), symbols_.end(),
                                                        other.symbols_.begin(),
                                                        other.symbols_.end());
        c != 0) {
        return c;
    }
    return alphabet_size_ <=> other.alphabet_size_;
}

Word operator+(const Word& lhs, const Word& rhs) {
    Word out(std::max(lhs.alphabet_size(), rhs.alphabet_size()));
    out.append(lhs);
    out.append(rhs);
    return out;
}

}  // namespace replab
