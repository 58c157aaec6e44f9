#include "replab/rational.hpp"

#include <charconv>
#include <numeric>

#include "replab/error.hpp"

namespace replab {

__extension__ using u128 = unsigned __int128;

Rational::Rational(std::uint64_t numerator, std::uint64_t denominator) {
    if (denominator == 0) throw Error(ErrorCode::Parse, "rational with zero denominator");
    const std::uint64_t g = std::gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
}

std::string Rational::to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

std::uint64_t parse_u64(std::string_view text, std::string_view context) {
    std::uint64_t value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc() || ptr != last) {
        throw Error(ErrorCode::Parse,
                    "malformed number '" + std::string(text) + "' in '" + std::string(context) + "'");
    }
    return value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_u64(text, text));
    const auto den = parse_u64(text.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
    return Rational(parse_u64(text.substr(0, slash), text), den);
}

std::strong_ordering Rational::operator<=>(const Rational& other) const {
    return u128{num_} * other.den_ <=> u128{other.num_} * den_;
}

ExponentThreshold::ExponentThreshold(Rational bound, bool inclusive)
    : bound_(bound), inclusive_(inclusive) {
    if (bound <= Rational(1)) {
        throw Error(ErrorCode::InvalidSpec,
                    "exponent bound " + bound.to_string() + " must exceed 1");
    }
}

ExponentThreshold ExponentThreshold::parse(std::string_view text) {
    if (text == "inf") return unbounded();
    bool inclusive = true;
    if (!text.empty() && text.back() == '+') {
        inclusive = false;
        text.remove_suffix(1);
    }
    return ExponentThreshold(Rational::parse(text), inclusive);
}

bool ExponentThreshold::forbids(std::uint64_t length, std::uint64_t period) const {
    if (!bound_) return false;
    const u128 lhs = u128{length} * bound_->denominator();
    const u128 rhs = u128{bound_->numerator()} * period;
    return inclusive_ ? lhs >= rhs : lhs > rhs;
}

bool ExponentThreshold::forbids(const Rational& exponent) const {
    return forbids(exponent.numerator(), exponent.denominator());
}

std::optional<std::uint64_t> ExponentThreshold::shortest_forbidden_length(
    std::uint64_t period) const {
    if (!bound_) return std::nullopt;
    const u128 scaled = u128{bound_->numerator()} * period;
    const u128 den = bound_->denominator();
    // inclusive: ceil(a p / b); exclusive: floor(a p / b) + 1
    const u128 len = inclusive_ ? (scaled + den - 1) / den : scaled / den + 1;
    return static_cast<std::uint64_t>(len);
}

std::string ExponentThreshold::to_string() const {
    if (!bound_) return "inf";
    std::string out = bound_->denominator() == 1 ? std::to_string(bound_->numerator())
                                                 : bound_->to_string();
    if (!inclusive_) out += "+";
    return out;
}

}  // namespace replab
