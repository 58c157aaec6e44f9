#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace replab {

/// Non-negative rational in lowest terms. Comparisons cross-multiply in
/// 128-bit arithmetic; nothing here touches floating point.
class Rational {
  public:
    Rational() = default;
    Rational(std::uint64_t numerator, std::uint64_t denominator = 1);

    std::uint64_t numerator() const noexcept { return num_; }
    std::uint64_t denominator() const noexcept { return den_; }

    /// Always "p/q", including integers ("2/1").
    std::string to_string() const;

    /// Accepts "p/q" or a bare integer "p".
    static Rational parse(std::string_view text);

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    bool operator==(const Rational& other) const = default;
    std::strong_ordering operator<=>(const Rational& other) const;

  private:
    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

/// Bound on the exponent of factors: "avoid p powers" (inclusive, e >= p is
/// forbidden) or "avoid p+ powers" (exclusive, only e > p is forbidden), or
/// unbounded. A present bound is always > 1.
class ExponentThreshold {
  public:
    /// Unbounded: forbids nothing.
    ExponentThreshold() = default;
    ExponentThreshold(Rational bound, bool inclusive);

    static ExponentThreshold unbounded() { return {}; }

    /// Grammar: "inf" | "N" | "N+" | "P/Q" | "P/Q+".
    static ExponentThreshold parse(std::string_view text);

    bool is_unbounded() const noexcept { return !bound_.has_value(); }
    const std::optional<Rational>& bound() const noexcept { return bound_; }
    bool inclusive() const noexcept { return inclusive_; }

    /// True when a factor of the given length and period has a forbidden
    /// exponent, i.e. length/period >= bound (inclusive) or > bound.
    bool forbids(std::uint64_t length, std::uint64_t period) const;
    bool forbids(const Rational& exponent) const;

    /// Smallest length whose exponent over `period` is forbidden, or nullopt
    /// when unbounded.
    std::optional<std::uint64_t> shortest_forbidden_length(std::uint64_t period) const;

    /// Inverse of parse; integers render without "/1".
    std::string to_string() const;

    bool operator==(const ExponentThreshold& other) const = default;

  private:
    std::optional<Rational> bound_;
    bool inclusive_ = true;
};

}  // namespace replab
