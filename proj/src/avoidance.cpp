#include "replab/avoidance.hpp"

#include <algorithm>
#include <limits>

#include "replab/error.hpp"

namespace replab {

AvoidanceSpec::AvoidanceSpec(std::size_t min_square_period, ExponentThreshold power)
    : min_square_period_(min_square_period), power_(std::move(power)) {
    if (min_square_period_ < 1) {
        throw Error(ErrorCode::InvalidSpec, "minimum square period must be >= 1");
    }
}

std::string AvoidanceSpec::to_string() const {
    return "(" + std::to_string(min_square_period_) + ", " + power_.to_string() + ")";
}

const char* to_string(ViolationKind kind) {
    return kind == ViolationKind::LargeSquare ? "LargeSquare" : "ForbiddenPower";
}

std::size_t minimal_period(std::span<const Symbol> w) {
    if (w.empty()) throw Error(ErrorCode::EmptyWord, "minimal period of the empty word");
    // failure function: border[i] = longest proper border of w[0..i]
    std::vector<std::size_t> border(w.size(), 0);
    std::size_t k = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
        while (k > 0 && w[i] != w[k]) k = border[k - 1];
        if (w[i] == w[k]) ++k;
        border[i] = k;
    }
    return w.size() - border.back();
}

std::size_t minimal_period(const Word& w) { return minimal_period(w.symbols()); }

Rational max_exponent(const Word& w) { return Rational(w.size(), minimal_period(w)); }

namespace {

// z[p] = length of the longest common prefix of rev(w) and rev(w)[p..], so
// the suffix of w of length L has period p exactly when p + z[p] >= L.
void reversed_z(std::span<const Symbol> w, std::vector<std::size_t>& z) {
    const std::size_t n = w.size();
    z.assign(n + 1, 0);
    if (n == 0) return;
    auto rev = [&](std::size_t i) { return w[n - 1 - i]; };
    z[0] = n;
    std::size_t left = 0, right = 0;
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t len = 0;
        if (i < right) len = std::min(right - i, z[i - left]);
        while (i + len < n && rev(len) == rev(i + len)) ++len;
        z[i] = len;
        if (i + len > right) {
            left = i;
            right = i + len;
        }
    }
}

}  // namespace

std::optional<Violation> violation_at_end(std::span<const Symbol> w, const AvoidanceSpec& spec,
                                          std::vector<std::size_t>& z) {
    const std::size_t n = w.size();
    if (n < 2) return std::nullopt;
    reversed_z(w, z);

    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    std::size_t square_period = kNone;
    for (std::size_t p = spec.min_square_period(); 2 * p <= n; ++p) {
        if (z[p] >= p) {
            square_period = p;
            break;
        }
    }
    const std::size_t square_len = square_period == kNone ? kNone : 2 * square_period;

    std::size_t power_len = kNone;
    if (!spec.power().is_unbounded()) {
        for (std::size_t p = 1; p < n && p + 1 <= std::min(power_len, square_len); ++p) {
            const std::size_t need = *spec.power().shortest_forbidden_length(p);
            if (need <= p + z[p]) power_len = std::min(power_len, need);
        }
    }

    if (square_len == kNone && power_len == kNone) return std::nullopt;
    if (square_len <= power_len) {
        return Violation{ViolationKind::LargeSquare, n - square_len, square_len, square_period,
                         Rational(2)};
    }
    std::size_t period = 1;
    while (period + z[period] < power_len) ++period;
    return Violation{ViolationKind::ForbiddenPower, n - power_len, power_len, period,
                     Rational(power_len, period)};
}

std::optional<Violation> find_violation(std::span<const Symbol> w, const AvoidanceSpec& spec) {
    const std::size_t n = w.size();
    const std::size_t l = spec.min_square_period();
    // Locate the earliest end index by scanning runs of w[j] == w[j + p] for
    // every period p, then pin down the exact witness at that end index.
    std::size_t first_end = n;
    for (std::size_t p = 1; p < n; ++p) {
        const bool squares = p >= l;
        const auto need = spec.power().shortest_forbidden_length(p);
        if (!squares && !need) continue;
        std::size_t run = 0;
        for (std::size_t j = 0; j + p < first_end; ++j) {
            run = (w[j] == w[j + p]) ? run + 1 : 0;
            if ((squares && run >= p) || (need && run + p >= *need)) {
                first_end = j + p;
                break;
            }
        }
    }
    if (first_end == n) return std::nullopt;
    std::vector<std::size_t> scratch;
    return violation_at_end(w.first(first_end + 1), spec, scratch);
}

std::optional<Violation> find_violation(const Word& w, const AvoidanceSpec& spec) {
    return find_violation(w.symbols(), spec);
}

IncrementalChecker::IncrementalChecker(AvoidanceSpec spec, int alphabet_size)
    : spec_(std::move(spec)), alphabet_size_(alphabet_size) {}

std::optional<Violation> IncrementalChecker::push(Symbol s) {
    if (s >= alphabet_size_) {
        throw Error(ErrorCode::InvalidSymbol, "symbol " + std::to_string(int{s}) +
                                                  " outside alphabet of size " +
                                                  std::to_string(alphabet_size_));
    }
    word_.push_back(s);
    return violation_at_end(word_, spec_, scratch_);
}

CheckerState::CheckerState(AvoidanceSpec spec, Word word)
    : spec_(std::move(spec)), word_(std::move(word)) {
    if (auto v = find_violation(word_, spec_)) {
        throw Error(ErrorCode::ViolatingWord,
                    "word " + word_.to_string() + " does not avoid " + spec_.to_string());
    }
}

std::pair<CheckerState, std::optional<Violation>> extend_and_check(const CheckerState& state,
                                                                   Symbol a) {
    Word next = state.word();
    next.push_back(a);  // throws InvalidSymbol
    std::vector<std::size_t> scratch;
    auto violation = violation_at_end(next.symbols(), state.spec(), scratch);
    return {CheckerState(CheckerState::Trusted{}, state.spec(), std::move(next)), violation};
}

}  // namespace replab
