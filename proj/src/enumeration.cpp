#include "replab/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "replab/error.hpp"
#include "replab/treesearch.hpp"

namespace replab {

namespace {

constexpr std::size_t kMaxFactorLength = 62;

// Length-tagged key: a leading 1 bit followed by the symbols, MSB first.
std::uint64_t key_of(std::span<const Symbol> w) {
    std::uint64_t key = 1;
    for (Symbol s : w) key = (key << 1) | s;
    return key;
}

bool by_length_then_lex(const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
}

class FactorMatcher {
  public:
    explicit FactorMatcher(const ForbiddenSet& set) : max_len_(set.max_len()) {
        for (const auto& w : set.words()) keys_.insert(key_of(w.symbols()));
    }

    // True when some member is a suffix of `w`.
    bool suffix_forbidden(std::span<const Symbol> w) const {
        const std::size_t n = w.size();
        std::uint64_t bits = 0;
        for (std::size_t len = 1; len <= std::min(n, max_len_); ++len) {
            bits |= std::uint64_t{w[n - len]} << (len - 1);
            if (keys_.contains((std::uint64_t{1} << len) | bits)) return true;
        }
        return false;
    }

  private:
    std::size_t max_len_;
    std::unordered_set<std::uint64_t> keys_;
};

// Per-length counts of words avoiding the set, up to `depth`; the words of
// length exactly `depth` are appended to `deepest`.
std::vector<std::uint64_t> enumerate_avoiding(const FactorMatcher& matcher, std::size_t depth,
                                              std::vector<Word>* deepest) {
    std::vector<std::uint64_t> counts(depth + 1, 0);
    std::vector<Symbol> word;
    counts[0] = 1;
    if (depth == 0) {
        if (deepest) deepest->emplace_back(2);
        return counts;
    }
    std::vector<Symbol> next_child{0};
    while (!next_child.empty()) {
        Symbol& s = next_child.back();
        if (s == 2) {
            next_child.pop_back();
            if (!word.empty()) word.pop_back();
            continue;
        }
        word.push_back(s++);
        if (matcher.suffix_forbidden(word)) {
            word.pop_back();
            continue;
        }
        ++counts[word.size()];
        if (word.size() == depth) {
            if (deepest) deepest->emplace_back(word, 2);
            word.pop_back();
            continue;
        }
        next_child.push_back(0);
    }
    return counts;
}

// Strongly connected components (iterative Tarjan).
std::vector<std::vector<std::uint32_t>> components(
    const std::vector<std::vector<std::uint32_t>>& succ) {
    const std::size_t n = succ.size();
    constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::uint32_t> stack;
    std::vector<std::vector<std::uint32_t>> out;
    std::uint32_t counter = 0;
    std::vector<std::pair<std::uint32_t, std::size_t>> call;
    for (std::uint32_t root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        call.push_back({root, 0});
        while (!call.empty()) {
            auto& [v, edge] = call.back();
            if (edge == 0 && index[v] == kUnvisited) {
                index[v] = low[v] = counter++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            if (edge < succ[v].size()) {
                const std::uint32_t w = succ[v][edge++];
                if (index[w] == kUnvisited) {
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::vector<std::uint32_t> comp;
                std::uint32_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != v);
                out.push_back(std::move(comp));
            }
            const std::uint32_t finished = v;
            call.pop_back();
            if (!call.empty()) {
                const std::uint32_t parent = call.back().first;
                low[parent] = std::min(low[parent], low[finished]);
            }
        }
    }
    return out;
}

struct Bracket {
    double lower = 0.0;
    double upper = 0.0;
};

// Spectral radius of an irreducible non-negative matrix by power iteration
// on A + I (primitive, so the iteration converges). Collatz-Wielandt row
// ratios of the positive iterate bracket the eigenvalue.
Bracket irreducible_radius(const std::vector<std::vector<std::uint32_t>>& succ) {
    const std::size_t n = succ.size();
    std::vector<double> x(n, 1.0), y(n);
    Bracket bracket{0.0, std::numeric_limits<double>::infinity()};
    double previous = -1.0;
    for (int iter = 0; iter < 2'000'000; ++iter) {
        // y = (A + I) x with A[v][w] = 1 for each edge v -> w
        for (std::size_t v = 0; v < n; ++v) {
            double sum = x[v];
            for (auto w : succ[v]) sum += x[w];
            y[v] = sum;
        }
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0, peak = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            const double r = y[v] / x[v];
            lo = std::min(lo, r);
            hi = std::max(hi, r);
            peak = std::max(peak, y[v]);
        }
        bracket = {std::max(bracket.lower, lo - 1.0), std::min(bracket.upper, hi - 1.0)};
        for (std::size_t v = 0; v < n; ++v) x[v] = y[v] / peak;
        const double estimate = 0.5 * (bracket.lower + bracket.upper);
        if (bracket.upper - bracket.lower < 1e-12 ||
            (std::abs(estimate - previous) < 1e-13 && bracket.upper - bracket.lower < 1e-8)) {
            break;
        }
        previous = estimate;
    }
    return bracket;
}

int digits_from_width(double width, double value) {
    if (width <= 0.0) return 15;
    const double scale = std::max(1.0, std::abs(value));
    return std::clamp(static_cast<int>(std::floor(-std::log10(width / scale))), 0, 15);
}

}  // namespace

ForbiddenSet::ForbiddenSet(std::vector<Word> words, std::size_t max_len)
    : words_(std::move(words)), max_len_(max_len) {
    for (const auto& w : words_) {
        if (w.alphabet_size() != 2) {
            throw Error(ErrorCode::InvalidSymbol, "forbidden words must be binary");
        }
        if (w.empty()) throw Error(ErrorCode::EmptyWord, "empty forbidden word");
        if (w.size() > max_len_) max_len_ = w.size();
    }
    if (max_len_ > kMaxFactorLength) {
        throw Error(ErrorCode::Overflow, "forbidden words longer than 62 symbols");
    }
    std::sort(words_.begin(), words_.end(), by_length_then_lex);
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

ForbiddenSet ForbiddenSet::from_words(std::vector<Word> words) {
    return ForbiddenSet(std::move(words), 0);
}

ForbiddenSet ForbiddenSet::parse_lines(std::string_view text) {
    std::vector<Word> words;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find_first_of(",\n", pos);
        if (end == std::string_view::npos) end = text.size();
        auto token = text.substr(pos, end - pos);
        while (!token.empty() && (token.back() == '\r' || token.back() == ' ')) token.remove_suffix(1);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        if (!token.empty()) words.push_back(Word::parse(token, 2));
        pos = end + 1;
    }
    return from_words(std::move(words));
}

std::size_t ForbiddenSet::complement_classes() const {
    std::size_t classes = 0;
    for (const auto& w : words_) {
        const Word c = w.complement();
        // count each class once, at its lexicographically smaller member
        if (!(c < w) || !std::binary_search(words_.begin(), words_.end(), c, by_length_then_lex)) {
            ++classes;
        }
    }
    return classes;
}

std::string ForbiddenSet::to_lines() const {
    std::string out;
    for (const auto& w : words_) out += w.to_string() + "\n";
    return out;
}

const char* to_string(GrowthKind kind) {
    switch (kind) {
        case GrowthKind::UpperAutomaton: return "UpperAutomaton";
        case GrowthKind::LowerMorphism: return "LowerMorphism";
        case GrowthKind::RecurrenceRoot: return "RecurrenceRoot";
    }
    return "Unknown";
}

CountTable count_avoiding(const AvoidanceSpec& spec, std::size_t n_max, unsigned threads) {
    return CountTable{spec, count_by_length(spec, n_max, threads)};
}

ForbiddenSet minimal_forbidden(const AvoidanceSpec& spec, std::size_t max_len) {
    if (max_len < 1) throw Error(ErrorCode::InvalidSpec, "max_len must be >= 1");
    // A child u.a of an avoiding word u is minimal exactly when its shortest
    // violating suffix is the whole word: then u.a minus its first letter
    // avoids as well.
    std::vector<Word> words;
    IncrementalChecker checker(spec);
    std::vector<Symbol> next_child{0};
    while (!next_child.empty()) {
        Symbol& s = next_child.back();
        if (s == 2) {
            next_child.pop_back();
            if (!next_child.empty()) checker.pop();
            continue;
        }
        const Symbol sym = s++;
        if (auto v = checker.push(sym)) {
            if (v->length == checker.size()) {
                words.emplace_back(std::vector<Symbol>(checker.word().begin(), checker.word().end()),
                                   2);
            }
            checker.pop();
            continue;
        }
        if (checker.size() == max_len) {
            checker.pop();
            continue;
        }
        next_child.push_back(0);
    }
    return ForbiddenSet(std::move(words), max_len);
}

FactorAutomaton build_automaton(const ForbiddenSet& forbidden) {
    FactorAutomaton automaton;
    const FactorMatcher matcher(forbidden);
    automaton.state_length = forbidden.max_len() == 0 ? 0 : forbidden.max_len() - 1;
    enumerate_avoiding(matcher, automaton.state_length, &automaton.states);

    std::unordered_map<std::uint64_t, std::uint32_t> index;
    for (std::uint32_t i = 0; i < automaton.states.size(); ++i) {
        index.emplace(key_of(automaton.states[i].symbols()), i);
    }
    automaton.successors.resize(automaton.states.size());
    std::vector<Symbol> buffer;
    for (std::uint32_t i = 0; i < automaton.states.size(); ++i) {
        for (Symbol a : {Symbol{0}, Symbol{1}}) {
            const auto state = automaton.states[i].symbols();
            buffer.assign(state.begin(), state.end());
            buffer.push_back(a);
            if (matcher.suffix_forbidden(buffer)) continue;
            const auto target = std::span<const Symbol>(buffer).subspan(1);
            automaton.successors[i].push_back(index.at(key_of(target)));
        }
    }
    return automaton;
}

GrowthEstimate growth_upper(const ForbiddenSet& forbidden) {
    const FactorAutomaton automaton = build_automaton(forbidden);
    GrowthEstimate estimate{GrowthKind::UpperAutomaton};
    estimate.state_count = automaton.states.size();

    // The spectral radius of a reducible matrix is the largest radius among
    // its strongly connected components.
    std::vector<std::uint32_t> local(automaton.states.size());
    std::vector<std::size_t> owner(automaton.states.size());
    const auto comps = components(automaton.successors);
    Bracket best;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const auto& comp = comps[c];
        for (std::uint32_t i = 0; i < comp.size(); ++i) {
            local[comp[i]] = i;
            owner[comp[i]] = c;
        }
        std::vector<std::vector<std::uint32_t>> sub(comp.size());
        bool has_edge = false;
        for (std::uint32_t i = 0; i < comp.size(); ++i) {
            for (auto w : automaton.successors[comp[i]]) {
                if (owner[w] == c) {
                    sub[i].push_back(local[w]);
                    has_edge = true;
                }
            }
        }
        if (!has_edge) continue;  // a single state without a self-loop
        const Bracket b = irreducible_radius(sub);
        if (b.upper > best.upper) best = b;
    }
    estimate.lower = best.lower;
    estimate.upper = best.upper;
    estimate.value = 0.5 * (best.lower + best.upper);
    estimate.certified_digits = digits_from_width(best.upper - best.lower, estimate.value);
    return estimate;
}

GrowthEstimate growth_lower_from_morphism(std::size_t width, double base) {
    if (width < 1) throw Error(ErrorCode::InvalidSpec, "width must be >= 1");
    if (!(base > 1.0)) throw Error(ErrorCode::InvalidSpec, "base must exceed 1");
    GrowthEstimate estimate{GrowthKind::LowerMorphism};
    estimate.value = std::exp(std::log(base) / static_cast<double>(width));
    estimate.lower = estimate.upper = estimate.value;
    estimate.certified_digits = 15;
    return estimate;
}

GrowthEstimate growth_recurrence(std::span<const std::uint64_t> coefficients) {
    // p(x) = 1 - sum c_i x^-i is increasing for x > 0, so bisect on it.
    auto p = [&](double x) {
        double sum = 0.0, power = 1.0;
        for (auto c : coefficients) {
            power /= x;
            sum += static_cast<double>(c) * power;
        }
        return 1.0 - sum;
    };
    GrowthEstimate estimate{GrowthKind::RecurrenceRoot};
    double total = 0.0;
    for (auto c : coefficients) total += static_cast<double>(c);
    if (total == 0.0) return estimate;
    double lo = 1e-9, hi = std::max(1.0, total);
    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
        const double mid = 0.5 * (lo + hi);
        (p(mid) < 0.0 ? lo : hi) = mid;
    }
    estimate.lower = lo;
    estimate.upper = hi;
    estimate.value = 0.5 * (lo + hi);
    estimate.certified_digits = digits_from_width(hi - lo, estimate.value);
    return estimate;
}

CountTable automaton_counts(const ForbiddenSet& forbidden, std::size_t n_max) {
    const FactorMatcher matcher(forbidden);
    const std::size_t state_length = forbidden.max_len() == 0 ? 0 : forbidden.max_len() - 1;
    CountTable table;
    if (n_max <= state_length) {
        table.counts = enumerate_avoiding(matcher, n_max, nullptr);
        return table;
    }
    const FactorAutomaton automaton = build_automaton(forbidden);
    table.counts = enumerate_avoiding(matcher, state_length, nullptr);
    std::vector<std::uint64_t> x(automaton.states.size(), 1), y(x.size());
    for (std::size_t n = state_length + 1; n <= n_max; ++n) {
        std::fill(y.begin(), y.end(), 0);
        for (std::size_t v = 0; v < x.size(); ++v) {
            for (auto w : automaton.successors[v]) {
                if (__builtin_add_overflow(y[w], x[v], &y[w])) {
                    throw Error(ErrorCode::Overflow, "count exceeds 64 bits at n=" + std::to_string(n));
                }
            }
        }
        std::swap(x, y);
        std::uint64_t total = 0;
        for (auto c : x) {
            if (__builtin_add_overflow(total, c, &total)) {
                throw Error(ErrorCode::Overflow, "count exceeds 64 bits at n=" + std::to_string(n));
            }
        }
        table.counts.push_back(total);
    }
    return table;
}

}  // namespace replab
