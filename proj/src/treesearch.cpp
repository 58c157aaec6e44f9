#include "replab/treesearch.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "replab/error.hpp"

namespace replab {

namespace {

struct Tally {
    std::vector<std::uint64_t> internal_by_depth;
    std::uint64_t leaves = 0;
    std::size_t max_leaf_depth = 0;
    bool collect = false;
    std::size_t deepest = 0;
    std::vector<Word> deepest_words;

    Tally(std::size_t cap, bool collect_words)
        : internal_by_depth(cap + 1, 0), collect(collect_words) {}

    void internal(std::span<const Symbol> word) {
        const std::size_t d = word.size();
        ++internal_by_depth[d];
        if (!collect) return;
        if (d > deepest || deepest_words.empty()) {
            deepest = d;
            deepest_words.clear();
        }
        if (d == deepest) deepest_words.emplace_back(std::vector<Symbol>(word.begin(), word.end()), 2);
    }

    void leaf(std::size_t depth) {
        ++leaves;
        max_leaf_depth = std::max(max_leaf_depth, depth);
    }

    void merge(Tally&& other) {
        for (std::size_t d = 0; d < internal_by_depth.size(); ++d) {
            internal_by_depth[d] += other.internal_by_depth[d];
        }
        leaves += other.leaves;
        max_leaf_depth = std::max(max_leaf_depth, other.max_leaf_depth);
        if (!collect || other.deepest_words.empty()) return;
        if (deepest_words.empty() || other.deepest > deepest) {
            deepest = other.deepest;
            deepest_words = std::move(other.deepest_words);
        } else if (other.deepest == deepest) {
            std::move(other.deepest_words.begin(), other.deepest_words.end(),
                      std::back_inserter(deepest_words));
        }
    }
};

// Depth-first walk of the subtree rooted at the (avoiding) word currently
// held by `checker`. Nodes at depth `cap` are counted but not expanded. With
// a non-null `stop`, reaching depth `cap` raises the flag and every walker
// sharing it abandons its subtree.
void walk_subtree(IncrementalChecker& checker, std::size_t cap, Tally& tally,
                  std::atomic<bool>* stop) {
    tally.internal(checker.word());
    if (checker.size() >= cap) {
        if (stop) stop->store(true, std::memory_order_relaxed);
        return;
    }
    std::vector<Symbol> next_child{0};
    while (!next_child.empty()) {
        if (stop && stop->load(std::memory_order_relaxed)) return;
        Symbol& s = next_child.back();
        if (s == 2) {
            next_child.pop_back();
            if (!next_child.empty()) checker.pop();
            continue;
        }
        const Symbol sym = s++;
        if (checker.push(sym)) {
            tally.leaf(checker.size());
            checker.pop();
            continue;
        }
        tally.internal(checker.word());
        if (checker.size() == cap) {
            if (stop) stop->store(true, std::memory_order_relaxed);
            checker.pop();
            continue;
        }
        next_child.push_back(0);
    }
}

IncrementalChecker checker_at(const AvoidanceSpec& spec, const std::vector<Symbol>& word) {
    IncrementalChecker checker(spec);
    for (Symbol s : word) checker.push(s);
    return checker;
}

Tally traverse(const AvoidanceSpec& spec, std::size_t cap, bool collect, unsigned threads,
               std::atomic<bool>* stop) {
    Tally tally(cap, collect);
    if (threads <= 1) {
        IncrementalChecker checker(spec);
        walk_subtree(checker, cap, tally, stop);
        return tally;
    }

    // Breadth-first until there are enough disjoint subtrees to share out.
    const std::size_t target = std::size_t{16} * threads;
    std::vector<std::vector<Symbol>> frontier{{}};
    while (!frontier.empty() && frontier.size() < target && frontier.front().size() < cap) {
        std::vector<std::vector<Symbol>> next;
        for (const auto& node : frontier) {
            tally.internal(node);
            IncrementalChecker checker = checker_at(spec, node);
            for (Symbol a : {Symbol{0}, Symbol{1}}) {
                if (checker.push(a)) {
                    tally.leaf(checker.size());
                } else {
                    next.emplace_back(checker.word().begin(), checker.word().end());
                }
                checker.pop();
            }
        }
        frontier = std::move(next);
    }

    std::vector<Tally> partial(frontier.size(), Tally(cap, collect));
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (std::size_t i = cursor++; i < frontier.size(); i = cursor++) {
            IncrementalChecker checker = checker_at(spec, frontier[i]);
            walk_subtree(checker, cap, partial[i], stop);
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    pool.clear();
    for (auto& p : partial) tally.merge(std::move(p));
    return tally;
}

SearchOutcome explore_impl(const AvoidanceSpec& spec, const SearchOptions& options,
                          std::vector<Word>* all_maximal) {
    if (options.max_depth < 1) throw Error(ErrorCode::InvalidSpec, "max_depth must be >= 1");
    // An infinite tree grows exponentially, so the search stops at the first
    // word of length max_depth instead of counting the whole frontier.
    std::atomic<bool> hit_cutoff{false};
    Tally tally = traverse(spec, options.max_depth, true, options.threads, &hit_cutoff);
    if (const auto frontier = tally.internal_by_depth[options.max_depth];
        frontier > 0 || hit_cutoff) {
        return Inconclusive{options.max_depth, frontier};
    }

    TreeReport report;
    report.leaves = tally.leaves;
    report.height = tally.max_leaf_depth;
    report.per_depth_counts.assign(tally.internal_by_depth.begin(),
                                   tally.internal_by_depth.begin() +
                                       static_cast<std::ptrdiff_t>(report.height));
    for (auto c : report.per_depth_counts) report.internal_count += c;
    report.maximal_count = tally.deepest_words.size();
    if (all_maximal) {
        *all_maximal = tally.deepest_words;
        std::sort(all_maximal->begin(), all_maximal->end());
    }
    for (auto& w : tally.deepest_words) {
        if (!w.empty() && w[0] == 0) report.maximal_words_starting_with_zero.push_back(std::move(w));
    }
    std::sort(report.maximal_words_starting_with_zero.begin(),
              report.maximal_words_starting_with_zero.end());
    return report;
}

}  // namespace

SearchOutcome explore(const AvoidanceSpec& spec, const SearchOptions& options) {
    return explore_impl(spec, options, nullptr);
}

SearchOutcome explore(const AvoidanceSpec& spec, std::size_t max_depth) {
    return explore(spec, SearchOptions{max_depth, 1});
}

std::vector<Word> longest_avoiding_words(const AvoidanceSpec& spec, const SearchOptions& options) {
    std::vector<Word> words;
    const auto outcome = explore_impl(spec, options, &words);
    if (!std::holds_alternative<TreeReport>(outcome)) {
        throw Error(ErrorCode::NotFinite, "tree for " + spec.to_string() +
                                              " is not finite within depth " +
                                              std::to_string(options.max_depth));
    }
    return words;
}

std::vector<std::uint64_t> count_by_length(const AvoidanceSpec& spec, std::size_t n_max,
                                           unsigned threads) {
    return traverse(spec, n_max, false, threads, nullptr).internal_by_depth;
}

}  // namespace replab
