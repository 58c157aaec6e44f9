#include "replab/discovery.hpp"

#include <algorithm>
#include <set>

#include "replab/error.hpp"

namespace replab {

namespace {

bool by_length_then_lex(const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
}

}  // namespace

BlockAnalysis block_filter(const AvoidanceSpec& spec, std::size_t k, std::size_t max_blocks,
                           std::size_t max_len) {
    if (k < 1 || max_blocks < 1 || max_len < k || max_len % k != 0) {
        throw Error(ErrorCode::InvalidSpec,
                    "block_filter needs k >= 1, max_blocks >= 1 and max_len a positive multiple of k");
    }
    BlockAnalysis analysis;
    analysis.k = k;
    const std::size_t levels = max_len / k;
    for (std::size_t j = 1; j <= levels; ++j) analysis.surviving_word_count_by_length[j * k] = 0;

    // blocks[j] = distinct aligned blocks of the current word's first j blocks
    std::vector<std::vector<Word>> blocks(levels + 1);
    std::set<Word> candidates;
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
        if (checker.push(sym)) {
            checker.pop();
            continue;
        }
        const std::size_t n = checker.size();
        const std::size_t done = (n - 1) / k;  // complete blocks before this symbol
        if (blocks[done].size() == max_blocks) {
            // no room for a new block: the partial block must extend a known one
            const std::size_t offset = n - done * k;
            const auto partial = checker.word().subspan(done * k, offset);
            const bool known = std::any_of(blocks[done].begin(), blocks[done].end(), [&](const Word& b) {
                return std::equal(partial.begin(), partial.end(), b.symbols().begin());
            });
            if (!known) {
                checker.pop();
                continue;
            }
        }
        if (n % k == 0) {
            const std::size_t j = n / k;
            const auto tail = checker.word().subspan(n - k);
            Word block(std::vector<Symbol>(tail.begin(), tail.end()), 2);
            blocks[j] = blocks[j - 1];
            if (std::find(blocks[j].begin(), blocks[j].end(), block) == blocks[j].end()) {
                blocks[j].push_back(std::move(block));
            }
            if (blocks[j].size() > max_blocks) {
                checker.pop();
                continue;
            }
            ++analysis.surviving_word_count_by_length[n];
            if (n == max_len) {
                candidates.insert(blocks[j].begin(), blocks[j].end());
                checker.pop();
                continue;
            }
        }
        next_child.push_back(0);
    }

    analysis.candidate_blocks.assign(candidates.begin(), candidates.end());
    std::vector<std::uint64_t> counts;
    for (const auto& [len, count] : analysis.surviving_word_count_by_length) {
        counts.push_back(count);
        if (count == 0) analysis.exhausted = true;
    }
    if (!analysis.exhausted && counts.size() >= 3) {
        const std::size_t n = counts.size();
        analysis.appears_unbounded = counts[n - 3] <= counts[n - 2] && counts[n - 2] <= counts[n - 1];
    }
    return analysis;
}

AvoidedBlockReport infer_avoided_blocks(const UniformMorphism& m, const AvoidanceSpec& spec,
                                        std::size_t window) {
    if (window < 2) throw Error(ErrorCode::InvalidSpec, "window must be >= 2");
    AvoidedBlockReport report{m.name(), spec, window, {}};
    const int letters = m.source_alphabet();

    // clean = source words of the current length whose image avoids spec
    std::vector<Word> clean;
    for (int a = 0; a < letters; ++a) {
        Word b(std::vector<Symbol>{Symbol(a)}, letters);
        if (find_violation(apply(m, b), spec)) {
            report.avoided.push_back(std::move(b));
        } else {
            clean.push_back(std::move(b));
        }
    }
    for (std::size_t len = 2; len <= window && !clean.empty(); ++len) {
        const std::set<Word> previous(clean.begin(), clean.end());
        std::vector<Word> next;
        for (const auto& u : clean) {
            for (int a = 0; a < letters; ++a) {
                Word b = u;
                b.push_back(Symbol(a));
                if (!previous.contains(b.factor(1, len - 1))) continue;
                if (find_violation(apply(m, b), spec)) {
                    report.avoided.push_back(std::move(b));
                } else {
                    next.push_back(std::move(b));
                }
            }
        }
        clean = std::move(next);
    }
    std::sort(report.avoided.begin(), report.avoided.end(), by_length_then_lex);
    return report;
}

std::vector<UniformMorphism> propose_morphisms(const AvoidanceSpec& spec,
                                               const BlockAnalysis& analysis, int alphabet) {
    std::vector<UniformMorphism> out;
    const auto& blocks = analysis.candidate_blocks;
    if (alphabet < 2 || static_cast<std::size_t>(alphabet) > blocks.size() ||
        alphabet > kMaxAlphabet) {
        return out;
    }
    // Two blocks whose concatenation in either order violates the spec can
    // never share a candidate: ab and ba are squarefree source words.
    const std::size_t count = blocks.size();
    std::vector<std::vector<bool>> compatible(count, std::vector<bool>(count, false));
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i + 1; j < count; ++j) {
            const bool ok = avoids(blocks[i] + blocks[j], spec) && avoids(blocks[j] + blocks[i], spec);
            compatible[i][j] = compatible[j][i] = ok;
        }
    }
    // index subsets in lexicographic order keep results ordered by image
    // tuple, since candidate_blocks is sorted
    const std::size_t size = static_cast<std::size_t>(alphabet);
    std::vector<std::size_t> pick;
    std::size_t next = 0;
    while (true) {
        if (pick.size() == size) {
            std::vector<Word> images;
            for (auto i : pick) images.push_back(blocks[i]);
            UniformMorphism m("candidate", 2, std::move(images));
            if (check_distinct(m).empty() && check_inclusion(m).empty() &&
                check_interchange(m).empty() && check_images_avoid(m, spec, 5).ok()) {
                out.push_back(m.renamed("candidate" + std::to_string(out.size())));
            }
            next = pick.back() + 1;
            pick.pop_back();
            continue;
        }
        while (next < count && !std::all_of(pick.begin(), pick.end(),
                                            [&](std::size_t i) { return compatible[i][next]; })) {
            ++next;
        }
        if (next + (size - pick.size()) <= count) {
            pick.push_back(next);
            next = next + 1;
            continue;
        }
        if (pick.empty()) break;
        next = pick.back() + 1;
        pick.pop_back();
    }
    return out;
}

std::vector<UniformMorphism> propose_morphisms(const AvoidanceSpec& spec, std::size_t k,
                                               int alphabet, std::size_t corpus_len) {
    if (alphabet < 2) return {};
    const BlockAnalysis analysis =
        block_filter(spec, k, static_cast<std::size_t>(alphabet), corpus_len);
    return propose_morphisms(spec, analysis, alphabet);
}

}  // namespace replab
