#pragma once

#include <string>
#include <vector>

namespace replab {

struct ReproCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Recomputes every reference table and bound (tree statistics, counts,
/// morphism verifications, generated words, growth rates) and compares them
/// with the reference values.
std::vector<ReproCheck> run_repro(unsigned threads = 1);

}  // namespace replab
