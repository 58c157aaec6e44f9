#include "replab/reference.hpp"

namespace replab::reference {

const std::vector<TreeRow>& tree_rows() {
    static const std::vector<TreeRow> kRows = {
        {2, "inf", 478, 19, 2,
         {"010011000111001101"}},
        {3, "3", 578, 30, 2,
         {"00110010100110101100101001100"}},
        {4, "5/2", 6860, 84, 4,
         {"00101101001011001001101100101101001101100100110100101100100110110010110100110110011",
          "00110010011010010110010011011001011010011011001001101001011001001101100101101001011"}},
        {5, "5/2", 15940, 93, 2,
         {"00100101100110100101100100110110010110100110110010011010010110010011011001011010011001011011"}},
        {6, "5/2", 15940, 93, 2,
         {"00100101100110100101100100110110010110100110110010011010010110010011011001011010011001011011"}},
        {7, "7/3", 3548, 43, 2,
         {"001011001011010011001011001101001011001011"}},
    };
    return kRows;
}

const std::vector<CountColumn>& count_columns() {
    static const std::vector<CountColumn> kColumns = {
        {"A", 3, "3+",
         {1, 2, 4, 8, 14, 26, 42, 68, 100, 154, 234, 356, 514, 768, 1108, 1632, 2348, 3434, 4972, 7222, 10356, 14962, 21630, 31210, 44846, 64584}},
        {"B", 4, "5/2+",
         {1, 2, 4, 6, 10, 16, 24, 36, 46, 64, 74, 88, 102, 114, 124, 140, 160, 178, 198, 212, 230, 256, 294, 342, 366, 392}},
        {"C", 7, "7/3+",
         {1, 2, 4, 6, 10, 14, 20, 30, 38, 50, 64, 86, 108, 136, 164, 196, 226, 264, 322, 384, 436, 496, 578, 674, 754, 850}},
    };
    return kColumns;
}

const std::vector<GrowthTarget>& growth_targets() {
    static const std::vector<GrowthTarget> kTargets = {
        {3, "3+", 12, 1.4895},
        {4, "5/2+", 20, 1.12123967},
        {7, "7/3+", 20, 1.1615225},
    };
    return kTargets;
}

}  // namespace replab::reference
