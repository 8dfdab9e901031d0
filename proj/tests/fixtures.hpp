#pragma once

// Shared fixtures for the test suites. The two 2-(9,*,*) designs are the
// twelve rows of the incidence matrices worked in the affine-plane example;
// the STS(13) is developed cyclically from the base blocks {0,1,4}, {0,2,7}
// modulo 13.

#include <vector>

#include <designlattice/designlattice.hpp>

namespace fixtures {

using designlattice::Design;
using designlattice::IntMatrix;

inline Design fano() {
    return Design(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

inline Design sts9() {
    return Design(9, {{0, 1, 2},
                      {3, 4, 5},
                      {6, 7, 8},
                      {0, 3, 6},
                      {1, 4, 7},
                      {2, 5, 8},
                      {0, 5, 7},
                      {1, 3, 8},
                      {2, 4, 6},
                      {0, 4, 8},
                      {1, 5, 6},
                      {2, 3, 7}});
}

/// The 2-(9,6,5) design of parallel line pairs of AG(2,3).
inline Design parallel_line_pairs() {
    return Design(9, {{0, 1, 2, 3, 4, 5},
                      {0, 1, 2, 6, 7, 8},
                      {0, 1, 3, 4, 6, 7},
                      {0, 2, 3, 5, 6, 8},
                      {0, 1, 4, 5, 6, 8},
                      {0, 2, 3, 4, 7, 8},
                      {0, 1, 3, 5, 7, 8},
                      {0, 2, 4, 5, 6, 7},
                      {1, 2, 4, 5, 7, 8},
                      {3, 4, 5, 6, 7, 8},
                      {1, 2, 3, 4, 6, 8},
                      {1, 2, 3, 5, 6, 7}});
}

inline Design cyclic_development(int v, const std::vector<std::vector<int>>& base_blocks) {
    std::vector<std::vector<int>> blocks;
    for (int shift = 0; shift < v; ++shift)
        for (const auto& base : base_blocks) {
            std::vector<int> block;
            block.reserve(base.size());
            for (int p : base) block.push_back((p + shift) % v);
            blocks.push_back(std::move(block));
        }
    return Design(v, std::move(blocks));
}

inline Design sts13() { return cyclic_development(13, {{0, 1, 4}, {0, 2, 7}}); }

/// The row-reduced form of the STS(9) incidence matrix (nonzero rows).
inline IntMatrix sts9_reduced_rows() {
    const std::vector<std::vector<long long>> rows = {
        {1, 0, 0, 0, 0, 1, 0, 1, 0},  {0, 1, 0, 0, 0, -2, 0, -1, -1}, {0, 0, 1, 0, 0, 1, 0, 0, -2},
        {0, 0, 0, 1, 0, -1, 0, -2, -1}, {0, 0, 0, 0, 1, 2, 0, 2, 1},   {0, 0, 0, 0, 0, 3, 0, 3, 0},
        {0, 0, 0, 0, 0, 0, 1, 1, -2},  {0, 0, 0, 0, 0, 0, 0, 3, 0},   {0, 0, 0, 0, 0, 0, 0, 0, 3}};
    IntMatrix m(9, 9);
    for (int r = 0; r < 9; ++r)
        for (int c = 0; c < 9; ++c) m(r, c) = rows[r][c];
    return m;
}

}  // namespace fixtures
