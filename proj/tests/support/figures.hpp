// Frozen reference data used as test oracles: published example designs and
// adjacency patterns, transcribed once and pinned byte-for-byte.
#pragma once

#include <vector>

#include "cwbd/design.hpp"
#include "cwbd/matrix.hpp"

namespace figures {

using Rows = std::vector<std::vector<int>>;

// 7 treatments, 3 subjects: column j carries (j*1, j*2, ..., j*6 mod 7)
// restricted to the quadratic residues {1,2,4} as subject multipliers.
inline cwbd::Design fig_1a() {
    Rows rows = {
        {0, 0, 0}, {1, 2, 4}, {2, 4, 1}, {3, 6, 5}, {4, 1, 2}, {5, 3, 6}, {6, 5, 3},
    };
    return cwbd::Design(7, 3, rows);
}

// 11 treatments, 5 subjects; subject multipliers {1,3,4,5,9}.
inline cwbd::Design fig_1b() {
    Rows rows(11, std::vector<int>(5));
    const int mult[5] = {1, 3, 4, 5, 9};
    for (int j = 0; j < 11; ++j)
        for (int u = 0; u < 5; ++u) rows[j][u] = (j * mult[u]) % 11;
    return cwbd::Design(11, 5, rows);
}

// 7 treatments, 21 subjects: the expanded orthogonal-structure example.
inline cwbd::Design figure2() {
    Rows rows = {
        {3, 4, 5, 6, 0, 1, 2, 6, 0, 1, 2, 3, 4, 5, 5, 6, 0, 1, 2, 3, 4},
        {1, 2, 3, 4, 5, 6, 0, 2, 3, 4, 5, 6, 0, 1, 4, 5, 6, 0, 1, 2, 3},
        {0, 1, 2, 3, 4, 5, 6, 0, 1, 2, 3, 4, 5, 6, 0, 1, 2, 3, 4, 5, 6},
        {2, 3, 4, 5, 6, 0, 1, 4, 5, 6, 0, 1, 2, 3, 1, 2, 3, 4, 5, 6, 0},
        {6, 0, 1, 2, 3, 4, 5, 5, 6, 0, 1, 2, 3, 4, 3, 4, 5, 6, 0, 1, 2},
        {4, 5, 6, 0, 1, 2, 3, 1, 2, 3, 4, 5, 6, 0, 2, 3, 4, 5, 6, 0, 1},
        {5, 6, 0, 1, 2, 3, 4, 3, 4, 5, 6, 0, 1, 2, 6, 0, 1, 2, 3, 4, 5},
    };
    return cwbd::Design(7, 21, rows);
}

// 7 treatments, 4 subjects; multiplier set P = {2,4,5,6}.
inline cwbd::Design fig_3a() {
    Rows rows = {
        {0, 0, 0, 0}, {2, 4, 5, 6}, {4, 1, 3, 5}, {6, 5, 1, 4},
        {1, 2, 6, 3}, {3, 6, 4, 2}, {5, 3, 2, 1},
    };
    return cwbd::Design(7, 4, rows);
}

// 13 treatments, 4 subjects; multiplier set P = {1,2,5,7}.
inline cwbd::Design fig_3b() {
    Rows rows = {
        {0, 0, 0, 0},   {1, 2, 5, 7},  {2, 4, 10, 1}, {3, 6, 2, 8},  {4, 8, 7, 2},
        {5, 10, 12, 9}, {6, 12, 4, 3}, {7, 1, 9, 10}, {8, 3, 1, 4},  {9, 5, 6, 11},
        {10, 7, 11, 5}, {11, 9, 3, 12}, {12, 11, 8, 6},
    };
    return cwbd::Design(13, 4, rows);
}

// 13 treatments, 9 subjects; multiplier set P = {2,3,5,7,8,9,10,11,12}.
inline cwbd::Design fig_3c() {
    Rows rows = {
        {0, 0, 0, 0, 0, 0, 0, 0, 0},
        {2, 3, 5, 7, 8, 9, 10, 11, 12},
        {4, 6, 10, 1, 3, 5, 7, 9, 11},
        {6, 9, 2, 8, 11, 1, 4, 7, 10},
        {8, 12, 7, 2, 6, 10, 1, 5, 9},
        {10, 2, 12, 9, 1, 6, 11, 3, 8},
        {12, 5, 4, 3, 9, 2, 8, 1, 7},
        {1, 8, 9, 10, 4, 11, 5, 12, 6},
        {3, 11, 1, 4, 12, 7, 2, 10, 5},
        {5, 1, 6, 11, 7, 3, 12, 8, 4},
        {7, 4, 11, 5, 2, 12, 9, 6, 3},
        {9, 7, 3, 12, 10, 8, 6, 4, 2},
        {11, 10, 8, 6, 5, 4, 3, 2, 1},
    };
    return cwbd::Design(13, 9, rows);
}

// 15-vertex doubled-tournament adjacency pattern (vertex order: the seven
// base points, the hub, then the seven primed copies).
inline cwbd::IntMatrix doubled_seven_pattern() {
    Rows rows = {
        {0, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 0, 1, 0, 0},
        {1, 0, 0, 0, 1, 0, 1, 0, 0, 1, 1, 1, 0, 1, 0},
        {1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 1, 0, 1},
        {0, 1, 1, 0, 0, 0, 1, 0, 1, 0, 0, 1, 1, 1, 0},
        {1, 0, 1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1},
        {0, 1, 0, 1, 1, 0, 0, 0, 1, 0, 1, 0, 0, 1, 1},
        {0, 0, 1, 0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 0, 1},
        {1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 1, 1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0},
        {0, 0, 1, 1, 0, 1, 0, 1, 0, 0, 1, 1, 0, 1, 0},
        {0, 0, 0, 1, 1, 0, 1, 1, 0, 0, 0, 1, 1, 0, 1},
        {1, 0, 0, 0, 1, 1, 0, 1, 1, 0, 0, 0, 1, 1, 0},
        {0, 1, 0, 0, 0, 1, 1, 1, 0, 1, 0, 0, 0, 1, 1},
        {1, 0, 1, 0, 0, 0, 1, 1, 1, 0, 1, 0, 0, 0, 1},
        {1, 1, 0, 1, 0, 0, 0, 1, 1, 1, 0, 1, 0, 0, 0},
    };
    cwbd::IntMatrix m(15, 15);
    for (int i = 0; i < 15; ++i)
        for (int j = 0; j < 15; ++j) m(i, j) = rows[i][j];
    return m;
}

// 6-vertex high-multiplicity pattern with lambda = 2, k = 3.
inline cwbd::IntMatrix six_vertex_pattern() {
    Rows rows = {
        {0, 1, 0, 1, 1, 0}, {0, 0, 1, 0, 1, 1}, {1, 0, 0, 1, 0, 1},
        {1, 1, 0, 0, 1, 0}, {0, 1, 1, 0, 0, 1}, {1, 0, 1, 1, 0, 0},
    };
    cwbd::IntMatrix m(6, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) m(i, j) = rows[i][j];
    return m;
}

// 8-vertex self-converse doubling of the 3-point cyclic tournament (q = 0).
inline cwbd::IntMatrix eight_vertex_pattern() {
    Rows rows = {
        {0, 1, 1, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 1, 0, 0, 1},
        {0, 0, 0, 1, 1, 1, 0, 0}, {0, 1, 0, 0, 1, 0, 1, 0},
        {0, 0, 0, 0, 0, 1, 1, 1}, {1, 0, 0, 1, 0, 0, 1, 0},
        {1, 1, 0, 0, 0, 0, 0, 1}, {1, 0, 1, 0, 0, 1, 0, 0},
    };
    cwbd::IntMatrix m(8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) m(i, j) = rows[i][j];
    return m;
}

} // namespace figures
