#pragma once

// Generated by tests/data/extract_reference.py; do not edit.

#include <array>
#include <vector>

namespace reference {

// The 24 elements of SL(2,3), row major.
inline const std::vector<std::array<int, 4>> kElements = {
    {0, 1, 2, 0},
    {0, 1, 2, 1},
    {0, 1, 2, 2},
    {0, 2, 1, 0},
    {0, 2, 1, 1},
    {0, 2, 1, 2},
    {1, 0, 0, 1},
    {1, 1, 2, 0},
    {1, 2, 1, 0},
    {2, 0, 0, 2},
    {2, 1, 2, 0},
    {2, 2, 1, 0},
    {1, 0, 1, 1},
    {1, 0, 2, 1},
    {1, 1, 0, 1},
    {1, 1, 1, 2},
    {1, 2, 0, 1},
    {1, 2, 2, 2},
    {2, 0, 1, 2},
    {2, 0, 2, 2},
    {2, 1, 0, 2},
    {2, 1, 1, 1},
    {2, 2, 0, 2},
    {2, 2, 2, 1},
};

// k * phi ('p'), k * psi ('q') or the integer k ('n'), with
// phi = 1 + i sqrt 3 and psi = 1 - i sqrt 3.
struct Entry {
  int k;
  char kind;
};

// Blocks of 24 S for I <= J in the order (1,1), (1,2), ..., (1,7), (2,2), ..., (7,7).
inline const std::vector<std::vector<std::vector<Entry>>> kScaledSBlocks = {
    {
        {{1, 'n'}, {1, 'n'}, {1, 'n'}, {2, 'n'}, {2, 'n'}, {2, 'n'}, {3, 'n'}},
        {{1, 'n'}, {1, 'n'}, {1, 'n'}, {2, 'n'}, {2, 'n'}, {2, 'n'}, {3, 'n'}},
        {{1, 'n'}, {1, 'n'}, {1, 'n'}, {2, 'n'}, {2, 'n'}, {2, 'n'}, {3, 'n'}},
        {{2, 'n'}, {2, 'n'}, {2, 'n'}, {4, 'n'}, {4, 'n'}, {4, 'n'}, {6, 'n'}},
        {{2, 'n'}, {2, 'n'}, {2, 'n'}, {4, 'n'}, {4, 'n'}, {4, 'n'}, {6, 'n'}},
        {{2, 'n'}, {2, 'n'}, {2, 'n'}, {4, 'n'}, {4, 'n'}, {4, 'n'}, {6, 'n'}},
        {{3, 'n'}, {3, 'n'}, {3, 'n'}, {6, 'n'}, {6, 'n'}, {6, 'n'}, {9, 'n'}},
    },
    {
        {{1, 'n'}, {1, 'n'}, {1, 'n'}, {2, 'n'}, {2, 'n'}, {2, 'n'}, {3, 'n'}},
        {{1, 'n'}, {1, 'n'}, {1, 'n'}, {2, 'n'}, {2, 'n'}, {2, 'n'}, {3, 'n'}},
        {{1, 'n'}, {1, 'n'}, {1, 'n'}, {2, 'n'}, {2, 'n'}, {2, 'n'}, {3, 'n'}},
        {{-2, 'n'}, {-2, 'n'}, {-2, 'n'}, {-4, 'n'}, {-4, 'n'}, {-4, 'n'}, {-6, 'n'}},
        {{-2, 'n'}, {-2, 'n'}, {-2, 'n'}, {-4, 'n'}, {-4, 'n'}, {-4, 'n'}, {-6, 'n'}},
        {{-2, 'n'}, {-2, 'n'}, {-2, 'n'}, {-4, 'n'}, {-4, 'n'}, {-4, 'n'}, {-6, 'n'}},
        {{3, 'n'}, {3, 'n'}, {3, 'n'}, {6, 'n'}, {6, 'n'}, {6, 'n'}, {9, 'n'}},
    },
    {
        {{4, 'n'}, {4, 'n'}, {4, 'n'}, {4, 'n'}, {4, 'n'}, {4, 'n'}},
        {{-2, 'q'}, {-2, 'q'}, {-2, 'q'}, {-2, 'q'}, {-2, 'q'}, {-2, 'q'}},
        {{-2, 'p'}, {-2, 'p'}, {-2, 'p'}, {-2, 'p'}, {-2, 'p'}, {-2, 'p'}},
        {{-4, 'n'}, {-4, 'n'}, {-4, 'n'}, {-4, 'n'}, {-4, 'n'}, {-4, 'n'}},
        {{2, 'q'}, {2, 'q'}, {2, 'q'}, {2, 'q'}, {2, 'q'}, {2, 'q'}},
        {{2, 'p'}, {2, 'p'}, {2, 'p'}, {2, 'p'}, {2, 'p'}, {2, 'p'}},
        {{0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}},
    },
    {
        {{4, 'n'}, {4, 'n'}, {4, 'n'}, {4, 'n'}, {4, 'n'}, {4, 'n'}},
        {{-2, 'p'}, {-2, 'p'}, {-2, 'p'}, {-2, 'p'}, {-2, 'p'}, {-2, 'p'}},
        {{-2, 'q'}, {-2, 'q'}, {-2, 'q'}, {-2, 'q'}, {-2, 'q'}, {-2, 'q'}},
        {{-4, 'n'}, {-4, 'n'}, {-4, 'n'}, {-4, 'n'}, {-4, 'n'}, {-4, 'n'}},
        {{2, 'p'}, {2, 'p'}, {2, 'p'}, {2, 'p'}, {2, 'p'}, {2, 'p'}},
        {{2, 'q'}, {2, 'q'}, {2, 'q'}, {2, 'q'}, {2, 'q'}, {2, 'q'}},
        {{0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}},
    },
    {
        {{6, 'n'}, {6, 'n'}, {6, 'n'}, {6, 'n'}},
        {{6, 'n'}, {6, 'n'}, {6, 'n'}, {6, 'n'}},
        {{6, 'n'}, {6, 'n'}, {6, 'n'}, {6, 'n'}},
        {{0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}},
        {{0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}},
        {{0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}},
        {{-6, 'n'}, {-6, 'n'}, {-6, 'n'}, {-6, 'n'}},
    },
    {
        {{4, 'n'}, {4, 'n'}, {4, 'n'}, {4, 'n'}, {4, 'n'}, {4, 'n'}},
        {{-2, 'p'}, {-2, 'p'}, {-2, 'p'}, {-2, 'p'}, {-2, 'p'}, {-2, 'p'}},
        {{-2, 'q'}, {-2, 'q'}, {-2, 'q'}, {-2, 'q'}, {-2, 'q'}, {-2, 'q'}},
        {{4, 'n'}, {4, 'n'}, {4, 'n'}, {4, 'n'}, {4, 'n'}, {4, 'n'}},
        {{-2, 'p'}, {-2, 'p'}, {-2, 'p'}, {-2, 'p'}, {-2, 'p'}, {-2, 'p'}},
        {{-2, 'q'}, {-2, 'q'}, {-2, 'q'}, {-2, 'q'}, {-2, 'q'}, {-2, 'q'}},
        {{0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}},
    },
    {
        {{4, 'n'}, {4, 'n'}, {4, 'n'}, {4, 'n'}, {4, 'n'}, {4, 'n'}},
        {{-2, 'q'}, {-2, 'q'}, {-2, 'q'}, {-2, 'q'}, {-2, 'q'}, {-2, 'q'}},
        {{-2, 'p'}, {-2, 'p'}, {-2, 'p'}, {-2, 'p'}, {-2, 'p'}, {-2, 'p'}},
        {{4, 'n'}, {4, 'n'}, {4, 'n'}, {4, 'n'}, {4, 'n'}, {4, 'n'}},
        {{-2, 'q'}, {-2, 'q'}, {-2, 'q'}, {-2, 'q'}, {-2, 'q'}, {-2, 'q'}},
        {{-2, 'p'}, {-2, 'p'}, {-2, 'p'}, {-2, 'p'}, {-2, 'p'}, {-2, 'p'}},
        {{0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}},
    },
    {
        {{1, 'n'}, {1, 'n'}, {1, 'n'}, {-2, 'n'}, {-2, 'n'}, {-2, 'n'}, {3, 'n'}},
        {{1, 'n'}, {1, 'n'}, {1, 'n'}, {-2, 'n'}, {-2, 'n'}, {-2, 'n'}, {3, 'n'}},
        {{1, 'n'}, {1, 'n'}, {1, 'n'}, {-2, 'n'}, {-2, 'n'}, {-2, 'n'}, {3, 'n'}},
        {{-2, 'n'}, {-2, 'n'}, {-2, 'n'}, {4, 'n'}, {4, 'n'}, {4, 'n'}, {-6, 'n'}},
        {{-2, 'n'}, {-2, 'n'}, {-2, 'n'}, {4, 'n'}, {4, 'n'}, {4, 'n'}, {-6, 'n'}},
        {{-2, 'n'}, {-2, 'n'}, {-2, 'n'}, {4, 'n'}, {4, 'n'}, {4, 'n'}, {-6, 'n'}},
        {{3, 'n'}, {3, 'n'}, {3, 'n'}, {-6, 'n'}, {-6, 'n'}, {-6, 'n'}, {9, 'n'}},
    },
    {
        {{4, 'n'}, {-4, 'n'}, {4, 'n'}, {-4, 'n'}, {4, 'n'}, {-4, 'n'}},
        {{-2, 'q'}, {2, 'q'}, {-2, 'q'}, {2, 'q'}, {-2, 'q'}, {2, 'q'}},
        {{-2, 'p'}, {2, 'p'}, {-2, 'p'}, {2, 'p'}, {-2, 'p'}, {2, 'p'}},
        {{-4, 'n'}, {4, 'n'}, {-4, 'n'}, {4, 'n'}, {-4, 'n'}, {4, 'n'}},
        {{2, 'q'}, {-2, 'q'}, {2, 'q'}, {-2, 'q'}, {2, 'q'}, {-2, 'q'}},
        {{2, 'p'}, {-2, 'p'}, {2, 'p'}, {-2, 'p'}, {2, 'p'}, {-2, 'p'}},
        {{0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}},
    },
    {
        {{4, 'n'}, {-4, 'n'}, {4, 'n'}, {-4, 'n'}, {4, 'n'}, {-4, 'n'}},
        {{-2, 'p'}, {2, 'p'}, {-2, 'p'}, {2, 'p'}, {-2, 'p'}, {2, 'p'}},
        {{-2, 'q'}, {2, 'q'}, {-2, 'q'}, {2, 'q'}, {-2, 'q'}, {2, 'q'}},
        {{-4, 'n'}, {4, 'n'}, {-4, 'n'}, {4, 'n'}, {-4, 'n'}, {4, 'n'}},
        {{2, 'p'}, {-2, 'p'}, {2, 'p'}, {-2, 'p'}, {2, 'p'}, {-2, 'p'}},
        {{2, 'q'}, {-2, 'q'}, {2, 'q'}, {-2, 'q'}, {2, 'q'}, {-2, 'q'}},
        {{0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}},
    },
    {
        {{6, 'n'}, {-6, 'n'}, {6, 'n'}, {-6, 'n'}},
        {{6, 'n'}, {-6, 'n'}, {6, 'n'}, {-6, 'n'}},
        {{6, 'n'}, {-6, 'n'}, {6, 'n'}, {-6, 'n'}},
        {{0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}},
        {{0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}},
        {{0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}},
        {{-6, 'n'}, {6, 'n'}, {-6, 'n'}, {6, 'n'}},
    },
    {
        {{4, 'n'}, {-4, 'n'}, {4, 'n'}, {-4, 'n'}, {4, 'n'}, {-4, 'n'}},
        {{-2, 'p'}, {2, 'p'}, {-2, 'p'}, {2, 'p'}, {-2, 'p'}, {2, 'p'}},
        {{-2, 'q'}, {2, 'q'}, {-2, 'q'}, {2, 'q'}, {-2, 'q'}, {2, 'q'}},
        {{4, 'n'}, {-4, 'n'}, {4, 'n'}, {-4, 'n'}, {4, 'n'}, {-4, 'n'}},
        {{-2, 'p'}, {2, 'p'}, {-2, 'p'}, {2, 'p'}, {-2, 'p'}, {2, 'p'}},
        {{-2, 'q'}, {2, 'q'}, {-2, 'q'}, {2, 'q'}, {-2, 'q'}, {2, 'q'}},
        {{0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}},
    },
    {
        {{4, 'n'}, {-4, 'n'}, {4, 'n'}, {-4, 'n'}, {4, 'n'}, {-4, 'n'}},
        {{-2, 'q'}, {2, 'q'}, {-2, 'q'}, {2, 'q'}, {-2, 'q'}, {2, 'q'}},
        {{-2, 'p'}, {2, 'p'}, {-2, 'p'}, {2, 'p'}, {-2, 'p'}, {2, 'p'}},
        {{4, 'n'}, {-4, 'n'}, {4, 'n'}, {-4, 'n'}, {4, 'n'}, {-4, 'n'}},
        {{-2, 'q'}, {2, 'q'}, {-2, 'q'}, {2, 'q'}, {-2, 'q'}, {2, 'q'}},
        {{-2, 'p'}, {2, 'p'}, {-2, 'p'}, {2, 'p'}, {-2, 'p'}, {2, 'p'}},
        {{0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}},
    },
    {
        {{4, 'n'}, {4, 'n'}, {-2, 'p'}, {-2, 'p'}, {-2, 'q'}, {-2, 'q'}},
        {{4, 'n'}, {4, 'n'}, {-2, 'p'}, {-2, 'p'}, {-2, 'q'}, {-2, 'q'}},
        {{-2, 'p'}, {-2, 'p'}, {-2, 'q'}, {-2, 'q'}, {4, 'n'}, {4, 'n'}},
        {{-2, 'p'}, {-2, 'p'}, {-2, 'q'}, {-2, 'q'}, {4, 'n'}, {4, 'n'}},
        {{-2, 'q'}, {-2, 'q'}, {4, 'n'}, {4, 'n'}, {-2, 'p'}, {-2, 'p'}},
        {{-2, 'q'}, {-2, 'q'}, {4, 'n'}, {4, 'n'}, {-2, 'p'}, {-2, 'p'}},
    },
    {
        {{4, 'n'}, {4, 'n'}, {-2, 'p'}, {-2, 'p'}, {-2, 'q'}, {-2, 'q'}},
        {{4, 'n'}, {4, 'n'}, {-2, 'p'}, {-2, 'p'}, {-2, 'q'}, {-2, 'q'}},
        {{-2, 'q'}, {-2, 'q'}, {4, 'n'}, {4, 'n'}, {-2, 'p'}, {-2, 'p'}},
        {{-2, 'q'}, {-2, 'q'}, {4, 'n'}, {4, 'n'}, {-2, 'p'}, {-2, 'p'}},
        {{-2, 'p'}, {-2, 'p'}, {-2, 'q'}, {-2, 'q'}, {4, 'n'}, {4, 'n'}},
        {{-2, 'p'}, {-2, 'p'}, {-2, 'q'}, {-2, 'q'}, {4, 'n'}, {4, 'n'}},
    },
    {
        {{0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}},
        {{0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}},
        {{0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}},
        {{0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}},
        {{0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}},
        {{0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}},
    },
    {
        {{4, 'n'}, {4, 'n'}, {-2, 'p'}, {-2, 'p'}, {-2, 'q'}, {-2, 'q'}},
        {{-4, 'n'}, {-4, 'n'}, {2, 'p'}, {2, 'p'}, {2, 'q'}, {2, 'q'}},
        {{-2, 'q'}, {-2, 'q'}, {4, 'n'}, {4, 'n'}, {-2, 'p'}, {-2, 'p'}},
        {{2, 'q'}, {2, 'q'}, {-4, 'n'}, {-4, 'n'}, {2, 'p'}, {2, 'p'}},
        {{-2, 'p'}, {-2, 'p'}, {-2, 'q'}, {-2, 'q'}, {4, 'n'}, {4, 'n'}},
        {{2, 'p'}, {2, 'p'}, {2, 'q'}, {2, 'q'}, {-4, 'n'}, {-4, 'n'}},
    },
    {
        {{4, 'n'}, {4, 'n'}, {-2, 'p'}, {-2, 'p'}, {-2, 'q'}, {-2, 'q'}},
        {{-4, 'n'}, {-4, 'n'}, {2, 'p'}, {2, 'p'}, {2, 'q'}, {2, 'q'}},
        {{-2, 'p'}, {-2, 'p'}, {-2, 'q'}, {-2, 'q'}, {4, 'n'}, {4, 'n'}},
        {{2, 'p'}, {2, 'p'}, {2, 'q'}, {2, 'q'}, {-4, 'n'}, {-4, 'n'}},
        {{-2, 'q'}, {-2, 'q'}, {4, 'n'}, {4, 'n'}, {-2, 'p'}, {-2, 'p'}},
        {{2, 'q'}, {2, 'q'}, {-4, 'n'}, {-4, 'n'}, {2, 'p'}, {2, 'p'}},
    },
    {
        {{4, 'n'}, {4, 'n'}, {-2, 'q'}, {-2, 'q'}, {-2, 'p'}, {-2, 'p'}},
        {{4, 'n'}, {4, 'n'}, {-2, 'q'}, {-2, 'q'}, {-2, 'p'}, {-2, 'p'}},
        {{-2, 'q'}, {-2, 'q'}, {-2, 'p'}, {-2, 'p'}, {4, 'n'}, {4, 'n'}},
        {{-2, 'q'}, {-2, 'q'}, {-2, 'p'}, {-2, 'p'}, {4, 'n'}, {4, 'n'}},
        {{-2, 'p'}, {-2, 'p'}, {4, 'n'}, {4, 'n'}, {-2, 'q'}, {-2, 'q'}},
        {{-2, 'p'}, {-2, 'p'}, {4, 'n'}, {4, 'n'}, {-2, 'q'}, {-2, 'q'}},
    },
    {
        {{0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}},
        {{0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}},
        {{0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}},
        {{0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}},
        {{0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}},
        {{0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}},
    },
    {
        {{4, 'n'}, {4, 'n'}, {-2, 'q'}, {-2, 'q'}, {-2, 'p'}, {-2, 'p'}},
        {{-4, 'n'}, {-4, 'n'}, {2, 'q'}, {2, 'q'}, {2, 'p'}, {2, 'p'}},
        {{-2, 'q'}, {-2, 'q'}, {-2, 'p'}, {-2, 'p'}, {4, 'n'}, {4, 'n'}},
        {{2, 'q'}, {2, 'q'}, {2, 'p'}, {2, 'p'}, {-4, 'n'}, {-4, 'n'}},
        {{-2, 'p'}, {-2, 'p'}, {4, 'n'}, {4, 'n'}, {-2, 'q'}, {-2, 'q'}},
        {{2, 'p'}, {2, 'p'}, {-4, 'n'}, {-4, 'n'}, {2, 'q'}, {2, 'q'}},
    },
    {
        {{4, 'n'}, {4, 'n'}, {-2, 'q'}, {-2, 'q'}, {-2, 'p'}, {-2, 'p'}},
        {{-4, 'n'}, {-4, 'n'}, {2, 'q'}, {2, 'q'}, {2, 'p'}, {2, 'p'}},
        {{-2, 'p'}, {-2, 'p'}, {4, 'n'}, {4, 'n'}, {-2, 'q'}, {-2, 'q'}},
        {{2, 'p'}, {2, 'p'}, {-4, 'n'}, {-4, 'n'}, {2, 'q'}, {2, 'q'}},
        {{-2, 'q'}, {-2, 'q'}, {-2, 'p'}, {-2, 'p'}, {4, 'n'}, {4, 'n'}},
        {{2, 'q'}, {2, 'q'}, {2, 'p'}, {2, 'p'}, {-4, 'n'}, {-4, 'n'}},
    },
    {
        {{12, 'n'}, {0, 'n'}, {-12, 'n'}, {0, 'n'}},
        {{0, 'n'}, {-12, 'n'}, {0, 'n'}, {12, 'n'}},
        {{-12, 'n'}, {0, 'n'}, {12, 'n'}, {0, 'n'}},
        {{0, 'n'}, {12, 'n'}, {0, 'n'}, {-12, 'n'}},
    },
    {
        {{0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}},
        {{0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}},
        {{0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}},
        {{0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}},
    },
    {
        {{0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}},
        {{0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}},
        {{0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}},
        {{0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}, {0, 'n'}},
    },
    {
        {{4, 'n'}, {-4, 'n'}, {-2, 'q'}, {2, 'q'}, {-2, 'p'}, {2, 'p'}},
        {{-4, 'n'}, {4, 'n'}, {2, 'q'}, {-2, 'q'}, {2, 'p'}, {-2, 'p'}},
        {{-2, 'q'}, {2, 'q'}, {-2, 'p'}, {2, 'p'}, {4, 'n'}, {-4, 'n'}},
        {{2, 'q'}, {-2, 'q'}, {2, 'p'}, {-2, 'p'}, {-4, 'n'}, {4, 'n'}},
        {{-2, 'p'}, {2, 'p'}, {4, 'n'}, {-4, 'n'}, {-2, 'q'}, {2, 'q'}},
        {{2, 'p'}, {-2, 'p'}, {-4, 'n'}, {4, 'n'}, {2, 'q'}, {-2, 'q'}},
    },
    {
        {{4, 'n'}, {-4, 'n'}, {-2, 'q'}, {2, 'q'}, {-2, 'p'}, {2, 'p'}},
        {{-4, 'n'}, {4, 'n'}, {2, 'q'}, {-2, 'q'}, {2, 'p'}, {-2, 'p'}},
        {{-2, 'p'}, {2, 'p'}, {4, 'n'}, {-4, 'n'}, {-2, 'q'}, {2, 'q'}},
        {{2, 'p'}, {-2, 'p'}, {-4, 'n'}, {4, 'n'}, {2, 'q'}, {-2, 'q'}},
        {{-2, 'q'}, {2, 'q'}, {-2, 'p'}, {2, 'p'}, {4, 'n'}, {-4, 'n'}},
        {{2, 'q'}, {-2, 'q'}, {2, 'p'}, {-2, 'p'}, {-4, 'n'}, {4, 'n'}},
    },
    {
        {{4, 'n'}, {-4, 'n'}, {-2, 'p'}, {2, 'p'}, {-2, 'q'}, {2, 'q'}},
        {{-4, 'n'}, {4, 'n'}, {2, 'p'}, {-2, 'p'}, {2, 'q'}, {-2, 'q'}},
        {{-2, 'p'}, {2, 'p'}, {-2, 'q'}, {2, 'q'}, {4, 'n'}, {-4, 'n'}},
        {{2, 'p'}, {-2, 'p'}, {2, 'q'}, {-2, 'q'}, {-4, 'n'}, {4, 'n'}},
        {{-2, 'q'}, {2, 'q'}, {4, 'n'}, {-4, 'n'}, {-2, 'p'}, {2, 'p'}},
        {{2, 'q'}, {-2, 'q'}, {-4, 'n'}, {4, 'n'}, {2, 'p'}, {-2, 'p'}},
    },
};

}  // namespace reference
