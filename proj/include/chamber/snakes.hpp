#pragma once

#include <vector>

#include "chamber/numbers.hpp"

namespace chamber {

enum class SnakeFamily { A, B };

// An alternating sequence of Arnold's snake kind.  For family A the entries
// are x_0 = 0 < x_1 > x_2 < ... covering {0, ..., n}; for family B the
// entries are x_1, ..., x_n with 0 < x_1 > x_2 < ..., distinct absolute
// values covering {1, ..., n} and free signs elsewhere.
struct SnakeSequence {
    SnakeFamily family;
    int n;
    std::vector<int> entries;

    bool operator==(const SnakeSequence&) const = default;
};

// Largest n for which snake_count runs the backtracking enumeration
// (9 for A, 8 for B); beyond it the series route takes over.
int snake_enumeration_bound(SnakeFamily family);

// All snakes of the family on n, in lexicographic order of their entry
// sequences.  Rejects negative n.  Feasible up to the enumeration bound.
std::vector<SnakeSequence> enumerate_snakes(SnakeFamily family, int n);

// |enumerate_snakes(family, n)| computed without materializing the
// sequences, falling back to the generating-function route beyond the
// enumeration bound (A: n <= 9, B: n <= 8).
Int snake_count(SnakeFamily family, int n);

// The numbers n! [x^n] of sec x + tan x (family A) or 1/(cos x - sin x)
// (family B) for n = 0..max_n, by exact rational series arithmetic.
std::vector<Int> snake_counts_series(SnakeFamily family, int max_n);

}  // namespace chamber
