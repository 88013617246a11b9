#pragma once

#include "huffbound/closed_form.hpp"
#include "huffbound/code_tree.hpp"
#include "huffbound/rational.hpp"

#include <vector>

namespace huffbound {

// Code anchored at p(x1) = 2^-a, p(x2) = 2^-b: the two known symbols at
// depths a and b, unknown leaves filling the remaining dyadic capacity with
// one leaf per set bit of 1 - 2^-a - 2^-b.
CodeTree anchor_code(int a, int b);

// Candidate closed form for the two-known-symbol bound: direct evaluation
// when the probabilities sum to 1, a split through the dominant symbol when
// one probability reaches 1/2, and otherwise the best of the anchor codes
// at the surrounding dyadic points.
ClosedFormReal conjecture_value(const Rational& p1, const Rational& p2);

struct GridMismatch {
    Rational p1, p2;
    ClosedFormReal conjectured, engine;
};

// Compares the candidate formula against the search engine on the grid
// lo, lo+step, ..., hi (both coordinates, points with p1+p2 > 1 skipped).
// Returns all mismatches, ordered by (p1, p2); expected empty.
std::vector<GridMismatch> check_grid(const Rational& step, const Rational& lo,
                                     const Rational& hi);

}  // namespace huffbound
