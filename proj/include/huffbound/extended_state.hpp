#pragma once

#include "huffbound/code_tree.hpp"
#include "huffbound/rational.hpp"
#include "huffbound/source.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace huffbound {

// Probability of a merge result: a known rational constant plus a set of
// unknown-symbol probabilities, each appearing with coefficient 1.
struct AffineProb {
    Rational constant;
    std::set<int> unknowns;

    AffineProb plus(const AffineProb& o) const;
    AffineProb plus_unknown(int idx) const;
};

// One inequality, stored normalized as  constant + sum coeff_i * u_i >= 0
// with every coefficient -1 or +1. Tautological constant rows are dropped
// at construction sites; violated constant rows are kept so that the
// feasibility check can certify them.
struct LinearInequality {
    Rational constant;
    std::map<int, int> coeffs;

    // lhs <= rhs
    static LinearInequality le(const AffineProb& lhs, const AffineProb& rhs);

    bool is_constant() const { return coeffs.empty(); }
    bool constant_true() const { return coeffs.empty() && constant.sign() >= 0; }
    std::string key() const;
};

// Search state: the known-side merge forest with probabilities, the count
// of unknown symbols drawn so far, and the accumulated inequalities.
// Unknown symbol u_k exists for k < unknown_count; index unknown_count
// stands for the next unknown yet to be drawn.
struct ExtendedState {
    std::vector<std::pair<CodeTree, AffineProb>> known;
    int unknown_count = 0;
    std::vector<LinearInequality> constraints;

    void add_constraint(LinearInequality c);

    // Key identical for states equal up to renaming of the unknowns.
    std::string canonical_key() const;
};

ExtendedState initial_state(const SubSource& x);

// Merges known elements i and j (0-based, i < j); records that both were
// no more probable than every other known element and than any unknown
// still to come.
ExtendedState merge_known(const ExtendedState& st, size_t i, size_t j);

// Merges known element i with a freshly drawn unknown.
ExtendedState merge_with_unknown(const ExtendedState& st, size_t i);

}  // namespace huffbound
