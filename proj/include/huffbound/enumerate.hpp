#pragma once

#include "huffbound/code_tree.hpp"

#include <vector>

namespace huffbound {

// Limits for exhaustive code enumeration. Enumeration grows as
// n!*(n-1)!/2^(n-1), so callers must opt in above the default cap; the
// exhaustive path is an oracle, not the production path.
struct EnumLimits {
    int cap = 8;
    bool allow_above_cap = false;

    void check(int n) const;
};

// Every merge trajectory over symbols a1..an yields a tree; with dedup off
// the list keeps one tree per trajectory (so duplicates appear), with dedup
// on only distinct codes remain (codes equal up to child swaps collapse).
std::vector<CodeTree> all_codes(int n, bool dedup, const EnumLimits& limits = {});

// n!*(n-1)!/2^(n-1), the trajectory count.
mpz_class trajectory_count(int n);

}  // namespace huffbound
