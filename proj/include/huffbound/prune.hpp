#pragma once

#include "huffbound/extended_state.hpp"
#include "huffbound/optimize.hpp"
#include "huffbound/source.hpp"

#include <vector>

namespace huffbound {

struct PruneOptions {
    // Merge states identical up to renaming of the unknowns. Off, every
    // trajectory is kept separately; the computed bound is the same either
    // way, only the state counts differ.
    bool dedup = true;
    size_t max_states = 2'000'000;
};

struct PruneStats {
    long long generated = 0;
    long long expanded = 0;
    long long infeasible_dropped = 0;
    long long certificates_verified = 0;
    long long duplicates_merged = 0;
    // States kept despite an unverified infeasibility claim; the search
    // only ever drops a state on a verified certificate, so this staying
    // zero is an invariant, not a tuning knob.
    long long unverified_keeps = 0;
};

struct PruneResult {
    std::vector<ExtendedState> psi;  // all reached one-tree states
    PruneStats stats;
    long threshold_value = 0;
};

// Breadth-first search over extended states: merges of two known-side
// elements always allowed, a merge with a fresh unknown gated by the
// alphabet-size threshold, and every child kept only if its consistency
// system is solvable. One-tree states are collected along the way, the
// starting state included when it already is one.
PruneResult state_search(const SubSource& x, const PruneOptions& opt = {});

struct StarResult {
    BoundResult bound;
    PruneStats stats;
    long threshold_value = 0;
    size_t psi_size = 0;
};

// The general bound: minimum of the per-code optimum over the collected
// states. Returns 0 immediately for an empty sub-source.
StarResult r_min_star(const SubSource& x, const PruneOptions& opt = {});

// One diagnostic line per collected state: tree, unknown count, constraint
// count, bound value.
std::vector<std::string> describe_psi(const SubSource& x, const PruneResult& pr, int digits = 6);

}  // namespace huffbound
