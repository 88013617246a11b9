#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "huffbound/feasibility.hpp"
#include "huffbound/huffman.hpp"
#include "huffbound/prune.hpp"

#include <random>

using namespace huffbound;

namespace {

SubSource xs(std::vector<Rational> ps) { return SubSource::of(std::move(ps)); }

bool has_key(const ExtendedState& st, const std::string& key) {
    for (const auto& c : st.constraints)
        if (c.key() == key) return true;
    return false;
}

// True when x1 and x2 sit under one parent node somewhere in the tree.
bool known_pair_adjacent(const CodeTree& t) {
    if (t.is_leaf()) return false;
    if (!t.left().is_leaf() || !t.right().is_leaf())
        return known_pair_adjacent(t.left()) || known_pair_adjacent(t.right());
    auto a = t.left().symbol(), b = t.right().symbol();
    return (a == "x1" && b == "x2") || (a == "x2" && b == "x1");
}

std::vector<Rational> random_subprobs_with_small_threshold(std::mt19937& rng) {
    std::uniform_int_distribution<int> m(1, 3);
    std::uniform_int_distribution<long> num(1, 12);
    while (true) {
        int k = m(rng);
        std::vector<Rational> ps;
        Rational sum;
        for (int i = 0; i < k; ++i) {
            Rational p(num(rng), 24);
            if (sum + p > Rational(1)) continue;
            ps.push_back(p);
            sum += p;
        }
        if (ps.empty()) continue;
        SubSource x = SubSource::of(ps);
        if (threshold(x) <= 6) return ps;
    }
}

}  // namespace

TEST_CASE("initial states") {
    ExtendedState st = initial_state(xs({Rational(2, 5)}));
    REQUIRE(st.known.size() == 1);
    CHECK(st.known[0].first.str() == "x1");
    CHECK(st.known[0].second.constant == Rational(2, 5));
    CHECK(st.unknown_count == 0);
    REQUIRE(st.constraints.size() == 1);
    CHECK(st.constraints[0].key() == "0+u0");

    CHECK(initial_state(xs({Rational(2, 5), Rational(2, 5)})).known.size() == 2);
    CHECK(initial_state(xs({Rational(1, 100)})).known.size() == 1);
    CHECK_THROWS_AS(initial_state(SubSource()), std::domain_error);
}

TEST_CASE("merging two known elements records their minimality") {
    ExtendedState st = initial_state(xs({Rational(2, 5), Rational(2, 5)}));
    ExtendedState merged = merge_known(st, 0, 1);
    REQUIRE(merged.known.size() == 1);
    CHECK(merged.known[0].first.str() == "[x1,x2]");
    CHECK(merged.known[0].second.constant == Rational(4, 5));
    CHECK(merged.unknown_count == 0);
    // Both "known <= next unknown" rows collapse to one after normalization.
    CHECK(has_key(merged, "-2/5+u0"));

    ExtendedState three = initial_state(xs({Rational(1, 8), Rational(1, 4), Rational(1, 2)}));
    ExtendedState m2 = merge_known(three, 0, 1);
    CHECK(m2.known.size() == 2);
    CHECK(m2.known.back().first.str() == "[x1,x2]");
    CHECK(has_key(m2, "-1/8+u0"));
    CHECK(has_key(m2, "-1/4+u0"));
    CHECK_THROWS_AS(merge_known(st, 1, 1), std::domain_error);
}

TEST_CASE("merging with a fresh unknown tracks the drawing order") {
    ExtendedState st = initial_state(xs({Rational(2, 5)}));
    ExtendedState one = merge_with_unknown(st, 0);
    REQUIRE(one.known.size() == 1);
    CHECK(one.known[0].first.str() == "[x1,u0]");
    CHECK(one.known[0].second.constant == Rational(2, 5));
    CHECK(one.known[0].second.unknowns.count(0) == 1);
    CHECK(one.unknown_count == 1);
    CHECK(has_key(one, "-2/5+u1"));  // known element precedes the next unknown
    CHECK(has_key(one, "0-u0+u1"));  // unknowns drawn in non-decreasing order

    ExtendedState two = merge_with_unknown(one, 0);
    CHECK(two.known[0].first.str() == "[[x1,u0],u1]");
    CHECK(two.unknown_count == 2);
}

TEST_CASE("hundredth example collects eleven states") {
    PruneResult pr = state_search(xs({Rational(1, 100)}));
    CHECK(pr.threshold_value == 100);
    CHECK(pr.psi.size() == 11);
    for (const auto& st : pr.psi) {
        REQUIRE(st.known.size() == 1);
        CHECK(st.known[0].first.kraft_equality());
        CHECK(1 + st.unknown_count <= pr.threshold_value);
    }
    CHECK(pr.stats.unverified_keeps == 0);
    CHECK(pr.stats.infeasible_dropped == pr.stats.certificates_verified);

    PruneOptions raw;
    raw.dedup = false;
    PruneResult pr_raw = state_search(xs({Rational(1, 100)}), raw);
    CHECK(pr_raw.psi.size() == 11);  // a single-chain search has no duplicates

    CHECK(describe_psi(xs({Rational(1, 100)}), pr).size() == 11);
}

TEST_CASE("equal pair: no surviving code merges the knowns first") {
    SubSource x = xs({Rational(2, 5), Rational(2, 5)});
    PruneResult pr = state_search(x);
    CHECK(pr.threshold_value == 3);
    for (const auto& st : pr.psi) {
        if (st.unknown_count == 0) continue;  // the bare [x1,x2] state carries no unknowns
        CHECK_FALSE(known_pair_adjacent(st.known[0].first));
    }
    StarResult sr = r_min_star(x);
    CHECK(sr.bound.value == r_min_star_oracle(x).value);
    CHECK_FALSE(known_pair_adjacent(sr.bound.best_code));
}

TEST_CASE("general bound matches the published two-known example") {
    StarResult r = r_min_star(xs({Rational(49, 100), Rational(1, 2)}));
    CHECK(r.bound.value == ClosedFormReal::parse("0 + (-1)*log2(5) + (49/50)*log2(7)"));
    CHECK(r.bound.value.decimal(6) == "0.429280");
    CHECK(r.threshold_value == 3);
    CHECK(r.psi_size >= 1);

    std::vector<SubSource::Entry> entries = xs({Rational(49, 100), Rational(1, 2)}).entries();
    for (const auto& [leaf, p] : r.bound.witness) entries.emplace_back(leaf, p);
    Source completed{SubSource(entries)};
    CHECK(redundancy(r.bound.best_code, completed) == r.bound.value);
}

TEST_CASE("trivial and degenerate inputs") {
    CHECK(r_min_star(SubSource()).bound.value.is_zero());
    CHECK(r_min_star(xs({Rational(1, 2)})).bound.value.is_zero());
    CHECK(r_min_star(xs({Rational(1)})).bound.value.is_zero());
    StarResult half = r_min_star(xs({Rational(1, 2), Rational(1, 2)}));
    CHECK(half.bound.value.is_zero());
    CHECK(half.bound.best_code.str() == "[x1,x2]");
}

TEST_CASE("pruned search equals exhaustive search") {
    std::mt19937 rng(71);
    for (int round = 0; round < 25; ++round) {
        SubSource x = xs(random_subprobs_with_small_threshold(rng));
        StarResult pruned = r_min_star(x);
        BoundResult oracle = r_min_star_oracle(x);
        CHECK(pruned.bound.value == oracle.value);
        CHECK(pruned.stats.unverified_keeps == 0);
    }
}

TEST_CASE("state counts may differ raw vs deduplicated, values never") {
    PruneOptions raw;
    raw.dedup = false;
    for (auto probs : {std::vector<Rational>{Rational(49, 100), Rational(1, 2)},
                       std::vector<Rational>{Rational(1, 4), Rational(1, 4)},
                       std::vector<Rational>{Rational(3, 10), Rational(1, 5)}}) {
        SubSource x = xs(probs);
        StarResult a = r_min_star(x);
        StarResult b = r_min_star(x, raw);
        CHECK(a.bound.value == b.bound.value);
        CHECK(a.psi_size <= b.psi_size);
    }
}

TEST_CASE("every kept state is consistent, every drop certified") {
    SubSource x = xs({Rational(1, 5), Rational(3, 10)});
    PruneResult pr = state_search(x);
    CHECK(pr.stats.infeasible_dropped > 0);
    CHECK(pr.stats.infeasible_dropped == pr.stats.certificates_verified);
    CHECK(pr.stats.unverified_keeps == 0);
    for (const auto& st : pr.psi) {
        LinearSystem sys = build_system(st, x);
        CHECK(check(sys).feasible);
    }
}
