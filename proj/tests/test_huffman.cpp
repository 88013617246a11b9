#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "huffbound/enumerate.hpp"
#include "huffbound/huffman.hpp"

#include <functional>
#include <random>
#include <set>

using namespace huffbound;

namespace {

Source five_symbol_example() {
    return Source(SubSource::of({Rational(1, 10), Rational(21, 100), Rational(15, 100),
                                 Rational(3, 10), Rational(24, 100)},
                                "a"));
}

std::vector<Rational> random_distribution(std::mt19937& rng, int n) {
    std::uniform_int_distribution<long> w(1, 12);
    std::vector<long> ws(n);
    long total = 0;
    for (auto& x : ws) total += (x = w(rng));
    std::vector<Rational> ps;
    for (long x : ws) ps.emplace_back(x, total);
    return ps;
}

// Every admissible choice of the two least-probable elements, explored
// exhaustively; returns the set of average lengths reached.
void explore_ties(std::vector<std::pair<CodeTree, Rational>> state, const Source& src,
                  std::set<std::string>& lengths_seen) {
    if (state.size() == 1) {
        lengths_seen.insert(average_length(state[0].first, src).str());
        return;
    }
    Rational min1 = state[0].second;
    for (const auto& e : state)
        if (e.second < min1) min1 = e.second;
    Rational min2;
    bool first = true;
    for (size_t l = 0; l < state.size(); ++l) {
        bool skipped_one_min = false;
        Rational m;
        bool got = false;
        for (size_t t = 0; t < state.size(); ++t) {
            if (t == l) continue;
            if (!got || state[t].second < m) m = state[t].second, got = true;
        }
        (void)skipped_one_min;
        if (state[l].second == min1) {
            if (first || m < min2) min2 = m, first = false;
        }
    }
    for (size_t j = 0; j + 1 < state.size(); ++j) {
        for (size_t k = j + 1; k < state.size(); ++k) {
            // Admissible when p_j and p_k are no greater than every other.
            bool ok = true;
            for (size_t l = 0; l < state.size(); ++l) {
                if (l == j || l == k) continue;
                if (state[j].second > state[l].second || state[k].second > state[l].second)
                    ok = false;
            }
            if (!ok) continue;
            auto child = state;
            std::pair<CodeTree, Rational> merged{CodeTree::node(child[j].first, child[k].first),
                                                 child[j].second + child[k].second};
            child.erase(child.begin() + static_cast<long>(k));
            child.erase(child.begin() + static_cast<long>(j));
            child.push_back(std::move(merged));
            explore_ties(std::move(child), src, lengths_seen);
        }
    }
}

}  // namespace

TEST_CASE("five-symbol example merges as printed") {
    Source s = five_symbol_example();
    CodeTree t = huffman_tree(s);
    CHECK(t.str() == "[[a2,a5],[a4,[a1,a3]]]");
    auto ls = t.lengths();
    CHECK(ls.at("a1") == 3);
    CHECK(ls.at("a2") == 2);
    CHECK(ls.at("a3") == 3);
    CHECK(ls.at("a4") == 2);
    CHECK(ls.at("a5") == 2);
    auto cw = t.codewords();
    CHECK(cw.at("a1") == "110");
    CHECK(cw.at("a2") == "00");
    CHECK(cw.at("a3") == "111");
    CHECK(cw.at("a4") == "10");
    CHECK(cw.at("a5") == "01");
}

TEST_CASE("two- and three-symbol merges") {
    Source coin(SubSource::of({Rational(1, 2), Rational(1, 2)}, "a"));
    CodeTree t = huffman_tree(coin);
    CHECK(t.str() == "[a1,a2]");
    CHECK(t.codewords().at("a1") == "0");
    CHECK(t.codewords().at("a2") == "1");

    Source dyadic(SubSource::of({Rational(1, 2), Rational(1, 4), Rational(1, 4)}, "a"));
    auto ls = huffman_tree(dyadic).lengths();
    CHECK(ls.at("a1") == 1);
    CHECK(ls.at("a2") == 2);
    CHECK(ls.at("a3") == 2);
}

TEST_CASE("mirroring a node flips the leading bit of its subtree") {
    CodeTree t = CodeTree::node(CodeTree::leaf("a1"),
                                CodeTree::node(CodeTree::leaf("a2"), CodeTree::leaf("a3")));
    CodeTree m = CodeTree::node(CodeTree::node(CodeTree::leaf("a2"), CodeTree::leaf("a3")),
                                CodeTree::leaf("a1"));
    auto tw = t.codewords(), mw = m.codewords();
    CHECK(tw.at("a1") == "0");
    CHECK(mw.at("a1") == "1");
    CHECK(tw.at("a2") == "10");
    CHECK(mw.at("a2") == "00");
}

TEST_CASE("redundancy values") {
    Source dyadic(SubSource::of({Rational(1, 2), Rational(1, 4), Rational(1, 4)}, "a"));
    CHECK(redundancy(huffman_tree(dyadic), dyadic).is_zero());

    Source s = five_symbol_example();
    CodeTree t = huffman_tree(s);
    CHECK(average_length(t, s) == ClosedFormReal(Rational(9, 4)));
    ClosedFormReal r = redundancy(t, s);
    CHECK(r == ClosedFormReal(Rational(9, 4)) - entropy(s));
    CHECK(r.decimal(4) == "0.0192");

    Source near(SubSource::of({Rational(49, 100), Rational(51, 100)}, "a"));
    ClosedFormReal nr = redundancy(huffman_tree(near), near);
    CHECK(nr.decimal(5) == "0.00029");

    Source other(SubSource::of({Rational(1, 3), Rational(2, 3)}, "b"));
    CHECK_THROWS_AS(redundancy(t, other), std::domain_error);
}

TEST_CASE("huffman codes are optimal among all enumerated codes") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> size(2, 5);
    for (int round = 0; round < 12; ++round) {
        int n = size(rng);
        Source s(SubSource::of(random_distribution(rng, n), "a"));
        ClosedFormReal best = redundancy(huffman_tree(s), s);
        CHECK(best >= ClosedFormReal());
        for (const auto& code : all_codes(n, true))
            CHECK(compare(best, redundancy(code, s)) != Ordering::Greater);
    }
}

TEST_CASE("all admissible tie breaks give one average length") {
    std::vector<Source> sources{
        Source(SubSource::of({Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)}, "a")),
        Source(SubSource::of({Rational(1, 3), Rational(1, 3), Rational(1, 3)}, "a")),
        Source(SubSource::of({Rational(1, 6), Rational(1, 6), Rational(1, 3), Rational(1, 3)}, "a")),
        Source(SubSource::of({Rational(1, 2), Rational(1, 4), Rational(1, 8), Rational(1, 8)}, "a")),
    };
    for (const auto& s : sources) {
        std::set<std::string> lengths;
        std::vector<std::pair<CodeTree, Rational>> state;
        for (const auto& [id, p] : s.entries()) state.emplace_back(CodeTree::leaf(id), p);
        explore_ties(state, s, lengths);
        CHECK(lengths.size() == 1);
        CHECK(*lengths.begin() == average_length(huffman_tree(s), s).str());
    }
}

TEST_CASE("trees satisfy Kraft equality") {
    std::mt19937 rng(37);
    std::uniform_int_distribution<int> size(2, 8);
    for (int round = 0; round < 20; ++round) {
        Source s(SubSource::of(random_distribution(rng, size(rng)), "a"));
        CHECK(huffman_tree(s).kraft_equality());
    }
}

TEST_CASE("merging the first-merged pair never raises redundancy") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> size(3, 7);
    for (int round = 0; round < 25; ++round) {
        Source a(SubSource::of(random_distribution(rng, size(rng)), "a"));
        // Algorithm step 2 on the initial state: the two smallest indices.
        size_t j = 0;
        for (size_t l = 1; l < a.size(); ++l)
            if (a.entries()[l].second < a.entries()[j].second) j = l;
        size_t k = (j == 0) ? 1 : 0;
        for (size_t l = 0; l < a.size(); ++l) {
            if (l == j) continue;
            if (a.entries()[l].second < a.entries()[k].second) k = l;
        }
        std::vector<SubSource::Entry> merged;
        for (size_t l = 0; l < a.size(); ++l)
            if (l != j && l != k) merged.push_back(a.entries()[l]);
        merged.emplace_back("m", a.entries()[j].second + a.entries()[k].second);
        Source b{SubSource(merged)};
        ClosedFormReal ra = redundancy(huffman_tree(a), a);
        ClosedFormReal rb = redundancy(huffman_tree(b), b);
        CHECK(compare(rb, ra) != Ordering::Greater);
    }
}

TEST_CASE("small sources are rejected") {
    CHECK_THROWS_AS(huffman_tree(Source(SubSource::of({Rational(1)}), true)), std::domain_error);
}
