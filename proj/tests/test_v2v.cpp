#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "huffbound/huffman.hpp"
#include "huffbound/v2v.hpp"

using namespace huffbound;

namespace {

ClosedFormReal L(long p) { return ClosedFormReal::log2(Rational(p)); }

Source binary_base() { return Source(SubSource::of({Rational(9, 10), Rational(1, 10)}, "a")); }

Source ternary_base() {
    return Source(SubSource::of({Rational(7, 10), Rational(2, 10), Rational(1, 10)}, "a"));
}

Dictionary all_pairs(int alphabet) {
    Dictionary d;
    for (int i = 1; i <= alphabet; ++i)
        for (int j = 1; j <= alphabet; ++j) d.words.push_back({i, j});
    return d;
}

}  // namespace

TEST_CASE("dictionary parsing and validation") {
    Dictionary d = Dictionary::parse("a1a1,a1a2,a2");
    REQUIRE(d.words.size() == 3);
    CHECK(d.words[0] == std::vector<int>{1, 1});
    CHECK(d.words[2] == std::vector<int>{2});
    CHECK(d.word_name(1) == "a1a2");
    CHECK(d.exhaustive(2));
    CHECK_FALSE(Dictionary::parse("a1a1,a2").exhaustive(2));

    CHECK_THROWS_AS(Dictionary::parse("a1,a1a2"), std::domain_error);   // prefix
    CHECK_THROWS_AS(Dictionary::parse("a1a2,a1a2"), std::domain_error); // duplicate
    CHECK_THROWS(Dictionary::parse("a1,,a2"));
    CHECK_THROWS(Dictionary::parse("b1"));
}

TEST_CASE("word probabilities are products") {
    SubSource ws = word_source(Dictionary::parse("a1a1,a1a2,a2"), binary_base());
    REQUIRE(ws.size() == 3);
    CHECK(ws.entries()[0] == SubSource::Entry{"a1a1", Rational(81, 100)});
    CHECK(ws.entries()[1] == SubSource::Entry{"a1a2", Rational(9, 100)});
    CHECK(ws.entries()[2] == SubSource::Entry{"a2", Rational(1, 10)});
    CHECK(ws.total() == Rational(1));

    SubSource identity = word_source(Dictionary::parse("a1,a2"), binary_base());
    CHECK(identity.entries()[0].second == Rational(9, 10));
    CHECK(identity.entries()[1].second == Rational(1, 10));

    SubSource pairs = word_source(all_pairs(3), ternary_base());
    REQUIRE(pairs.size() == 9);
    CHECK(pairs.entries()[0].second == Rational(49, 100));
    CHECK(pairs.entries()[5].second == Rational(2, 100));
    CHECK(pairs.total() == Rational(1));

    CHECK_THROWS_AS(word_source(Dictionary::parse("a3"), binary_base()), std::domain_error);
}

TEST_CASE("identity dictionaries reproduce the base redundancy") {
    Source base = binary_base();
    ClosedFormReal r = v2v_redundancy(Dictionary::parse("a1,a2"), base);
    CHECK(r == redundancy(huffman_tree(base), base));
}

TEST_CASE("two-symbol dictionary example") {
    Source base = binary_base();
    Dictionary d = Dictionary::parse("a1a1,a1a2,a2");
    Source words{word_source(d, base)};
    auto cw = huffman_tree(words).codewords();
    // One codeword of length 1 for the heavy word, two of length 2; the
    // published variant swaps every bit, which changes nothing.
    CHECK(cw.at("a1a1").size() == 1);
    CHECK(cw.at("a1a2").size() == 2);
    CHECK(cw.at("a2").size() == 2);
    CHECK_NOTHROW(v2v_redundancy(d, base));
}

TEST_CASE("ternary all-pairs dictionary redundancy") {
    ClosedFormReal r = v2v_redundancy(all_pairs(3), ternary_base());
    ClosedFormReal expected =
        (ClosedFormReal(Rational(73)) + L(5).scaled(Rational(-200)) + L(7).scaled(Rational(140)))
            .scaled(Rational(1, 200));
    CHECK(r == expected);
    CHECK(r.decimal(3) == "0.008");

    CHECK_THROWS_AS(v2v_redundancy(Dictionary::parse("a1a1,a2"), binary_base()),
                    std::domain_error);
}

TEST_CASE("pruning bound for dictionaries holding two heavy words") {
    V2VBound b = v2v_prune_bound(Dictionary::parse("a1a1,a1a2"), binary_base(), 10);
    CHECK(b.denominator == Rational(14, 5));
    ClosedFormReal expected =
        (ClosedFormReal(Rational(-71)) + L(3).scaled(Rational(342)) + L(5).scaled(Rational(-190)))
            .scaled(Rational(1, 280));
    CHECK(b.value == expected);
    CHECK(b.value.decimal(3) == "0.107");
    CHECK(b.star.threshold_value == 4);
}

TEST_CASE("pruning bound for short ternary dictionaries") {
    V2VBound b = v2v_prune_bound(Dictionary::parse("a1,a3"), ternary_base(), 3);
    CHECK(b.denominator == Rational(7, 5));
    ClosedFormReal expected = (ClosedFormReal(Rational(8)) + L(3).scaled(Rational(-2)) +
                               L(5).scaled(Rational(-10)) + L(7).scaled(Rational(7)))
                                  .scaled(Rational(1, 14));
    CHECK(b.value == expected);
    CHECK(b.value.decimal(2) == "0.09");
}

TEST_CASE("bounds never exceed achieved redundancies") {
    Source base = binary_base();
    Dictionary known = Dictionary::parse("a1a1,a1a2");
    std::vector<std::string> dicts{
        "a1a1,a1a2,a2",
        "a1a1a1,a1a1a2,a1a2,a2",
        "a1a1a1a1,a1a1a1a2,a1a1a2,a1a2,a2",
    };
    for (const auto& text : dicts) {
        Dictionary d = Dictionary::parse(text);
        long max_len = 0;
        for (const auto& w : d.words) max_len = std::max<long>(max_len, static_cast<long>(w.size()));
        ClosedFormReal achieved = v2v_redundancy(d, base);
        V2VBound bound = v2v_prune_bound(known, base, max_len);
        CHECK(compare(bound.value, achieved) != Ordering::Greater);
    }
}

TEST_CASE("length-limit and degenerate cases") {
    CHECK_THROWS_AS(v2v_prune_bound(Dictionary::parse("a1a1a1"), binary_base(), 2),
                    std::domain_error);

    // A known set that is exhaustive: the bound degenerates to the exact
    // per-word redundancy over the expected length.
    Dictionary d = Dictionary::parse("a1a1,a1a2,a2");
    Source base = binary_base();
    V2VBound b = v2v_prune_bound(d, base, 2);
    ClosedFormReal exact = v2v_redundancy(d, base);
    // With nothing left unknown the padding term vanishes and the
    // denominator is the exact expected word length.
    Source words{word_source(d, base)};
    Rational expected_len;
    for (size_t i = 0; i < d.words.size(); ++i)
        expected_len +=
            words.entries()[i].second * Rational(static_cast<long>(d.words[i].size()));
    CHECK(b.denominator == expected_len);
    CHECK(b.value == exact);
}
