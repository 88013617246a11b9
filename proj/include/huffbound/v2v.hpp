#pragma once

#include "huffbound/closed_form.hpp"
#include "huffbound/prune.hpp"
#include "huffbound/source.hpp"

#include <string>
#include <vector>

namespace huffbound {

// Prefix-free set of words over a base alphabet; symbols are 1-based
// indices printed as a1, a2, ...
struct Dictionary {
    std::vector<std::vector<int>> words;

    // "a1a1,a1a2,a2"
    static Dictionary parse(const std::string& text);

    std::string word_name(size_t i) const;
    void validate() const;  // non-empty words, no duplicates, prefix-free

    // Kraft equality over the alphabet-ary tree: every infinite input
    // sequence starts with exactly one word.
    bool exhaustive(int alphabet_size) const;
};

// Words as symbols of a memoryless source; each word's probability is the
// product of its symbols' probabilities.
SubSource word_source(const Dictionary& w, const Source& base);

// Redundancy per input symbol of the code that maps words to their Huffman
// codewords: word-source redundancy over expected word length. Requires an
// exhaustive dictionary.
ClosedFormReal v2v_redundancy(const Dictionary& w, const Source& base);

struct V2VBound {
    ClosedFormReal value;
    Rational denominator;  // expected-length lower bound
    StarResult star;       // the underlying general bound
    SubSource words;
};

// Lower bound on the redundancy of every code whose dictionary contains
// the given words and has no word longer than max_len.
V2VBound v2v_prune_bound(const Dictionary& known_words, const Source& base, long max_len,
                         const PruneOptions& opt = {});

}  // namespace huffbound
