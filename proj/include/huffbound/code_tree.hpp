#pragma once

#include "huffbound/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace huffbound {

// Binary merge tree over symbols; equivalent to a prefix-free code, with
// codeword length = leaf depth. Immutable, cheap to copy.
class CodeTree {
public:
    CodeTree() : CodeTree(leaf("")) {}  // placeholder single leaf

    static CodeTree leaf(std::string symbol);
    static CodeTree node(CodeTree left, CodeTree right);

    bool is_leaf() const { return node_->left == nullptr; }
    const std::string& symbol() const;
    CodeTree left() const;
    CodeTree right() const;

    int height() const { return node_->height; }
    size_t leaf_count() const { return node_->leaf_count; }

    // Leaves in left-to-right order with their depths.
    std::vector<std::pair<std::string, int>> leaf_depths() const;

    // Codeword length per symbol.
    std::map<std::string, int> lengths() const;

    // Codewords: at each node the first-listed child takes bit 0 and the
    // second bit 1, matching the bracket-scan reading of merge results.
    std::map<std::string, std::string> codewords() const;

    // Bracket form, e.g. "[[a2,a5],[a4,[a1,a3]]]".
    std::string str() const;

    // Equal tree with children everywhere ordered by (height, leaf
    // multiset, text); two codes equivalent up to child swaps share it.
    CodeTree canonical() const;

    bool kraft_equality() const;  // sum over leaves of 2^-depth == 1

    // Builds a full tree realizing the given symbol depths; the depths must
    // satisfy Kraft equality. Symbols are placed left to right, shallow
    // leaves first.
    static CodeTree from_depths(std::vector<std::pair<std::string, int>> depths);

    friend bool operator==(const CodeTree& a, const CodeTree& b) { return a.str() == b.str(); }

private:
    struct Node {
        std::string symbol;
        std::shared_ptr<const Node> left, right;
        int height = 0;
        size_t leaf_count = 1;
    };
    explicit CodeTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

}  // namespace huffbound
