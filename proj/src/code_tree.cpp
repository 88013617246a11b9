#include "huffbound/code_tree.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace huffbound {

CodeTree CodeTree::leaf(std::string symbol) {
    auto n = std::make_shared<Node>();
    n->symbol = std::move(symbol);
    return CodeTree(std::move(n));
}

CodeTree CodeTree::node(CodeTree left, CodeTree right) {
    auto n = std::make_shared<Node>();
    n->left = left.node_;
    n->right = right.node_;
    n->height = 1 + std::max(left.height(), right.height());
    n->leaf_count = left.leaf_count() + right.leaf_count();
    return CodeTree(std::move(n));
}

const std::string& CodeTree::symbol() const {
    if (!is_leaf()) throw std::logic_error("CodeTree: symbol() on internal node");
    return node_->symbol;
}

CodeTree CodeTree::left() const {
    if (is_leaf()) throw std::logic_error("CodeTree: left() on leaf");
    return CodeTree(node_->left);
}

CodeTree CodeTree::right() const {
    if (is_leaf()) throw std::logic_error("CodeTree: right() on leaf");
    return CodeTree(node_->right);
}

std::vector<std::pair<std::string, int>> CodeTree::leaf_depths() const {
    std::vector<std::pair<std::string, int>> out;
    std::function<void(const Node*, int)> walk = [&](const Node* n, int d) {
        if (!n->left) {
            out.emplace_back(n->symbol, d);
            return;
        }
        walk(n->left.get(), d + 1);
        walk(n->right.get(), d + 1);
    };
    walk(node_.get(), 0);
    return out;
}

std::map<std::string, int> CodeTree::lengths() const {
    std::map<std::string, int> out;
    for (const auto& [s, d] : leaf_depths()) {
        if (!out.emplace(s, d).second)
            throw std::logic_error("CodeTree: duplicate symbol '" + s + "'");
    }
    return out;
}

std::map<std::string, std::string> CodeTree::codewords() const {
    std::map<std::string, std::string> out;
    std::function<void(const Node*, std::string&)> walk = [&](const Node* n, std::string& bits) {
        if (!n->left) {
            out[n->symbol] = bits;
            return;
        }
        bits.push_back('0');
        walk(n->left.get(), bits);
        bits.back() = '1';
        walk(n->right.get(), bits);
        bits.pop_back();
    };
    std::string bits;
    walk(node_.get(), bits);
    return out;
}

std::string CodeTree::str() const {
    std::string out;
    std::function<void(const Node*)> walk = [&](const Node* n) {
        if (!n->left) {
            out += n->symbol;
            return;
        }
        out.push_back('[');
        walk(n->left.get());
        out.push_back(',');
        walk(n->right.get());
        out.push_back(']');
    };
    walk(node_.get());
    return out;
}

namespace {

struct TreeKey {
    int height;
    std::vector<std::string> leaves;
    std::string text;
    bool operator<(const TreeKey& o) const {
        if (height != o.height) return height < o.height;
        if (leaves != o.leaves) return leaves < o.leaves;
        return text < o.text;
    }
};

TreeKey key_of(const CodeTree& t) {
    TreeKey k;
    k.height = t.height();
    for (const auto& [s, d] : t.leaf_depths()) k.leaves.push_back(s);
    std::sort(k.leaves.begin(), k.leaves.end());
    k.text = t.str();
    return k;
}

}  // namespace

CodeTree CodeTree::canonical() const {
    if (is_leaf()) return *this;
    CodeTree l = left().canonical();
    CodeTree r = right().canonical();
    if (key_of(r) < key_of(l)) std::swap(l, r);
    return node(l, r);
}

bool CodeTree::kraft_equality() const {
    Rational sum;
    for (const auto& [s, d] : leaf_depths()) sum += Rational::pow2(-d);
    return sum == Rational(1);
}

CodeTree CodeTree::from_depths(std::vector<std::pair<std::string, int>> depths) {
    if (depths.empty()) throw std::domain_error("from_depths: no leaves");
    Rational sum;
    for (const auto& [s, d] : depths) {
        if (d < 0) throw std::domain_error("from_depths: negative depth");
        sum += Rational::pow2(-d);
    }
    if (sum != Rational(1)) throw std::domain_error("from_depths: depths violate Kraft equality");
    if (depths.size() == 1) return leaf(depths[0].first);

    std::stable_sort(depths.begin(), depths.end(),
                     [](const auto& a, const auto& b) { return a.second < b.second; });

    // Canonical codeword assignment, then fold the codewords into a tree.
    std::map<std::string, std::string> word_to_symbol;
    mpz_class code = 0;
    int prev = depths[0].second;
    for (const auto& [s, d] : depths) {
        code <<= (d - prev);
        prev = d;
        std::string bits = code.get_str(2);
        bits.insert(bits.begin(), static_cast<size_t>(d) - bits.size(), '0');
        word_to_symbol[bits] = s;
        code += 1;
    }
    std::function<CodeTree(const std::string&)> build = [&](const std::string& prefix) {
        auto it = word_to_symbol.find(prefix);
        if (it != word_to_symbol.end()) return leaf(it->second);
        return node(build(prefix + "0"), build(prefix + "1"));
    };
    return build("");
}

}  // namespace huffbound
