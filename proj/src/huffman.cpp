#include "huffbound/huffman.hpp"

#include <set>
#include <stdexcept>
#include <vector>

namespace huffbound {

CodeTree huffman_tree(const Source& a) {
    if (a.size() < 2) throw std::domain_error("huffman_tree: needs at least 2 symbols");
    std::vector<std::pair<CodeTree, Rational>> state;
    for (const auto& [id, p] : a.entries()) state.emplace_back(CodeTree::leaf(id), p);

    while (state.size() > 1) {
        size_t j = 0;
        for (size_t l = 1; l < state.size(); ++l)
            if (state[l].second < state[j].second) j = l;
        size_t k = (j == 0) ? 1 : 0;
        for (size_t l = 0; l < state.size(); ++l) {
            if (l == j) continue;
            if (state[l].second < state[k].second) k = l;
        }
        if (k < j) std::swap(j, k);
        std::pair<CodeTree, Rational> merged{CodeTree::node(state[j].first, state[k].first),
                                             state[j].second + state[k].second};
        state.erase(state.begin() + static_cast<long>(k));
        state.erase(state.begin() + static_cast<long>(j));
        state.push_back(std::move(merged));
    }
    return state[0].first;
}

ClosedFormReal average_length(const CodeTree& t, const Source& a) {
    auto ls = t.lengths();
    std::set<std::string> covered;
    Rational len;
    for (const auto& [id, p] : a.entries()) {
        auto it = ls.find(id);
        if (it == ls.end())
            throw std::domain_error("average_length: symbol '" + id + "' has no codeword");
        covered.insert(id);
        len += p * Rational(it->second);
    }
    if (covered.size() != ls.size())
        throw std::domain_error("average_length: code has leaves outside the source");
    return ClosedFormReal(len);
}

ClosedFormReal redundancy(const CodeTree& t, const Source& a) {
    ClosedFormReal r = average_length(t, a);
    for (const auto& [id, p] : a.entries()) r += p_log2_p(p);
    return r;
}

}  // namespace huffbound
