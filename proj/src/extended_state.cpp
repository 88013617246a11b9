#include "huffbound/extended_state.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace huffbound {

AffineProb AffineProb::plus(const AffineProb& o) const {
    AffineProb out;
    out.constant = constant + o.constant;
    out.unknowns = unknowns;
    out.unknowns.insert(o.unknowns.begin(), o.unknowns.end());
    return out;
}

AffineProb AffineProb::plus_unknown(int idx) const {
    AffineProb out = *this;
    out.unknowns.insert(idx);
    return out;
}

LinearInequality LinearInequality::le(const AffineProb& lhs, const AffineProb& rhs) {
    LinearInequality out;
    out.constant = rhs.constant - lhs.constant;
    for (int i : rhs.unknowns) out.coeffs[i] += 1;
    for (int i : lhs.unknowns) out.coeffs[i] -= 1;
    for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
        it = it->second == 0 ? out.coeffs.erase(it) : std::next(it);
    return out;
}

std::string LinearInequality::key() const {
    std::string s = constant.str();
    for (const auto& [i, c] : coeffs)
        s += (c > 0 ? "+u" : "-u") + std::to_string(i);
    return s;
}

void ExtendedState::add_constraint(LinearInequality c) {
    if (c.constant_true()) return;
    std::string k = c.key();
    for (const auto& existing : constraints)
        if (existing.key() == k) return;
    constraints.push_back(std::move(c));
}

ExtendedState initial_state(const SubSource& x) {
    if (x.empty())
        throw std::domain_error("initial_state: empty sub-source has a trivial bound of 0");
    ExtendedState st;
    for (const auto& [id, p] : x.entries())
        st.known.emplace_back(CodeTree::leaf(id), AffineProb{p, {}});
    LinearInequality nonneg;
    nonneg.coeffs[0] = 1;
    st.constraints.push_back(std::move(nonneg));
    return st;
}

namespace {

AffineProb next_unknown_prob(const ExtendedState& st) {
    AffineProb u;
    u.unknowns.insert(st.unknown_count);
    return u;
}

}  // namespace

ExtendedState merge_known(const ExtendedState& st, size_t i, size_t j) {
    if (i >= j || j >= st.known.size())
        throw std::domain_error("merge_known: indices out of range");
    ExtendedState out = st;
    const AffineProb& pi = st.known[i].second;
    const AffineProb& pj = st.known[j].second;
    for (size_t l = 0; l < st.known.size(); ++l) {
        if (l == i || l == j) continue;
        out.add_constraint(LinearInequality::le(pi, st.known[l].second));
        out.add_constraint(LinearInequality::le(pj, st.known[l].second));
    }
    AffineProb sentinel = next_unknown_prob(st);
    out.add_constraint(LinearInequality::le(pi, sentinel));
    out.add_constraint(LinearInequality::le(pj, sentinel));

    std::pair<CodeTree, AffineProb> merged{CodeTree::node(st.known[i].first, st.known[j].first),
                                           pi.plus(pj)};
    out.known.erase(out.known.begin() + static_cast<long>(j));
    out.known.erase(out.known.begin() + static_cast<long>(i));
    out.known.push_back(std::move(merged));
    return out;
}

ExtendedState merge_with_unknown(const ExtendedState& st, size_t i) {
    if (i >= st.known.size()) throw std::domain_error("merge_with_unknown: index out of range");
    ExtendedState out = st;
    const AffineProb& pi = st.known[i].second;
    AffineProb drawn = next_unknown_prob(st);
    AffineProb upcoming;
    upcoming.unknowns.insert(st.unknown_count + 1);
    for (size_t l = 0; l < st.known.size(); ++l) {
        if (l == i) continue;
        out.add_constraint(LinearInequality::le(pi, st.known[l].second));
        out.add_constraint(LinearInequality::le(drawn, st.known[l].second));
    }
    out.add_constraint(LinearInequality::le(pi, upcoming));
    out.add_constraint(LinearInequality::le(drawn, upcoming));

    std::pair<CodeTree, AffineProb> merged{
        CodeTree::node(st.known[i].first,
                       CodeTree::leaf("u" + std::to_string(st.unknown_count))),
        pi.plus_unknown(st.unknown_count)};
    out.known.erase(out.known.begin() + static_cast<long>(i));
    out.known.push_back(std::move(merged));
    out.unknown_count = st.unknown_count + 1;
    return out;
}

namespace {

bool is_unknown_label(const std::string& s) { return !s.empty() && s[0] == 'u'; }

// Tree rearranged so that anonymized child order is canonical; unknown leaf
// labels are kept but compare as equal, which makes the arrangement
// independent of unknown numbering.
struct Arranged {
    CodeTree tree;
    std::string anon;
    int height;
};

Arranged arrange(const CodeTree& t) {
    if (t.is_leaf()) {
        const std::string& s = t.symbol();
        return {t, is_unknown_label(s) ? "u" : s, 0};
    }
    Arranged l = arrange(t.left());
    Arranged r = arrange(t.right());
    if (std::tie(r.height, r.anon) < std::tie(l.height, l.anon)) std::swap(l, r);
    return {CodeTree::node(l.tree, r.tree), "[" + l.anon + "," + r.anon + "]",
            1 + std::max(l.height, r.height)};
}

}  // namespace

std::string ExtendedState::canonical_key() const {
    std::vector<Arranged> trees;
    trees.reserve(known.size());
    for (const auto& [t, p] : known) trees.push_back(arrange(t));
    std::stable_sort(trees.begin(), trees.end(), [](const Arranged& a, const Arranged& b) {
        if (a.anon != b.anon) return a.anon < b.anon;
        return a.tree.str() < b.tree.str();
    });

    // Rename unknowns in order of first appearance across the arrangement.
    std::map<int, int> rename;
    std::function<void(const CodeTree&)> discover = [&](const CodeTree& t) {
        if (t.is_leaf()) {
            const std::string& s = t.symbol();
            if (is_unknown_label(s)) {
                int idx = std::stoi(s.substr(1));
                if (!rename.count(idx)) {
                    int next = static_cast<int>(rename.size());
                    rename[idx] = next;
                }
            }
            return;
        }
        discover(t.left());
        discover(t.right());
    };
    for (const auto& a : trees) discover(a.tree);

    std::function<std::string(const CodeTree&)> renamed_str = [&](const CodeTree& t) -> std::string {
        if (t.is_leaf()) {
            const std::string& s = t.symbol();
            if (is_unknown_label(s)) return "u" + std::to_string(rename.at(std::stoi(s.substr(1))));
            return s;
        }
        return "[" + renamed_str(t.left()) + "," + renamed_str(t.right()) + "]";
    };

    std::string out;
    for (const auto& a : trees) out += renamed_str(a.tree) + ";";
    out += "|s=" + std::to_string(unknown_count) + "|";

    std::vector<std::string> rows;
    rows.reserve(constraints.size());
    for (const auto& c : constraints) {
        LinearInequality rn;
        rn.constant = c.constant;
        for (const auto& [i, coef] : c.coeffs) {
            auto it = rename.find(i);
            rn.coeffs[it == rename.end() ? i : it->second] = coef;
        }
        rows.push_back(rn.key());
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    for (const auto& r : rows) out += r + ";";
    return out;
}

}  // namespace huffbound
