#include "huffbound/prune.hpp"

#include "huffbound/feasibility.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace huffbound {

namespace {

bool is_unknown_leaf(const std::string& s) { return !s.empty() && s[0] == 'u'; }

// Per-code constants for a one-tree state: known leaves contribute their
// probability at their depth, unknown leaves contribute lengths.
BetaDecomposition decompose_state(const ExtendedState& st, const SubSource& x) {
    std::map<std::string, Rational> prob;
    for (const auto& [id, p] : x.entries()) prob.emplace(id, p);
    BetaDecomposition dec;
    dec.beta_t = Rational(1) - x.total();
    for (const auto& [sym, depth] : st.known[0].first.leaf_depths()) {
        if (is_unknown_leaf(sym)) {
            dec.beta_unknown.push_back(depth);
        } else {
            const Rational& p = prob.at(sym);
            dec.beta0 += (ClosedFormReal(Rational(depth)) + ClosedFormReal::log2(p)).scaled(p);
        }
    }
    return dec;
}

}  // namespace

PruneResult state_search(const SubSource& x, const PruneOptions& opt) {
    if (x.empty()) throw std::domain_error("state_search: empty sub-source");
    const int m = static_cast<int>(x.size());
    PruneResult out;
    out.threshold_value = threshold(x);

    std::vector<ExtendedState> frontier{initial_state(x)};
    std::set<std::string> seen, psi_keys;
    if (frontier[0].known.size() == 1) {
        out.psi.push_back(frontier[0]);
        if (opt.dedup) psi_keys.insert(frontier[0].canonical_key());
    }
    if (opt.dedup) seen.insert(frontier[0].canonical_key());

    while (!frontier.empty()) {
        std::vector<ExtendedState> next;
        for (const ExtendedState& st : frontier) {
            ++out.stats.expanded;
            std::vector<ExtendedState> children;
            for (size_t i = 0; i + 1 < st.known.size(); ++i)
                for (size_t j = i + 1; j < st.known.size(); ++j)
                    children.push_back(merge_known(st, i, j));
            if (m + st.unknown_count < out.threshold_value)
                for (size_t i = 0; i < st.known.size(); ++i)
                    children.push_back(merge_with_unknown(st, i));

            for (ExtendedState& child : children) {
                ++out.stats.generated;
                if (static_cast<size_t>(out.stats.generated) > opt.max_states)
                    throw std::runtime_error("state_search: state budget exceeded");
                if (opt.dedup && !seen.insert(child.canonical_key()).second) {
                    ++out.stats.duplicates_merged;
                    continue;
                }
                LinearSystem sys = build_system(child, x);
                FeasibilityResult fr = check(sys);
                if (!fr.feasible) {
                    if (verify(sys, fr.certificate)) {
                        ++out.stats.certificates_verified;
                        ++out.stats.infeasible_dropped;
                        continue;
                    }
                    // Without a verified certificate the state must stay.
                    ++out.stats.unverified_keeps;
                }
                if (child.known.size() == 1) {
                    if (!opt.dedup || psi_keys.insert(child.canonical_key()).second)
                        out.psi.push_back(child);
                }
                next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

StarResult r_min_star(const SubSource& x, const PruneOptions& opt) {
    StarResult out;
    if (x.empty()) {
        out.bound.best_code = CodeTree::node(CodeTree::leaf("u0"), CodeTree::leaf("u1"));
        out.bound.witness = {{"u0", Rational(1, 2)}, {"u1", Rational(1, 2)}};
        return out;
    }
    PruneResult pr = state_search(x, opt);
    out.stats = pr.stats;
    out.threshold_value = pr.threshold_value;
    out.psi_size = pr.psi.size();

    bool have = false;
    for (const ExtendedState& st : pr.psi) {
        BetaDecomposition dec = decompose_state(st, x);
        if (dec.beta_t.sign() > 0 && dec.beta_unknown.empty()) continue;
        auto [value, probs] = min_redundancy_for_code(dec);
        const CodeTree& tree = st.known[0].first;
        bool better = false;
        if (!have) {
            better = true;
        } else {
            Ordering o = compare(value, out.bound.value);
            if (o == Ordering::Less) {
                better = true;
            } else if (o == Ordering::Equal) {
                size_t a = tree.leaf_count(), b = out.bound.best_code.leaf_count();
                better = a < b || (a == b && tree.canonical().str() <
                                                 out.bound.best_code.canonical().str());
            }
        }
        if (better) {
            have = true;
            out.bound.value = std::move(value);
            out.bound.best_code = tree;
            out.bound.witness.clear();
            size_t k = 0;
            for (const auto& [sym, depth] : tree.leaf_depths())
                if (is_unknown_leaf(sym)) out.bound.witness.emplace_back(sym, probs[k++]);
        }
    }
    if (!have) throw std::logic_error("r_min_star: no completable state found");
    return out;
}

std::vector<std::string> describe_psi(const SubSource& x, const PruneResult& pr, int digits) {
    std::vector<std::string> lines;
    lines.reserve(pr.psi.size());
    for (const ExtendedState& st : pr.psi) {
        BetaDecomposition dec = decompose_state(st, x);
        std::string value = "-";
        if (!(dec.beta_t.sign() > 0 && dec.beta_unknown.empty()))
            value = min_redundancy_for_code(dec).first.decimal(digits);
        lines.push_back(st.known[0].first.str() + " s=" + std::to_string(st.unknown_count) +
                        " |Z|=" + std::to_string(st.constraints.size()) + " F=" + value);
    }
    return lines;
}

}  // namespace huffbound
