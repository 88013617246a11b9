#include "huffbound/optimize.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace huffbound {

BetaDecomposition decompose(const SubSource& x, const CodeTree& c,
                            const std::map<std::string, std::string>& assignment) {
    auto depths = c.leaf_depths();
    std::map<std::string, int> depth_of;
    for (const auto& [s, d] : depths) depth_of.emplace(s, d);

    std::set<std::string> used;
    BetaDecomposition out;
    out.beta_t = Rational(1);
    for (const auto& [id, p] : x.entries()) {
        auto it = assignment.find(id);
        if (it == assignment.end())
            throw std::domain_error("decompose: no leaf assigned to '" + id + "'");
        auto dit = depth_of.find(it->second);
        if (dit == depth_of.end())
            throw std::domain_error("decompose: leaf '" + it->second + "' not in code");
        if (!used.insert(it->second).second)
            throw std::domain_error("decompose: leaf '" + it->second + "' assigned twice");
        out.beta0 += (ClosedFormReal(Rational(dit->second)) + ClosedFormReal::log2(p)).scaled(p);
        out.beta_t -= p;
    }
    for (const auto& [s, d] : depths)
        if (!used.count(s)) out.beta_unknown.push_back(d);
    return out;
}

std::pair<ClosedFormReal, std::vector<Rational>> min_redundancy_for_code(
    const BetaDecomposition& b) {
    if (b.beta_t.sign() < 0)
        throw std::domain_error("min_redundancy_for_code: negative residual probability");
    if (b.beta_t.is_zero()) return {b.beta0, {}};
    if (b.beta_unknown.empty())
        throw std::domain_error(
            "min_redundancy_for_code: residual probability but no unknown leaves");

    Rational kraft_rest;
    for (int len : b.beta_unknown) {
        if (len < 1) throw std::domain_error("min_redundancy_for_code: length must be >= 1");
        kraft_rest += Rational::pow2(-len);
    }
    ClosedFormReal value = b.beta0 + ClosedFormReal::log2(b.beta_t / kraft_rest).scaled(b.beta_t);
    std::vector<Rational> witness;
    witness.reserve(b.beta_unknown.size());
    for (int len : b.beta_unknown) witness.push_back(Rational::pow2(-len) * b.beta_t / kraft_rest);
    return {value, std::move(witness)};
}

namespace {

CodeTree relabel(const CodeTree& t, const std::vector<std::string>& labels) {
    size_t next = 0;
    std::function<CodeTree(const CodeTree&)> walk = [&](const CodeTree& n) {
        if (n.is_leaf()) return CodeTree::leaf(labels.at(next++));
        CodeTree l = walk(n.left());
        CodeTree r = walk(n.right());
        return CodeTree::node(l, r);
    };
    return walk(t);
}

// A candidate placement of the known symbols onto a code shape: the leaves
// of the shape in order, each either a known-symbol index or -1.
struct Candidate {
    BoundResult result;
    bool valid = false;

    void offer(BoundResult r) {
        if (!valid) {
            result = std::move(r);
            valid = true;
            return;
        }
        Ordering o = compare(r.value, result.value);
        if (o == Ordering::Less ||
            (o == Ordering::Equal && r.best_code.str() < result.best_code.str()))
            result = std::move(r);
    }
};

// Evaluates every distinct assignment of the known symbols onto the leaf
// depths of one code shape. Assignments differing only in which same-depth
// leaf carries a symbol are equivalent, so symbols are assigned to depth
// values with multiplicities.
void scan_tree(const SubSource& x, const CodeTree& tree, Candidate& best) {
    auto leaves = tree.leaf_depths();
    std::map<int, int> capacity;
    for (const auto& [s, d] : leaves) ++capacity[d];

    const auto& xs = x.entries();
    std::vector<int> chosen(xs.size(), 0);
    std::function<void(size_t)> assign = [&](size_t i) {
        if (i == xs.size()) {
            // Place symbols at the first free leaf of their chosen depth.
            std::map<int, std::vector<std::string>> pending;
            for (size_t k = 0; k < xs.size(); ++k) pending[chosen[k]].push_back(xs[k].first);
            BetaDecomposition dec;
            dec.beta_t = Rational(1) - x.total();
            std::vector<std::string> labels;
            std::vector<std::string> unknown_names;
            int next_unknown = 0;
            for (const auto& [s, d] : leaves) {
                auto& queue = pending[d];
                if (!queue.empty()) {
                    labels.push_back(queue.front());
                    queue.erase(queue.begin());
                } else {
                    std::string name = "y" + std::to_string(next_unknown++);
                    labels.push_back(name);
                    unknown_names.push_back(name);
                    dec.beta_unknown.push_back(d);
                }
            }
            for (size_t k = 0; k < xs.size(); ++k)
                dec.beta0 += (ClosedFormReal(Rational(chosen[k])) +
                              ClosedFormReal::log2(xs[k].second))
                                 .scaled(xs[k].second);
            if (dec.beta_t.sign() > 0 && dec.beta_unknown.empty()) return;
            auto [value, probs] = min_redundancy_for_code(dec);
            BoundResult r;
            r.value = std::move(value);
            r.best_code = relabel(tree, labels);
            for (size_t k = 0; k < probs.size(); ++k)
                r.witness.emplace_back(unknown_names[k], probs[k]);
            best.offer(std::move(r));
            return;
        }
        for (auto& [d, cap] : capacity) {
            if (cap == 0) continue;
            --cap;
            chosen[i] = d;
            assign(i + 1);
            ++cap;
        }
    };
    assign(0);
}

}  // namespace

BoundResult r_min_n(const SubSource& x, int n, const EnumLimits& limits) {
    if (n < 2) throw std::domain_error("r_min_n: n must be >= 2");
    const int m = static_cast<int>(x.size());
    if (m > n) throw std::domain_error("r_min_n: more known symbols than codewords");
    Rational total = x.total();
    if (n == m && total != Rational(1))
        throw std::domain_error("r_min_n: n = |X| requires the probabilities to sum to 1");
    if (n > m && total == Rational(1))
        throw std::domain_error(
            "r_min_n: probabilities sum to 1, extra symbols would need probability 0");

    Candidate best;
    for (const auto& tree : all_codes(n, true, limits)) scan_tree(x, tree, best);
    if (!best.valid) throw std::logic_error("r_min_n: no feasible code");
    return best.result;
}

long threshold(const SubSource& x) {
    if (x.empty()) throw std::domain_error("threshold: undefined for an empty sub-source");
    Rational rest = Rational(1) - x.total();
    mpz_class t = static_cast<long>(x.size()) + ceil_of(rest / x.min_prob());
    if (!t.fits_slong_p()) throw std::domain_error("threshold: value out of range");
    return t.get_si();
}

BoundResult r_min_upto(const SubSource& x, int n, const EnumLimits& limits) {
    if (n < 2) throw std::domain_error("r_min_upto: n must be >= 2");
    const int m = static_cast<int>(x.size());
    const bool complete = x.total() == Rational(1);

    Candidate best;
    bool any = false;
    for (int k = std::max(2, m); k <= n; ++k) {
        if (k == m && !complete) continue;
        if (k > m && complete) continue;
        BoundResult r = r_min_n(x, k, limits);
        any = true;
        best.offer(std::move(r));
    }
    if (!any) throw std::domain_error("r_min_upto: no admissible alphabet size");
    return best.result;
}

BoundResult r_min_star_oracle(const SubSource& x, const EnumLimits& limits) {
    if (x.empty()) {
        BoundResult r;
        r.best_code = CodeTree::node(CodeTree::leaf("y0"), CodeTree::leaf("y1"));
        r.witness = {{"y0", Rational(1, 2)}, {"y1", Rational(1, 2)}};
        return r;
    }
    if (x.size() == 1 && x.total() == Rational(1)) {
        BoundResult r;
        r.best_code = CodeTree::leaf(x.entries()[0].first);
        return r;
    }
    long t = threshold(x);
    if (t > limits.cap && !limits.allow_above_cap)
        throw std::domain_error("r_min_star_oracle: threshold " + std::to_string(t) +
                                " is above the enumeration cap; use the pruned search");
    return r_min_upto(x, static_cast<int>(t), limits);
}

}  // namespace huffbound
