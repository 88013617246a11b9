#include "huffbound/enumerate.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace huffbound {

void EnumLimits::check(int n) const {
    if (n > cap && !allow_above_cap)
        throw std::domain_error("all_codes: n=" + std::to_string(n) +
                                " above the enumeration cap " + std::to_string(cap));
}

std::vector<CodeTree> all_codes(int n, bool dedup, const EnumLimits& limits) {
    if (n < 2) throw std::domain_error("all_codes: n must be >= 2");
    limits.check(n);

    std::vector<std::vector<CodeTree>> frontier;
    {
        std::vector<CodeTree> init;
        for (int i = 1; i <= n; ++i) init.push_back(CodeTree::leaf("a" + std::to_string(i)));
        frontier.push_back(std::move(init));
    }
    for (int round = 0; round < n - 1; ++round) {
        std::vector<std::vector<CodeTree>> next;
        for (const auto& state : frontier) {
            for (size_t j = 0; j + 1 < state.size(); ++j) {
                for (size_t k = j + 1; k < state.size(); ++k) {
                    std::vector<CodeTree> child;
                    child.reserve(state.size() - 1);
                    for (size_t l = 0; l < state.size(); ++l)
                        if (l != j && l != k) child.push_back(state[l]);
                    child.push_back(CodeTree::node(state[j], state[k]));
                    next.push_back(std::move(child));
                }
            }
        }
        frontier = std::move(next);
    }

    std::vector<CodeTree> out;
    out.reserve(frontier.size());
    for (const auto& state : frontier) out.push_back(state[0]);
    if (dedup) {
        std::set<std::string> seen;
        std::vector<CodeTree> unique;
        for (const auto& t : out) {
            CodeTree c = t.canonical();
            if (seen.insert(c.str()).second) unique.push_back(c);
        }
        out = std::move(unique);
    }
    return out;
}

mpz_class trajectory_count(int n) {
    if (n < 2) throw std::domain_error("trajectory_count: n must be >= 2");
    mpz_class a, b, out;
    mpz_fac_ui(a.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_fac_ui(b.get_mpz_t(), static_cast<unsigned long>(n - 1));
    out = a * b;
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
    return out / pw;
}

}  // namespace huffbound
