#pragma once

#include "huffbound/closed_form.hpp"
#include "huffbound/code_tree.hpp"
#include "huffbound/enumerate.hpp"
#include "huffbound/source.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace huffbound {

// Constants of the per-code minimization: beta0 collects the known-symbol
// contribution, beta_unknown the codeword lengths of the unknown-symbol
// leaves and beta_t the total probability left for them.
struct BetaDecomposition {
    ClosedFormReal beta0;
    std::vector<int> beta_unknown;
    Rational beta_t;
};

struct BoundResult {
    ClosedFormReal value;
    CodeTree best_code;
    // Unknown-leaf probabilities achieving the value; present iff beta_t > 0.
    std::vector<std::pair<std::string, Rational>> witness;
};

// assignment maps each known symbol to the leaf symbol of c that carries it.
BetaDecomposition decompose(const SubSource& x, const CodeTree& c,
                            const std::map<std::string, std::string>& assignment);

// Minimum redundancy of the code described by b over all completions, and
// the unknown-leaf probabilities attaining it (ordered as beta_unknown).
std::pair<ClosedFormReal, std::vector<Rational>> min_redundancy_for_code(
    const BetaDecomposition& b);

// Lowest redundancy over all codes of exactly n symbols carrying x.
// Requires sum p(x) < 1 when n > |x|, and sum p(x) = 1 when n = |x|.
BoundResult r_min_n(const SubSource& x, int n, const EnumLimits& limits = {});

// |X| + ceil((1 - sum p(x)) / min p(x)); alphabet sizes above it never help.
long threshold(const SubSource& x);

// Lowest redundancy over alphabet sizes 2..n.
BoundResult r_min_upto(const SubSource& x, int n, const EnumLimits& limits = {});

// General bound by exhaustive enumeration up to the threshold.
BoundResult r_min_star_oracle(const SubSource& x, const EnumLimits& limits = {});

}  // namespace huffbound
