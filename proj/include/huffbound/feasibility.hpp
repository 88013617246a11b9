#pragma once

#include "huffbound/extended_state.hpp"
#include "huffbound/rational.hpp"
#include "huffbound/source.hpp"

#include <vector>

namespace huffbound {

// Inequality system A x <= b over the drawn unknown probabilities
// u_0..u_{d-1}, with every rational exact.
struct LinearSystem {
    int num_vars = 0;
    struct Row {
        std::vector<Rational> coeff;  // one entry per variable
        Rational rhs;
    };
    std::vector<Row> rows;
};

// Non-negative multipliers proving the system unsolvable. Valid when
// lambda >= 0, A^T lambda = 0, 1^T lambda = 1 and -b^T lambda > 0, all of
// which verify() re-checks in exact arithmetic.
struct InfeasibilityCertificate {
    std::vector<Rational> lambda;
};

struct FeasibilityResult {
    bool feasible = false;
    std::vector<Rational> witness;         // a solution point, when feasible
    InfeasibilityCertificate certificate;  // filled when infeasible
};

// Assembles the state's consistency system: the accumulated inequalities
// with the next-unknown sentinel substituted by 1, plus the requirement
// that the known and drawn probabilities sum to at most 1.
LinearSystem build_system(const ExtendedState& st, const SubSource& x);

// Complete, exact decision by rational simplex. Infeasible results always
// carry a certificate that verify() accepts.
FeasibilityResult check(const LinearSystem& sys);

bool verify(const LinearSystem& sys, const InfeasibilityCertificate& cert);

}  // namespace huffbound
