#include "huffbound/feasibility.hpp"

#include <algorithm>
#include <stdexcept>

namespace huffbound {

LinearSystem build_system(const ExtendedState& st, const SubSource& x) {
    const int d = st.unknown_count;
    LinearSystem sys;
    sys.num_vars = d;
    for (const auto& c : st.constraints) {
        // Stored as constant + sum coeff*u >= 0; exported as A x <= b with
        // the sentinel u_d replaced by 1.
        LinearSystem::Row row;
        row.coeff.assign(static_cast<size_t>(d), Rational(0));
        row.rhs = c.constant;
        for (const auto& [idx, coef] : c.coeffs) {
            if (idx == d) {
                row.rhs += Rational(coef);
            } else if (idx < d) {
                row.coeff[static_cast<size_t>(idx)] = Rational(-coef);
            } else {
                throw std::logic_error("build_system: constraint past the sentinel");
            }
        }
        sys.rows.push_back(std::move(row));
    }
    LinearSystem::Row sum;
    sum.coeff.assign(static_cast<size_t>(d), Rational(1));
    sum.rhs = Rational(1) - x.total();
    sys.rows.push_back(std::move(sum));
    return sys;
}

bool verify(const LinearSystem& sys, const InfeasibilityCertificate& cert) {
    if (cert.lambda.size() != sys.rows.size())
        throw std::invalid_argument("verify: certificate size does not match row count");
    Rational lambda_sum, b_dot;
    for (size_t i = 0; i < sys.rows.size(); ++i) {
        if (cert.lambda[i].sign() < 0) return false;
        lambda_sum += cert.lambda[i];
        b_dot += cert.lambda[i] * sys.rows[i].rhs;
    }
    if (lambda_sum != Rational(1)) return false;
    for (int j = 0; j < sys.num_vars; ++j) {
        Rational col;
        for (size_t i = 0; i < sys.rows.size(); ++i)
            col += cert.lambda[i] * sys.rows[i].coeff[static_cast<size_t>(j)];
        if (!col.is_zero()) return false;
    }
    return b_dot.sign() < 0;
}

namespace {

// Dense exact simplex over the auxiliary problem
//     minimize gamma  subject to  A x - gamma * 1 <= b,
// whose optimum decides the sign question: the system is solvable exactly
// when the optimal gamma is <= 0. Free variables are split into
// differences of non-negative parts; Bland's rule prevents cycling.
class PhaseOneSimplex {
public:
    PhaseOneSimplex(const LinearSystem& sys)
        : m_(sys.rows.size()), d_(static_cast<size_t>(sys.num_vars)) {
        cols_ = 2 * d_ + 2 + 2 * m_;  // x+, x-, g+, g-, slacks, artificials
        rhs_col_ = cols_;
        sigma_.assign(m_, 1);
        tab_.assign(m_, std::vector<Rational>(cols_ + 1));
        basic_.assign(m_, 0);
        for (size_t i = 0; i < m_; ++i) {
            const auto& row = sys.rows[i];
            int sg = row.rhs.sign() < 0 ? -1 : 1;
            sigma_[i] = sg;
            Rational s(sg);
            for (size_t j = 0; j < d_; ++j) {
                tab_[i][j] = s * row.coeff[j];
                tab_[i][d_ + j] = -tab_[i][j];
            }
            tab_[i][gplus_()] = -s;
            tab_[i][gminus_()] = s;
            tab_[i][slack_(i)] = s;
            tab_[i][art_(i)] = Rational(1);
            tab_[i][rhs_col_] = s * row.rhs;
            basic_[i] = art_(i);
        }
    }

    FeasibilityResult run() {
        phase_one();
        remove_dependent_rows();
        return phase_two();
    }

private:
    size_t m_, d_, cols_, rhs_col_;
    std::vector<int> sigma_;
    std::vector<std::vector<Rational>> tab_;
    std::vector<size_t> basic_;
    std::vector<Rational> obj_;  // current reduced-cost row
    Rational obj_rhs_;

    size_t gplus_() const { return 2 * d_; }
    size_t gminus_() const { return 2 * d_ + 1; }
    size_t slack_(size_t i) const { return 2 * d_ + 2 + i; }
    size_t art_(size_t i) const { return 2 * d_ + 2 + m_ + i; }
    bool is_artificial(size_t col) const { return col >= 2 * d_ + 2 + m_; }

    void load_objective(const std::vector<Rational>& cost) {
        obj_.assign(cols_, Rational(0));
        obj_rhs_ = Rational(0);
        for (size_t j = 0; j < cols_; ++j) obj_[j] = cost[j];
        for (size_t i = 0; i < tab_.size(); ++i) {
            const Rational& cb = cost[basic_[i]];
            if (cb.is_zero()) continue;
            for (size_t j = 0; j < cols_; ++j) obj_[j] -= cb * tab_[i][j];
            obj_rhs_ -= cb * tab_[i][rhs_col_];
        }
    }

    void pivot(size_t r, size_t c) {
        Rational inv = Rational(1) / tab_[r][c];
        for (size_t j = 0; j <= cols_; ++j) tab_[r][j] *= inv;
        for (size_t i = 0; i < tab_.size(); ++i) {
            if (i == r || tab_[i][c].is_zero()) continue;
            Rational f = tab_[i][c];
            for (size_t j = 0; j <= cols_; ++j) tab_[i][j] -= f * tab_[r][j];
        }
        if (!obj_[c].is_zero()) {
            Rational f = obj_[c];
            for (size_t j = 0; j < cols_; ++j) obj_[j] -= f * tab_[r][j];
            obj_rhs_ -= f * tab_[r][rhs_col_];
        }
        basic_[r] = c;
    }

    // Returns false at optimality (no entering column).
    bool step(bool allow_artificial_entering) {
        size_t enter = cols_;
        for (size_t j = 0; j < cols_; ++j) {
            if (!allow_artificial_entering && is_artificial(j)) continue;
            if (obj_[j].sign() < 0) {
                enter = j;
                break;  // Bland: first improving column
            }
        }
        if (enter == cols_) return false;

        size_t leave = tab_.size();
        Rational best;
        for (size_t i = 0; i < tab_.size(); ++i) {
            if (tab_[i][enter].sign() <= 0) continue;
            Rational ratio = tab_[i][rhs_col_] / tab_[i][enter];
            if (leave == tab_.size() || ratio < best ||
                (ratio == best && basic_[i] < basic_[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == tab_.size())
            throw std::logic_error("simplex: unbounded auxiliary objective");
        pivot(leave, enter);
        return true;
    }

    void phase_one() {
        std::vector<Rational> cost(cols_, Rational(0));
        for (size_t i = 0; i < m_; ++i) cost[art_(i)] = Rational(1);
        load_objective(cost);
        while (step(false)) {
        }
        if ((-obj_rhs_).sign() != 0)
            throw std::logic_error("simplex: auxiliary problem unexpectedly infeasible");
    }

    void remove_dependent_rows() {
        for (size_t i = tab_.size(); i-- > 0;) {
            if (!is_artificial(basic_[i])) continue;
            size_t col = cols_;
            for (size_t j = 0; j < 2 * d_ + 2 + m_; ++j) {
                if (!tab_[i][j].is_zero()) {
                    col = j;
                    break;
                }
            }
            if (col != cols_) {
                pivot(i, col);
            } else {
                tab_.erase(tab_.begin() + static_cast<long>(i));
                basic_.erase(basic_.begin() + static_cast<long>(i));
            }
        }
    }

    Rational var_value(size_t col) const {
        for (size_t i = 0; i < tab_.size(); ++i)
            if (basic_[i] == col) return tab_[i][rhs_col_];
        return Rational(0);
    }

    Rational gamma_now() const { return var_value(gplus_()) - var_value(gminus_()); }

    std::vector<Rational> witness_point() const {
        std::vector<Rational> x(d_);
        for (size_t j = 0; j < d_; ++j) x[j] = var_value(j) - var_value(d_ + j);
        return x;
    }

    FeasibilityResult feasible_result() const {
        FeasibilityResult out;
        out.feasible = true;
        out.witness = witness_point();
        return out;
    }

    // Moves along an improving ray until gamma reaches zero; the point
    // there already satisfies the original inequalities.
    FeasibilityResult ray_result(size_t enter) const {
        Rational gamma = gamma_now();
        Rational rate = -obj_[enter];
        Rational t = gamma.sign() > 0 ? gamma / rate : Rational(0);
        std::vector<Rational> value(cols_, Rational(0));
        for (size_t i = 0; i < tab_.size(); ++i) value[basic_[i]] = tab_[i][rhs_col_];
        value[enter] += t;
        for (size_t i = 0; i < tab_.size(); ++i) value[basic_[i]] -= t * tab_[i][enter];
        FeasibilityResult out;
        out.feasible = true;
        out.witness.resize(d_);
        for (size_t j = 0; j < d_; ++j) out.witness[j] = value[j] - value[d_ + j];
        return out;
    }

    FeasibilityResult phase_two() {
        std::vector<Rational> cost(cols_, Rational(0));
        cost[gplus_()] = Rational(1);
        cost[gminus_()] = Rational(-1);
        load_objective(cost);
        while (true) {
            if (gamma_now().sign() <= 0) return feasible_result();
            size_t enter = cols_;
            for (size_t j = 0; j < cols_; ++j) {
                if (is_artificial(j)) continue;
                if (obj_[j].sign() < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == cols_) break;  // optimal with gamma still positive
            size_t leave = tab_.size();
            Rational best;
            for (size_t i = 0; i < tab_.size(); ++i) {
                if (tab_[i][enter].sign() <= 0) continue;
                Rational ratio = tab_[i][rhs_col_] / tab_[i][enter];
                if (leave == tab_.size() || ratio < best ||
                    (ratio == best && basic_[i] < basic_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == tab_.size()) return ray_result(enter);
            pivot(leave, enter);
        }

        // Optimal gamma is positive: read the multipliers off the
        // artificial columns (they track the inverse basis) and flip the
        // row scaling back out.
        FeasibilityResult out;
        out.feasible = false;
        out.certificate.lambda.assign(m_, Rational(0));
        for (size_t i = 0; i < m_; ++i) {
            Rational y;
            for (size_t k = 0; k < tab_.size(); ++k) {
                if (basic_[k] == gplus_())
                    y += tab_[k][art_(i)];
                else if (basic_[k] == gminus_())
                    y -= tab_[k][art_(i)];
            }
            out.certificate.lambda[i] = Rational(-sigma_[i]) * y;
        }
        return out;
    }
};

}  // namespace

FeasibilityResult check(const LinearSystem& sys) {
    // Constant rows decide immediately; a violated one is its own
    // certificate.
    for (size_t i = 0; i < sys.rows.size(); ++i) {
        const auto& row = sys.rows[i];
        bool constant = true;
        for (const auto& c : row.coeff)
            if (!c.is_zero()) {
                constant = false;
                break;
            }
        if (constant && row.rhs.sign() < 0) {
            FeasibilityResult out;
            out.feasible = false;
            out.certificate.lambda.assign(sys.rows.size(), Rational(0));
            out.certificate.lambda[i] = Rational(1);
            return out;
        }
    }
    if (sys.num_vars == 0 || sys.rows.empty()) {
        FeasibilityResult out;
        out.feasible = true;
        out.witness.assign(static_cast<size_t>(sys.num_vars), Rational(0));
        return out;
    }
    FeasibilityResult out = PhaseOneSimplex(sys).run();
    if (!out.feasible && !verify(sys, out.certificate))
        throw std::logic_error("check: produced certificate failed verification");
    return out;
}

}  // namespace huffbound
