#include "huffbound/conjecture.hpp"

#include "huffbound/optimize.hpp"
#include "huffbound/prune.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace huffbound {

namespace {

// Largest a with 2^-a >= p.
int floor_neg_log2(const Rational& p) {
    if (p.sign() <= 0 || p > Rational(1)) throw std::domain_error("floor_neg_log2: p outside (0,1]");
    int a = 0;
    while (Rational::pow2(-(a + 1)) >= p) ++a;
    return a;
}

// Smallest a with 2^-a <= p.
int ceil_neg_log2(const Rational& p) {
    int a = 0;
    while (Rational::pow2(-a) > p) ++a;
    return a;
}

ClosedFormReal r_star_single(const Rational& p) {
    return r_min_star(SubSource::of({p})).bound.value;
}

}  // namespace

CodeTree anchor_code(int a, int b) {
    if (a < 1 || b < 1) throw std::domain_error("anchor_code: depths must be >= 1");
    Rational rest = Rational(1) - Rational::pow2(-a) - Rational::pow2(-b);
    if (rest.sign() <= 0)
        throw std::domain_error("anchor_code: 2^-a + 2^-b must be below 1");

    std::vector<std::pair<std::string, int>> depths{{"x1", a}, {"x2", b}};
    // rest is dyadic; one unknown leaf per set bit of its expansion.
    mpz_class den = rest.den();
    unsigned long k = mpz_sizeinbase(den.get_mpz_t(), 2) - 1;  // den == 2^k
    mpz_class num = rest.num();
    int next = 0;
    for (unsigned long e = 1; e <= k; ++e) {
        if (mpz_tstbit(num.get_mpz_t(), k - e))
            depths.emplace_back("y" + std::to_string(next++), static_cast<int>(e));
    }
    return CodeTree::from_depths(std::move(depths));
}

ClosedFormReal conjecture_value(const Rational& p1, const Rational& p2) {
    if (p1.sign() <= 0 || p2.sign() <= 0)
        throw std::domain_error("conjecture_value: probabilities must be positive");
    Rational sum = p1 + p2;
    if (sum > Rational(1)) throw std::domain_error("conjecture_value: probabilities sum above 1");

    if (sum == Rational(1))
        return ClosedFormReal(Rational(1)) + p_log2_p(p1) + p_log2_p(p2);

    const Rational half(1, 2);
    if (p1 >= half || p2 >= half) {
        const Rational& major = p1 >= half ? p1 : p2;
        const Rational& minor = p1 >= half ? p2 : p1;
        Rational rest = Rational(1) - major;
        return r_star_single(major) + r_star_single(minor / rest).scaled(rest);
    }

    std::set<std::pair<int, int>> combos;
    for (int a : {floor_neg_log2(p1), ceil_neg_log2(p1)})
        for (int b : {floor_neg_log2(p2), ceil_neg_log2(p2)})
            if (!(a == 1 && b == 1)) combos.insert({a, b});

    bool have = false;
    ClosedFormReal best;
    SubSource x(std::vector<SubSource::Entry>{{"x1", p1}, {"x2", p2}});
    for (const auto& [a, b] : combos) {
        CodeTree code = anchor_code(a, b);
        BetaDecomposition dec = decompose(x, code, {{"x1", "x1"}, {"x2", "x2"}});
        ClosedFormReal f = min_redundancy_for_code(dec).first;
        if (!have || f < best) {
            best = std::move(f);
            have = true;
        }
    }
    if (!have) throw std::logic_error("conjecture_value: no candidate code");
    return best;
}

std::vector<GridMismatch> check_grid(const Rational& step, const Rational& lo,
                                     const Rational& hi) {
    if (step.sign() <= 0) throw std::domain_error("check_grid: step must be positive");
    std::vector<Rational> points;
    for (Rational p = lo; p <= hi; p += step) points.push_back(p);

    std::map<std::pair<std::string, std::string>, ClosedFormReal> engine_cache;
    auto engine_value = [&](const Rational& a, const Rational& b) {
        auto key = a <= b ? std::make_pair(a.str(), b.str()) : std::make_pair(b.str(), a.str());
        auto it = engine_cache.find(key);
        if (it != engine_cache.end()) return it->second;
        ClosedFormReal v = r_min_star(SubSource::of({a, b})).bound.value;
        engine_cache.emplace(key, v);
        return v;
    };

    std::vector<GridMismatch> mismatches;
    for (const Rational& p1 : points) {
        for (const Rational& p2 : points) {
            if (p1 + p2 > Rational(1)) continue;
            ClosedFormReal conjectured = conjecture_value(p1, p2);
            ClosedFormReal engine = engine_value(p1, p2);
            if (compare(conjectured, engine) != Ordering::Equal)
                mismatches.push_back({p1, p2, std::move(conjectured), std::move(engine)});
        }
    }
    return mismatches;
}

}  // namespace huffbound
