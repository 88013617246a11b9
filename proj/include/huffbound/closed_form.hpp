#pragma once

#include "huffbound/rational.hpp"

#include <map>
#include <string>

namespace huffbound {

enum class Ordering { Less, Equal, Greater };

// Exact real of the form  r + sum_p q_p * log2(p)  with r and every q_p
// rational and the keys p odd primes. Any log2 content on the prime 2 is
// folded into r (log2 of 2 is 1), which makes the stored form unique per
// value: {1} together with {log2 p : p odd prime} is linearly independent
// over the rationals, so equality can be decided by comparing forms.
class ClosedFormReal {
public:
    ClosedFormReal() = default;
    ClosedFormReal(Rational r) : rational_(std::move(r)) {}
    ClosedFormReal(long n) : rational_(n) {}

    // Exact log2 of a positive rational, via prime factorization.
    static ClosedFormReal log2(const Rational& q);

    const Rational& rational_part() const { return rational_; }
    const std::map<unsigned long, Rational>& log_terms() const { return logs_; }

    bool is_zero() const { return logs_.empty() && rational_.is_zero(); }
    bool is_rational() const { return logs_.empty(); }

    ClosedFormReal operator-() const;
    ClosedFormReal& operator+=(const ClosedFormReal& o);
    ClosedFormReal& operator-=(const ClosedFormReal& o);
    ClosedFormReal scaled(const Rational& f) const;

    friend ClosedFormReal operator+(ClosedFormReal a, const ClosedFormReal& b) { return a += b; }
    friend ClosedFormReal operator-(ClosedFormReal a, const ClosedFormReal& b) { return a -= b; }

    // Canonical text form "r + (q)*log2(p) + ...", primes ascending.
    std::string str() const;
    static ClosedFormReal parse(const std::string& text);

    // Correctly rounded to `digits` decimal places. Rational values round
    // ties away from zero; irrational values never tie.
    std::string decimal(int digits) const;

    bool operator==(const ClosedFormReal& o) const {
        return rational_ == o.rational_ && logs_ == o.logs_;
    }
    bool operator!=(const ClosedFormReal& o) const { return !(*this == o); }

private:
    Rational rational_;
    std::map<unsigned long, Rational> logs_;

    void add_term(unsigned long prime, const Rational& coeff);

    friend Ordering compare(const ClosedFormReal& a, const ClosedFormReal& b);
};

Ordering compare(const ClosedFormReal& a, const ClosedFormReal& b);

inline bool operator<(const ClosedFormReal& a, const ClosedFormReal& b) {
    return compare(a, b) == Ordering::Less;
}
inline bool operator<=(const ClosedFormReal& a, const ClosedFormReal& b) {
    return compare(a, b) != Ordering::Greater;
}
inline bool operator>(const ClosedFormReal& a, const ClosedFormReal& b) {
    return compare(a, b) == Ordering::Greater;
}
inline bool operator>=(const ClosedFormReal& a, const ClosedFormReal& b) {
    return compare(a, b) != Ordering::Less;
}

// p * log2(p) for a positive rational p; the building block of entropies.
ClosedFormReal p_log2_p(const Rational& p);

}  // namespace huffbound
