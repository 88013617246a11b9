#include "huffbound/closed_form.hpp"

#include <mpfr.h>

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <vector>

namespace huffbound {

namespace {

// Trial division with a 2/3 wheel. Inputs are desk-scale (factors of
// probability numerators and denominators), so this is plenty. A
// primality test shortcuts the tail once the remaining cofactor is a
// prime below 2^64, where the test is known exact.
std::map<unsigned long, long> factor(mpz_class n) {
    if (n <= 0) throw std::domain_error("factor: argument must be positive");
    std::map<unsigned long, long> out;
    auto strip = [&](unsigned long p) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++out[p];
        }
    };
    strip(2);
    strip(3);
    mpz_class limit;
    unsigned long p = 5;
    int step = 2;
    while (n > 1) {
        int prim = mpz_probab_prime_p(n.get_mpz_t(), 50);
        if (prim == 2 || (prim == 1 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64)) {
            if (!n.fits_ulong_p())
                throw std::domain_error("factor: prime factor exceeds 64 bits");
            ++out[n.get_ui()];
            break;
        }
        mpz_ui_pow_ui(limit.get_mpz_t(), p, 2);
        if (limit > n) {
            if (!n.fits_ulong_p())
                throw std::domain_error("factor: prime factor exceeds 64 bits");
            ++out[n.get_ui()];
            break;
        }
        strip(p);
        p += step;
        step = 6 - step;
    }
    return out;
}

bool is_odd_prime(unsigned long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (unsigned long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

// Directed-rounding enclosure of a ClosedFormReal at a given precision.
class Interval {
public:
    explicit Interval(mpfr_prec_t prec) {
        mpfr_init2(lo_, prec);
        mpfr_init2(hi_, prec);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }
    ~Interval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }
    Interval(const Interval&) = delete;
    Interval& operator=(const Interval&) = delete;

    void add_rational(const Rational& q) {
        mpfr_t t;
        mpfr_init2(t, mpfr_get_prec(lo_));
        mpfr_set_q(t, q.raw().get_mpq_t(), MPFR_RNDD);
        mpfr_add(lo_, lo_, t, MPFR_RNDD);
        mpfr_set_q(t, q.raw().get_mpq_t(), MPFR_RNDU);
        mpfr_add(hi_, hi_, t, MPFR_RNDU);
        mpfr_clear(t);
    }

    // Adds q * log2(p), honoring the sign of q in the rounding directions.
    void add_log_term(unsigned long p, const Rational& q) {
        mpfr_prec_t prec = mpfr_get_prec(lo_);
        mpfr_t ld, lu, td, tu;
        mpfr_inits2(prec, ld, lu, td, tu, static_cast<mpfr_ptr>(nullptr));
        mpfr_set_ui(ld, p, MPFR_RNDD);
        mpfr_log2(ld, ld, MPFR_RNDD);
        mpfr_set_ui(lu, p, MPFR_RNDU);
        mpfr_log2(lu, lu, MPFR_RNDU);
        if (q.sign() >= 0) {
            mpfr_mul_q(td, ld, q.raw().get_mpq_t(), MPFR_RNDD);
            mpfr_mul_q(tu, lu, q.raw().get_mpq_t(), MPFR_RNDU);
        } else {
            mpfr_mul_q(td, lu, q.raw().get_mpq_t(), MPFR_RNDD);
            mpfr_mul_q(tu, ld, q.raw().get_mpq_t(), MPFR_RNDU);
        }
        mpfr_add(lo_, lo_, td, MPFR_RNDD);
        mpfr_add(hi_, hi_, tu, MPFR_RNDU);
        mpfr_clears(ld, lu, td, tu, static_cast<mpfr_ptr>(nullptr));
    }

    // +1 if the whole interval is positive, -1 if negative, 0 if it straddles.
    int sign() const {
        if (mpfr_sgn(lo_) > 0) return 1;
        if (mpfr_sgn(hi_) < 0) return -1;
        return 0;
    }

    // Rounded value of 10^digits * x, identical from both endpoints or unset.
    bool scaled_round(int digits, mpz_class& out) const {
        mpfr_prec_t prec = mpfr_get_prec(lo_);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
        mpfr_t a, b;
        mpfr_inits2(prec, a, b, static_cast<mpfr_ptr>(nullptr));
        mpfr_mul_z(a, lo_, scale.get_mpz_t(), MPFR_RNDD);
        mpfr_add_d(a, a, 0.5, MPFR_RNDD);
        mpfr_floor(a, a);
        mpfr_mul_z(b, hi_, scale.get_mpz_t(), MPFR_RNDU);
        mpfr_add_d(b, b, 0.5, MPFR_RNDU);
        mpfr_floor(b, b);
        bool same = mpfr_equal_p(a, b);
        if (same) {
            mpfr_get_z(out.get_mpz_t(), a, MPFR_RNDD);
        }
        mpfr_clears(a, b, static_cast<mpfr_ptr>(nullptr));
        return same;
    }

private:
    mpfr_t lo_, hi_;
};

void fill(Interval& iv, const ClosedFormReal& x) {
    iv.add_rational(x.rational_part());
    for (const auto& [p, q] : x.log_terms()) iv.add_log_term(p, q);
}

std::string format_scaled(const mpz_class& n, int digits) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class a = abs(n);
    mpz_class ip = a / scale, fp = a % scale;
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
    std::string s = (n < 0 ? "-" : "") + ip.get_str();
    s += ".";
    s += frac;
    return s;
}

}  // namespace

void ClosedFormReal::add_term(unsigned long prime, const Rational& coeff) {
    if (coeff.is_zero()) return;
    if (prime == 2) {
        rational_ += coeff;
        return;
    }
    auto it = logs_.find(prime);
    if (it == logs_.end()) {
        logs_.emplace(prime, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) logs_.erase(it);
    }
}

ClosedFormReal ClosedFormReal::log2(const Rational& q) {
    if (q.sign() <= 0) throw std::domain_error("log2: argument must be positive");
    ClosedFormReal out;
    for (const auto& [p, e] : factor(q.num())) out.add_term(p, Rational(e));
    for (const auto& [p, e] : factor(q.den())) out.add_term(p, Rational(-e));
    return out;
}

ClosedFormReal ClosedFormReal::operator-() const {
    ClosedFormReal out;
    out.rational_ = -rational_;
    for (const auto& [p, q] : logs_) out.logs_.emplace(p, -q);
    return out;
}

ClosedFormReal& ClosedFormReal::operator+=(const ClosedFormReal& o) {
    rational_ += o.rational_;
    for (const auto& [p, q] : o.logs_) add_term(p, q);
    return *this;
}

ClosedFormReal& ClosedFormReal::operator-=(const ClosedFormReal& o) {
    rational_ -= o.rational_;
    for (const auto& [p, q] : o.logs_) add_term(p, -q);
    return *this;
}

ClosedFormReal ClosedFormReal::scaled(const Rational& f) const {
    ClosedFormReal out;
    if (f.is_zero()) return out;
    out.rational_ = rational_ * f;
    for (const auto& [p, q] : logs_) out.logs_.emplace(p, q * f);
    return out;
}

std::string ClosedFormReal::str() const {
    std::string s = rational_.str();
    for (const auto& [p, q] : logs_) {
        s += " + (" + q.str() + ")*log2(" + std::to_string(p) + ")";
    }
    return s;
}

ClosedFormReal ClosedFormReal::parse(const std::string& text) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t sep = text.find(" + ", start);
        if (sep == std::string::npos) {
            parts.push_back(text.substr(start));
            break;
        }
        parts.push_back(text.substr(start, sep - start));
        start = sep + 3;
    }
    ClosedFormReal out(Rational::parse(parts[0]));
    unsigned long last_prime = 0;
    for (size_t i = 1; i < parts.size(); ++i) {
        const std::string& t = parts[i];
        if (t.size() < 10 || t[0] != '(')
            throw std::invalid_argument("ClosedFormReal: bad term '" + t + "'");
        size_t close = t.find(")*log2(");
        if (close == std::string::npos || t.back() != ')')
            throw std::invalid_argument("ClosedFormReal: bad term '" + t + "'");
        Rational coeff = Rational::parse(t.substr(1, close - 1));
        std::string ps = t.substr(close + 7, t.size() - close - 8);
        unsigned long p = std::strtoul(ps.c_str(), nullptr, 10);
        if (!is_odd_prime(p))
            throw std::invalid_argument("ClosedFormReal: key must be an odd prime, got '" + ps + "'");
        if (p <= last_prime)
            throw std::invalid_argument("ClosedFormReal: primes must ascend");
        if (coeff.is_zero())
            throw std::invalid_argument("ClosedFormReal: zero coefficient stored");
        last_prime = p;
        out.logs_.emplace(p, coeff);
    }
    return out;
}

std::string ClosedFormReal::decimal(int digits) const {
    if (digits < 1) throw std::invalid_argument("decimal: digits must be >= 1");
    if (logs_.empty()) {
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
        mpz_class a = abs(rational_.num()) * scale;
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), rational_.den().get_mpz_t());
        if (2 * r >= rational_.den()) q += 1;
        if (rational_.sign() < 0) q = -q;
        return format_scaled(q, digits);
    }
    for (mpfr_prec_t prec = 64;; prec *= 2) {
        Interval iv(prec);
        fill(iv, *this);
        mpz_class n;
        if (iv.scaled_round(digits, n)) return format_scaled(n, digits);
        if (prec > (1 << 22))
            throw std::runtime_error("decimal: failed to separate rounding interval");
    }
}

Ordering compare(const ClosedFormReal& a, const ClosedFormReal& b) {
    ClosedFormReal d = a - b;
    if (d.logs_.empty()) {
        int s = d.rational_.sign();
        return s == 0 ? Ordering::Equal : (s < 0 ? Ordering::Less : Ordering::Greater);
    }
    // A nonzero log term makes the difference irrational, so intervals at
    // some precision must separate from zero.
    for (mpfr_prec_t prec = 64;; prec *= 2) {
        Interval iv(prec);
        fill(iv, d);
        int s = iv.sign();
        if (s > 0) return Ordering::Greater;
        if (s < 0) return Ordering::Less;
        if (prec > (1 << 22))
            throw std::runtime_error("compare: failed to separate intervals");
    }
}

ClosedFormReal p_log2_p(const Rational& p) {
    return ClosedFormReal::log2(p).scaled(p);
}

}  // namespace huffbound
