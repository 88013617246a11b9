#include "huffbound/rational.hpp"

#include <stdexcept>

namespace huffbound {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(std::move(num), std::move(den));
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("Rational: empty literal");

    bool neg = false;
    size_t pos = 0;
    if (s[pos] == '+' || s[pos] == '-') {
        neg = (s[pos] == '-');
        ++pos;
    }
    std::string body = s.substr(pos);
    if (body.empty()) throw std::invalid_argument("Rational: bad literal '" + text + "'");

    auto digits_only = [](const std::string& d) {
        if (d.empty()) return false;
        for (char c : d)
            if (!isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };

    mpz_class num, den;
    auto slash = body.find('/');
    auto dot = body.find('.');
    if (slash != std::string::npos) {
        std::string n = body.substr(0, slash), d = body.substr(slash + 1);
        if (!digits_only(n) || !digits_only(d))
            throw std::invalid_argument("Rational: bad fraction '" + text + "'");
        num = mpz_class(n);
        den = mpz_class(d);
        if (den == 0) throw std::domain_error("Rational: zero denominator in '" + text + "'");
    } else if (dot != std::string::npos) {
        std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
        if (ip.empty() && fp.empty())
            throw std::invalid_argument("Rational: bad decimal '" + text + "'");
        if ((!ip.empty() && !digits_only(ip)) || (!fp.empty() && !digits_only(fp)))
            throw std::invalid_argument("Rational: bad decimal '" + text + "'");
        num = ip.empty() ? mpz_class(0) : mpz_class(ip);
        den = 1;
        for (char c : fp) {
            num = num * 10 + (c - '0');
            den *= 10;
        }
    } else {
        if (!digits_only(body)) throw std::invalid_argument("Rational: bad integer '" + text + "'");
        num = mpz_class(body);
        den = 1;
    }
    if (neg) num = -num;
    return Rational(std::move(num), std::move(den));
}

Rational Rational::pow2(long k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k >= 0 ? k : -k));
    return k >= 0 ? Rational(p, 1) : Rational(1, p);
}

mpz_class ceil_of(const Rational& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.num().get_mpz_t(), q.den().get_mpz_t());
    return r;
}

}  // namespace huffbound
