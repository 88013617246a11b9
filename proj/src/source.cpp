#include "huffbound/source.hpp"

#include <set>
#include <stdexcept>

namespace huffbound {

SubSource::SubSource(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::set<std::string> seen;
    Rational sum;
    for (const auto& [id, p] : entries_) {
        if (p.sign() <= 0 || p > Rational(1))
            throw std::domain_error("SubSource: probability of '" + id + "' not in (0,1]");
        if (!seen.insert(id).second)
            throw std::domain_error("SubSource: duplicate symbol '" + id + "'");
        sum += p;
    }
    if (sum > Rational(1)) throw std::domain_error("SubSource: probabilities sum above 1");
}

SubSource SubSource::of(const std::vector<Rational>& probs, const std::string& prefix) {
    std::vector<Entry> es;
    es.reserve(probs.size());
    for (size_t i = 0; i < probs.size(); ++i)
        es.emplace_back(prefix + std::to_string(i + 1), probs[i]);
    return SubSource(std::move(es));
}

Rational SubSource::total() const {
    Rational sum;
    for (const auto& e : entries_) sum += e.second;
    return sum;
}

Rational SubSource::min_prob() const {
    if (entries_.empty()) throw std::logic_error("SubSource: min_prob of empty sub-source");
    Rational m = entries_[0].second;
    for (const auto& e : entries_)
        if (e.second < m) m = e.second;
    return m;
}

bool SubSource::contains(const std::string& symbol, const Rational& prob) const {
    for (const auto& [id, p] : entries_)
        if (id == symbol) return p == prob;
    return false;
}

Source::Source(SubSource s, bool allow_single) : s_(std::move(s)) {
    if (s_.total() != Rational(1))
        throw std::domain_error("Source: probabilities must sum to exactly 1");
    if (s_.size() < 2 && !allow_single)
        throw std::domain_error("Source: needs at least 2 symbols");
}

ClosedFormReal entropy(const Source& s) {
    ClosedFormReal h;
    for (const auto& [id, p] : s.entries()) h -= p_log2_p(p);
    return h;
}

SubSource complement(const SubSource& x, const Source& b) {
    for (const auto& [id, p] : x.entries())
        if (!b.as_sub_source().contains(id, p))
            throw std::domain_error("complement: '" + id + "' is not in the source");
    std::vector<SubSource::Entry> rest;
    for (const auto& e : b.entries()) {
        bool in_x = false;
        for (const auto& xe : x.entries())
            if (xe.first == e.first) in_x = true;
        if (!in_x) rest.push_back(e);
    }
    return SubSource(std::move(rest));
}

}  // namespace huffbound
