#pragma once

#include "huffbound/closed_form.hpp"
#include "huffbound/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace huffbound {

// Symbols with known exact probabilities. Probabilities are each in (0,1]
// and sum to at most 1; they need not sum to 1.
class SubSource {
public:
    using Entry = std::pair<std::string, Rational>;

    SubSource() = default;
    explicit SubSource(std::vector<Entry> entries);

    // Builds entries named <prefix>1, <prefix>2, ...
    static SubSource of(const std::vector<Rational>& probs, const std::string& prefix = "x");

    const std::vector<Entry>& entries() const { return entries_; }
    size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    Rational total() const;
    Rational min_prob() const;
    bool contains(const std::string& symbol, const Rational& prob) const;

private:
    std::vector<Entry> entries_;
};

// A sub-source whose probabilities sum to exactly 1.
class Source {
public:
    explicit Source(SubSource s, bool allow_single = false);

    const std::vector<SubSource::Entry>& entries() const { return s_.entries(); }
    size_t size() const { return s_.size(); }
    const SubSource& as_sub_source() const { return s_; }

private:
    SubSource s_;
};

ClosedFormReal entropy(const Source& s);

// The symbols of b not in x, with their probabilities.
SubSource complement(const SubSource& x, const Source& b);

}  // namespace huffbound
