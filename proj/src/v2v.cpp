#include "huffbound/v2v.hpp"

#include "huffbound/huffman.hpp"

#include <set>
#include <stdexcept>

namespace huffbound {

Dictionary Dictionary::parse(const std::string& text) {
    Dictionary d;
    std::vector<int> word;
    std::string digits;
    auto flush_symbol = [&]() {
        if (digits.empty()) throw std::invalid_argument("Dictionary: symbol without index");
        word.push_back(std::stoi(digits));
        digits.clear();
    };
    auto flush_word = [&]() {
        if (!digits.empty()) flush_symbol();
        if (word.empty()) throw std::invalid_argument("Dictionary: empty word");
        d.words.push_back(word);
        word.clear();
    };
    for (char c : text) {
        if (c == ',') {
            flush_word();
        } else if (c == 'a') {
            if (!digits.empty()) flush_symbol();
        } else if (isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
        } else if (!isspace(static_cast<unsigned char>(c))) {
            throw std::invalid_argument(std::string("Dictionary: unexpected character '") + c +
                                        "'");
        }
    }
    flush_word();
    d.validate();
    return d;
}

std::string Dictionary::word_name(size_t i) const {
    std::string s;
    for (int sym : words.at(i)) s += "a" + std::to_string(sym);
    return s;
}

void Dictionary::validate() const {
    if (words.empty()) throw std::domain_error("Dictionary: no words");
    for (const auto& w : words) {
        if (w.empty()) throw std::domain_error("Dictionary: empty word");
        for (int sym : w)
            if (sym < 1) throw std::domain_error("Dictionary: symbol index must be >= 1");
    }
    for (size_t i = 0; i < words.size(); ++i) {
        for (size_t j = 0; j < words.size(); ++j) {
            if (i == j) continue;
            const auto& a = words[i];
            const auto& b = words[j];
            if (a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin())) {
                if (a.size() == b.size())
                    throw std::domain_error("Dictionary: duplicate word " + word_name(i));
                throw std::domain_error("Dictionary: " + word_name(i) + " is a prefix of " +
                                        word_name(j));
            }
        }
    }
}

bool Dictionary::exhaustive(int alphabet_size) const {
    Rational sum;
    for (const auto& w : words) {
        Rational term(1);
        for (size_t k = 0; k < w.size(); ++k) term /= Rational(alphabet_size);
        sum += term;
    }
    return sum == Rational(1);
}

SubSource word_source(const Dictionary& w, const Source& base) {
    w.validate();
    std::vector<SubSource::Entry> entries;
    for (size_t i = 0; i < w.words.size(); ++i) {
        Rational p(1);
        for (int sym : w.words[i]) {
            if (sym < 1 || static_cast<size_t>(sym) > base.size())
                throw std::domain_error("word_source: symbol a" + std::to_string(sym) +
                                        " outside the base alphabet");
            p *= base.entries()[static_cast<size_t>(sym) - 1].second;
        }
        entries.emplace_back(w.word_name(i), p);
    }
    return SubSource(std::move(entries));
}

ClosedFormReal v2v_redundancy(const Dictionary& w, const Source& base) {
    if (!w.exhaustive(static_cast<int>(base.size())))
        throw std::domain_error("v2v_redundancy: dictionary does not cover the input space");
    SubSource ws = word_source(w, base);
    Source word_src(ws);
    Rational expected_len;
    for (size_t i = 0; i < w.words.size(); ++i)
        expected_len += ws.entries()[i].second * Rational(static_cast<long>(w.words[i].size()));
    ClosedFormReal r = redundancy(huffman_tree(word_src), word_src);
    return r.scaled(Rational(1) / expected_len);
}

V2VBound v2v_prune_bound(const Dictionary& known_words, const Source& base, long max_len,
                         const PruneOptions& opt) {
    known_words.validate();
    for (size_t i = 0; i < known_words.words.size(); ++i)
        if (static_cast<long>(known_words.words[i].size()) > max_len)
            throw std::domain_error("v2v_prune_bound: word " + known_words.word_name(i) +
                                    " longer than the length limit");
    V2VBound out;
    out.words = word_source(known_words, base);
    out.denominator = Rational(max_len);
    for (size_t i = 0; i < known_words.words.size(); ++i) {
        long len = static_cast<long>(known_words.words[i].size());
        out.denominator += out.words.entries()[i].second * Rational(len - max_len);
    }
    if (out.denominator.sign() <= 0)
        throw std::logic_error("v2v_prune_bound: nonpositive expected-length bound");
    out.star = r_min_star(out.words, opt);
    out.value = out.star.bound.value.scaled(Rational(1) / out.denominator);
    return out;
}

}  // namespace huffbound
