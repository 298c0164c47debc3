#pragma once

// Brute-force reference implementations used only by the tests. They touch a Dfa through its
// transition table and nothing else from the library.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "finprime/dfa.hpp"

namespace testing_oracle {

using finprime::Alphabet;
using finprime::Dfa;
using finprime::Letter;
using finprime::State;
using finprime::Word;

inline bool naive_accepts(const Dfa& a, const Word& w) {
    State q = a.initial();
    for (Letter x : w) q = a.next(q, x);
    return a.accepting(q);
}

// All words over k letters of length <= max_len, ordered by length then lexicographically.
inline std::vector<Word> all_words(std::size_t k, std::size_t max_len) {
    std::vector<Word> out{Word{}};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i)
            for (Letter x = 0; x < k; ++x) {
                Word w = out[i];
                w.push_back(x);
                out.push_back(std::move(w));
            }
        begin = end;
    }
    return out;
}

inline std::set<Word> language_upto(const Dfa& a, std::size_t max_len) {
    std::set<Word> out;
    for (const Word& w : all_words(a.letters(), max_len))
        if (naive_accepts(a, w)) out.insert(w);
    return out;
}

// Trie automaton of a finite word set plus one rejecting sink.
inline Dfa trie_dfa(const Alphabet& alphabet, const std::vector<Word>& words) {
    std::vector<std::vector<long>> kids(1, std::vector<long>(alphabet.size(), -1));
    std::vector<char> acc(1, 0);
    for (const Word& w : words) {
        std::size_t q = 0;
        for (Letter x : w) {
            if (kids[q][x] < 0) {
                kids[q][x] = static_cast<long>(kids.size());
                kids.emplace_back(alphabet.size(), -1);
                acc.push_back(0);
            }
            q = static_cast<std::size_t>(kids[q][x]);
        }
        acc[q] = 1;
    }
    const State sink = static_cast<State>(kids.size());
    Dfa d(alphabet, kids.size() + 1);
    for (State q = 0; q <= sink; ++q)
        for (Letter x = 0; x < alphabet.size(); ++x)
            d.set_transition(q, x, q == sink || kids[q][x] < 0 ? sink : static_cast<State>(kids[q][x]));
    for (State q = 0; q < sink; ++q) d.set_accepting(q, acc[q] != 0);
    return d;
}

// Myhill-Nerode index of a finite language whose words are no longer than max_len: the number of
// distinct residuals u^{-1}L, the empty one included.
inline std::size_t residual_index(const Dfa& a, std::size_t max_len) {
    auto lang = language_upto(a, max_len);
    std::set<std::set<Word>> residuals;
    for (const Word& u : all_words(a.letters(), max_len + 1)) {
        std::set<Word> r;
        for (const Word& w : lang)
            if (w.size() >= u.size() && std::equal(u.begin(), u.end(), w.begin()))
                r.insert(Word(w.begin() + static_cast<std::ptrdiff_t>(u.size()), w.end()));
        residuals.insert(std::move(r));
    }
    return residuals.size();
}

inline bool is_subsequence(const Word& small, const Word& big) {
    std::size_t i = 0;
    for (Letter x : big)
        if (i < small.size() && small[i] == x) ++i;
    return i == small.size();
}

// CEP straight from the definition on the explicit language (n = longest word length): every
// maximal-length word has a compression none of whose nonempty extensions lies in L.
inline bool brute_cep(const std::set<Word>& lang, std::size_t n) {
    auto extension_in_lang = [&](const Word& c) {
        for (const Word& w : lang)
            if (w.size() > c.size() && std::equal(c.begin(), c.end(), w.begin())) return true;
        return false;
    };
    for (const Word& w : lang) {
        if (w.size() != n) continue;
        bool found = false;
        for (std::size_t i = 0; i + 2 <= n && !found; ++i)
            for (std::size_t l = 2; l <= n - i && !found; ++l) {
                Word c(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
                c.insert(c.end(), w.begin() + static_cast<std::ptrdiff_t>(i + l - 1), w.end());
                found = !extension_in_lang(c);
            }
        if (!found) return false;
    }
    return true;
}

}  // namespace testing_oracle
