#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "finprime/dfa.hpp"

namespace finprime {

enum class ProductMode { Intersect, Union, Difference };

State run(const Dfa& a, const Word& w);
State run_from(const Dfa& a, State q, const Word& w);
bool accepts(const Dfa& a, const Word& w);

Dfa product(const Dfa& a, const Dfa& b, ProductMode mode);
Dfa complement(const Dfa& a);
std::vector<State> reachable_states(const Dfa& a);

Dfa minimize(const Dfa& a);
std::size_t index_of(const Dfa& a);

struct Equivalence {
    bool equivalent = false;
    std::optional<Word> witness;  // shortest, then lexicographically least
};
Equivalence equivalent(const Dfa& a, const Dfa& b);

// L(a) ⊆ L(b), without building the product automaton.
bool is_subset(const Dfa& a, const Dfa& b);

struct Emptiness {
    bool empty = true;
    std::optional<Word> witness;
};
Emptiness is_empty(const Dfa& a);

bool is_finite_language(const Dfa& a);

struct LongestWord {
    enum class Kind { None, Finite, Infinite };
    Kind kind = Kind::None;
    std::size_t length = 0;

    bool finite() const { return kind == Kind::Finite; }
};
LongestWord longest_word_length(const Dfa& a);

std::vector<Word> enumerate_language(const Dfa& a, std::size_t max_len);

// States from which some accepting state is reachable.
std::vector<char> live_states(const Dfa& a);

// Trivial language automata over an alphabet.
Dfa universal_dfa(const Alphabet& alphabet);
Dfa empty_dfa(const Alphabet& alphabet);

}  // namespace finprime
