#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "finprime/dfa.hpp"

namespace finprime {

// Canonical form of a minimal linear ADFA. State i of `base` is q_i; q_{n+1} is the rejecting sink.
struct LinearProfile {
    std::size_t n = 0;
    Alphabet alphabet;
    std::vector<State> next;  // next[i * |Σ| + σ] = j  iff  σ ∈ Σ_{i,j}
    std::vector<char> accepting;
    Dfa base;

    std::size_t letters() const { return alphabet.size(); }
    std::size_t sink() const { return n + 1; }
    State step(std::size_t i, Letter a) const { return next[i * letters() + a]; }
    bool in_sigma(std::size_t i, std::size_t j, Letter a) const { return step(i, a) == j; }
    std::vector<Letter> sigma(std::size_t i, std::size_t j) const;
    bool is_accepting(std::size_t i) const { return accepting[i] != 0; }
};

std::optional<LinearProfile> linear_profile(const Dfa& a);

bool is_safety(const Dfa& a);
bool is_cosafety(const Dfa& a);
bool is_simple_cosafety(const Dfa& a);

std::optional<Letter> uniform_max_word_letter(const LinearProfile& p);

// Largest i in 1..n with σ ∉ Σ_{i-1,i}.
std::optional<std::size_t> last_gap_position(const LinearProfile& p, Letter a);

struct CepResult {
    bool has_cep = false;
    std::optional<Word> breaching;  // set when has_cep is false
};
CepResult has_cep(const LinearProfile& p);

std::optional<std::size_t> interior_rejecting_state(const LinearProfile& p);

}  // namespace finprime
