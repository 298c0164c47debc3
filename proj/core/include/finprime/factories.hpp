#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "finprime/classifier.hpp"
#include "finprime/dfa.hpp"

namespace finprime {

Dfa singleton_dfa(const Word& w, const Alphabet& alphabet);
Dfa length_cap_dfa(std::size_t m, const Alphabet& alphabet);
Dfa star_word_dfa(const Word& w, const Alphabet& alphabet);
Dfa letter_count_dfa(Letter a, std::size_t k, const Alphabet& alphabet);
Dfa mod_counter_dfa(std::size_t k);  // over {0,1}, counts the letter 1

Dfa factor_loop_zero(const LinearProfile& p);
Dfa factor_loop_d(const LinearProfile& p, std::size_t d);

// Strictly increasing (i_0, ..., i_m) with i_0 = 0, i_m = n and 1 <= m <= n-1.
using IndexChain = std::vector<std::size_t>;
std::vector<IndexChain> index_chains(std::size_t n);
Dfa factor_chain(const LinearProfile& p, const IndexChain& c);

Dfa factor_letter_position(const LinearProfile& p, Letter a, std::size_t i);
Dfa subsequence_excluder(const Word& w, const Alphabet& alphabet);
Dfa factor_skip(const LinearProfile& p, std::size_t i, std::size_t l);

enum class ExtensionKind { Advance, Rewind, Climb, Return };

struct ExtensionCase {
    ExtensionKind kind = ExtensionKind::Advance;
    std::size_t count = 0;  // occurrences of the last letter from position d+1 on
    std::size_t x = 0;      // length of the trailing run of the last letter
    std::size_t b = 0;
    std::size_t u_count = 0;  // occurrences of the last letter in u
};

std::string extension_kind_name(ExtensionKind kind);
ExtensionCase classify_extension(const LinearProfile& p, std::size_t d, const Word& w);
Dfa factor_extension(const LinearProfile& p, std::size_t d, const Word& w);

}  // namespace finprime
