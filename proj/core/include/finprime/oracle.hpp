#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "finprime/classifier.hpp"
#include "finprime/dfa.hpp"
#include "finprime/primality.hpp"

namespace finprime {

struct OracleLimits {
    std::size_t max_factor_states = 4;
    std::size_t max_enumerated_dfas = 2000000;
    std::size_t max_check_length = 0;  // 0 means 2 * ind
    std::size_t max_accumulator_states = 10000;
};

// k^{k|Σ|} 2^k, saturating at SIZE_MAX.
std::size_t dfa_count(std::size_t k, std::size_t letters);

// Every complete DFA with exactly k states and initial state 0, in lexicographic order of
// (transition table, accepting set).
void enumerate_dfas(std::size_t k, const Alphabet& alphabet, const std::function<void(const Dfa&)>& visit,
                    const OracleLimits& limits = {});

// The distinct minimal DFAs with at most k states, cached per (k, alphabet).
const std::vector<Dfa>& factor_pool(std::size_t k, const Alphabet& alphabet, const OracleLimits& limits = {});

Dfa alpha_intersection(const Dfa& a, const OracleLimits& limits = {});
Verdict oracle_primality(const Dfa& a, const OracleLimits& limits = {});
bool oracle_cep(const LinearProfile& p, std::size_t max_words = 1000000);

struct VerifyResult {
    bool ok = false;
    std::string diagnostic;
    std::optional<Word> word;
};
VerifyResult verify_decomposition(const Dfa& a, const Decomposition& d, const OracleLimits& limits = {});
bool verify_witness(const Dfa& a, const Word& w, const OracleLimits& limits = {});

// Distinct minimal DFAs of nonempty finite languages with index <= max_index, built from
// topologically numbered acyclic automata.
std::vector<Dfa> enumerate_minimal_adfas(std::size_t max_index, const Alphabet& alphabet);

}  // namespace finprime
