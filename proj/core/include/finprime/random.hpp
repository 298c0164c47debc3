#pragma once

#include <cstddef>
#include <random>

#include "finprime/dfa.hpp"
#include "finprime/gadgets.hpp"

namespace finprime {

using Rng = std::mt19937_64;

Dfa random_dfa(Rng& rng, std::size_t states, const Alphabet& alphabet, double accept_probability = 0.5);

// Acyclic: states 0..k-2 move strictly forward or into the rejecting sink k-1.
Dfa random_adfa(Rng& rng, std::size_t states, const Alphabet& alphabet, double accept_probability = 0.5);

// A minimal linear ADFA with longest word length n. With `safety` every q_0..q_n accepts.
Dfa random_linear(Rng& rng, std::size_t n, const Alphabet& alphabet, bool safety, double accept_probability = 0.5);

Digraph random_digraph(Rng& rng, std::size_t max_nodes);

}  // namespace finprime
