#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "finprime/dfa.hpp"

namespace finprime {

struct Digraph {
    std::string name = "G";
    std::size_t nodes = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // out-edges keep their listed order
    std::size_t s = 0;
    std::size_t t = 0;
};

Digraph parse_digraph(std::string_view text);
std::string serialize_digraph(const Digraph& g);
void validate_digraph(const Digraph& g);
bool reachable(const Digraph& g);  // t from s

Dfa minimality_gadget(const Digraph& g);
Dfa sprime_gadget(const Digraph& g);
Dfa primefin_gadget(const Dfa& a);

// Replaces the 0-loop of the accepting sink by an entry into a mod-k counter over the letter 1.
Dfa counter_splice(const Dfa& a, std::size_t k);
Dfa prime2_gadget(const Dfa& a);

}  // namespace finprime
