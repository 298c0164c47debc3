#include "finprime/random.hpp"

#include <algorithm>

namespace finprime {
namespace {

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

}  // namespace

Dfa random_dfa(Rng& rng, std::size_t states, const Alphabet& alphabet, double accept_probability) {
    Dfa a(alphabet, states, 0);
    for (State q = 0; q < states; ++q) {
        a.set_accepting(q, coin(rng, accept_probability));
        for (Letter x = 0; x < alphabet.size(); ++x) a.set_transition(q, x, static_cast<State>(pick(rng, 0, states - 1)));
    }
    a.set_name("random");
    return a;
}

Dfa random_adfa(Rng& rng, std::size_t states, const Alphabet& alphabet, double accept_probability) {
    if (states < 2) throw InputError("an acyclic automaton with a sink needs two states");
    const State sink = static_cast<State>(states - 1);
    Dfa a(alphabet, states, 0);
    for (State q = 0; q < sink; ++q) {
        a.set_accepting(q, coin(rng, accept_probability));
        for (Letter x = 0; x < alphabet.size(); ++x) a.set_transition(q, x, static_cast<State>(pick(rng, q + 1, sink)));
    }
    for (Letter x = 0; x < alphabet.size(); ++x) a.set_transition(sink, x, sink);
    a.set_name("random");
    return a;
}

Dfa random_linear(Rng& rng, std::size_t n, const Alphabet& alphabet, bool safety, double accept_probability) {
    const std::size_t k = alphabet.size();
    Dfa a(alphabet, n + 2, 0);
    const State sink = static_cast<State>(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        // one letter is forced onto q_{i+1}; the others land anywhere strictly ahead
        Letter forced = static_cast<Letter>(pick(rng, 0, k - 1));
        for (Letter x = 0; x < k; ++x)
            a.set_transition(static_cast<State>(i), x, x == forced ? static_cast<State>(i + 1) : static_cast<State>(pick(rng, i + 1, n + 1)));
        a.set_accepting(static_cast<State>(i), safety || coin(rng, accept_probability));
    }
    for (Letter x = 0; x < k; ++x) {
        a.set_transition(static_cast<State>(n), x, sink);
        a.set_transition(sink, x, sink);
    }
    a.set_accepting(static_cast<State>(n));
    a.set_name("linear");
    return a;
}

Digraph random_digraph(Rng& rng, std::size_t max_nodes) {
    Digraph g;
    g.name = "random";
    g.nodes = pick(rng, 2, std::max<std::size_t>(2, max_nodes));
    for (std::size_t u = 0; u < g.nodes; ++u) {
        std::size_t degree = pick(rng, 0, 2);
        std::vector<std::size_t> targets;
        while (targets.size() < degree) {
            std::size_t v = pick(rng, 0, g.nodes - 1);
            if (std::find(targets.begin(), targets.end(), v) == targets.end()) targets.push_back(v);
        }
        for (std::size_t v : targets) g.edges.emplace_back(u, v);
    }
    g.s = pick(rng, 0, g.nodes - 1);
    g.t = pick(rng, 0, g.nodes - 1);
    return g;
}

}  // namespace finprime
