#pragma once

#include <functional>

#include "finprime/dfa.hpp"

namespace testing_oracle {

// Every minimal linear ADFA with longest word length n over `alphabet`: state i < n sends each
// letter strictly forward, at least one letter to i+1; q_{n+1} is the sink. `acceptance` lists the
// accepting flags of q_0..q_{n-1}; q_n always accepts.
inline void for_each_linear(std::size_t n, const finprime::Alphabet& alphabet, const std::vector<char>& acceptance,
                            const std::function<void(const finprime::Dfa&)>& visit) {
    using finprime::State;
    const std::size_t k = alphabet.size();
    finprime::Dfa a(alphabet, n + 2);
    for (std::size_t i = 0; i < n; ++i) a.set_accepting(static_cast<State>(i), acceptance[i] != 0);
    a.set_accepting(static_cast<State>(n));
    for (std::size_t x = 0; x < k; ++x) {
        a.set_transition(static_cast<State>(n), static_cast<finprime::Letter>(x), static_cast<State>(n + 1));
        a.set_transition(static_cast<State>(n + 1), static_cast<finprime::Letter>(x), static_cast<State>(n + 1));
    }
    std::function<void(std::size_t, std::size_t, bool)> rec = [&](std::size_t i, std::size_t x, bool forward) {
        if (i == n) {
            visit(a);
            return;
        }
        if (x == k) {
            if (forward) rec(i + 1, 0, false);
            return;
        }
        for (std::size_t j = i + 1; j <= n + 1; ++j) {
            a.set_transition(static_cast<State>(i), static_cast<finprime::Letter>(x), static_cast<State>(j));
            rec(i, x + 1, forward || j == i + 1);
        }
    };
    rec(0, 0, false);
}

}  // namespace testing_oracle
